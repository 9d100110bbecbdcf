#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cutcx/bigint.hpp"
#include "cutcx/polynomial.hpp"

namespace cutcx {

// Top reduced Betti number of Delta_k(P_n^2) for k >= 2, n >= k+2:
//   C(n-1, k-1) - z_{k,n} + (n-k).
// Combinatorial binomials throughout. n = k+2 gives 0.
BigInt beta_closed(int k, int n);

// Binomial-basis expansions centred at the first admissible n:
//   beta_k4(n) = 3 + 8 C(n-7,1) + 6 C(n-7,2) + C(n-7,3),          n >= 7
//   beta_k5(n) = 6 + 20 C(n-8,1) + 21 C(n-8,2) + 7 C(n-8,3) + C(n-8,4), n >= 8
BigInt beta_k4(int n);
BigInt beta_k5(int n);

// B_r(k) = beta(k, k+r) as a polynomial in k, r >= 3, built with polynomial
// binomials:  binom(k+r-1, r) - sum_{j=0}^{r} (r-j+1) binom(k-1, j) + r.
// Checked at construction to have degree r-1 and integer values.
RatPolynomial diagonal_poly(int r);

// (r-2)/(r-1)!, the coefficient of k^{r-1} in B_r.
Rational leading_coefficient(int r);

// One evaluated instance of sum_{i=0}^{r} (-1)^i C(r,i) B_r(k-i).
struct RecurrenceIdentity {
  int k = 0;
  std::vector<BigInt> values;  // B_r(k), B_r(k-1), ..., B_r(k-r)
  BigInt alternating_sum;
};

struct RecurrenceCertificate {
  int r = 0;
  int k_max = 0;
  bool symbolic_zero = false;  // nabla^r B_r is the zero polynomial
  // r+3 <= k <= k_max, each B_r value from beta_closed
  std::vector<RecurrenceIdentity> topological;
  // -k_max <= k <= k_max, each value from the polynomial extension of B_r
  std::vector<RecurrenceIdentity> polynomial_extension;

  bool topological_holds() const;
  bool polynomial_extension_holds() const;
  bool holds() const { return symbolic_zero && topological_holds() && polynomial_extension_holds(); }
};

// Requires r >= 3 and k_max >= r+3.
RecurrenceCertificate verify_recurrence(int r, int k_max);

// nabla^{r-1} B_r, which must be the constant r-2. Throws InternalError if the
// computed difference is not constant.
BigInt sharp_difference(int r);

// numerator(x) / (1-x)^pole_order.
struct RationalGenFun {
  IntPolynomial numerator;
  int pole_order = 0;

  // Coefficients of x^0 .. x^{terms-1}.
  std::vector<BigInt> series(std::size_t terms) const;
  // Cancels common factors of (1-x) so the pole order is exact.
  RationalGenFun canonical() const;

  friend bool operator==(const RationalGenFun&, const RationalGenFun&) = default;
};

// G_r(x) = sum_{k>=1} B_r(k) x^k = H_r(x)/(1-x)^r with
//   H_r(x) = x(1 + ... + x^{r-1}) + r x (1-x)^{r-1}
//            - sum_{j=0}^{r-1} (r-j+1) x^{j+1} (1-x)^{r-j-1}.
RationalGenFun diagonal_genfun(int r);

// h-polynomial of Delta_k(P_n^2), 2 <= k <= n-2, coefficientwise:
//   h_i = sum_{p<=i} (-1)^{i-p} C(n,p) C(r-p, i-p) - r[i=r-1] + (r - z_{k,n})[i=r].
IntPolynomial h_polynomial(int k, int n);

// Stanley-Reisner Hilbert series h(t)/(1-t)^r.
RationalGenFun hilbert_series(int k, int n);

enum class Provenance { kClosedForm, kHomologyOracle };

// beta(k, k+r) over a rectangular (r, k) range.
struct BettiTable {
  int r_min = 0;
  int r_max = 0;
  int k_min = 0;
  int k_max = 0;
  Provenance provenance = Provenance::kClosedForm;
  std::map<std::pair<int, int>, BigInt> entries;  // key (k, r)

  const BigInt& at(int k, int r) const;
};

// Requires 3 <= r_min <= r_max and 2 <= k_min <= k_max.
BettiTable closed_form_table(int r_min, int r_max, int k_min, int k_max);

}  // namespace cutcx
