#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cutcx/bigint.hpp"

namespace cutcx {

// Dense univariate polynomial with arbitrary-precision integer coefficients.
// coefficients()[d] is the coefficient of x^d; trailing zeros are trimmed, so
// the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  static IntPolynomial monomial(const BigInt& c, std::size_t degree);
  // (1 - x)^e
  static IntPolynomial one_minus_x_pow(std::size_t e);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t degree) const;
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  BigInt evaluate(const BigInt& x) const;

  // Exact quotient by (1 - x), or nullopt when (1 - x) does not divide.
  std::optional<IntPolynomial> divide_by_one_minus_x() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Human form, highest power last: "1 + 7x + 18x^2 + 15x^3".
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Dense univariate polynomial with exact rational coefficients, canonical
// (reduced fractions, trimmed).
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coeffs);
  static RatPolynomial constant(const Rational& c);
  static RatPolynomial from_int(const IntPolynomial& p);
  // The binomial polynomial in the indeterminate k:
  //   binom(k + a, m) = (k+a)(k+a-1)...(k+a-m+1) / m!
  // This is the polynomial convention, distinct from the combinatorial
  // binomial(): it is nonzero for negative arguments.
  static RatPolynomial binomial(std::int64_t a, std::size_t m);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t degree) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // Zero for the zero polynomial.
  Rational leading_coefficient() const;

  Rational evaluate(const Rational& x) const;
  // p(k + shift)
  RatPolynomial shifted(std::int64_t shift) const;

  RatPolynomial operator-() const;
  friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const Rational& c, const RatPolynomial& p);
  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(char var = 'k') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// (nabla^s p)(k), with (nabla f)(k) = f(k) - f(k-1). Exact.
RatPolynomial backward_diff(const RatPolynomial& p, std::size_t s);

// Coefficient list, lowest degree first: "[1, -3/2, 1/2]"; "[]" for zero.
std::string coefficient_list(const IntPolynomial& p);
std::string coefficient_list(const RatPolynomial& p);

}  // namespace cutcx
