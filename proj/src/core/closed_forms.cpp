#include "cutcx/closed_forms.hpp"

#include <algorithm>
#include <string>

#include "cutcx/bad_complements.hpp"
#include "cutcx/errors.hpp"

namespace cutcx {
namespace {

void require_diagonal(int r) {
  if (r < 3) throw InvalidArgument("diagonal index r must be at least 3, got " + std::to_string(r));
}

BigInt as_integer(const Rational& value, const char* what) {
  if (value.get_den() != 1) {
    throw InternalError(std::string(what) + " is not an integer: " + to_string(value));
  }
  return value.get_num();
}

BigInt alternating_sum(int r, const std::vector<BigInt>& values) {
  BigInt sum = 0;
  for (int i = 0; i <= r; ++i) {
    const BigInt term = binomial(r, i) * values[static_cast<std::size_t>(i)];
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace

BigInt beta_closed(int k, int n) {
  if (k < 2 || n < k + 2) {
    throw InvalidArgument("beta_closed needs k >= 2 and n >= k+2, got k=" + std::to_string(k) +
                          " n=" + std::to_string(n));
  }
  return binomial(n - 1, k - 1) - z_count(k, n) + (n - k);
}

BigInt beta_k4(int n) {
  if (n < 7) throw InvalidArgument("beta_k4 needs n >= 7, got " + std::to_string(n));
  const int u = n - 7;
  return 3 + 8 * binomial(u, 1) + 6 * binomial(u, 2) + binomial(u, 3);
}

BigInt beta_k5(int n) {
  if (n < 8) throw InvalidArgument("beta_k5 needs n >= 8, got " + std::to_string(n));
  const int v = n - 8;
  return 6 + 20 * binomial(v, 1) + 21 * binomial(v, 2) + 7 * binomial(v, 3) + binomial(v, 4);
}

RatPolynomial diagonal_poly(int r) {
  require_diagonal(r);
  const auto ur = static_cast<std::size_t>(r);
  RatPolynomial b = RatPolynomial::binomial(r - 1, ur) + RatPolynomial::constant(r);
  for (std::size_t j = 0; j <= ur; ++j) {
    b = b - Rational(r - static_cast<int>(j) + 1) * RatPolynomial::binomial(-1, j);
  }
  if (b.degree() != r - 1) {
    throw InternalError("B_" + std::to_string(r) + " has degree " + std::to_string(b.degree()));
  }
  // Integer values at deg+1 consecutive integers imply integer values
  // everywhere (Newton form in the binomial basis).
  for (int k = 0; k <= r - 1; ++k) as_integer(b.evaluate(Rational(k)), "B_r at an integer point");
  return b;
}

Rational leading_coefficient(int r) {
  require_diagonal(r);
  BigInt factorial = 1;
  for (int i = 2; i <= r - 1; ++i) factorial *= i;
  Rational out(BigInt(r - 2), factorial);
  out.canonicalize();
  return out;
}

bool RecurrenceCertificate::topological_holds() const {
  return std::all_of(topological.begin(), topological.end(),
                     [](const RecurrenceIdentity& id) { return id.alternating_sum == 0; });
}

bool RecurrenceCertificate::polynomial_extension_holds() const {
  return std::all_of(polynomial_extension.begin(), polynomial_extension.end(),
                     [](const RecurrenceIdentity& id) { return id.alternating_sum == 0; });
}

RecurrenceCertificate verify_recurrence(int r, int k_max) {
  require_diagonal(r);
  if (k_max < r + 3) {
    throw InvalidArgument("k_max must be at least r+3=" + std::to_string(r + 3));
  }
  const RatPolynomial b = diagonal_poly(r);
  RecurrenceCertificate cert;
  cert.r = r;
  cert.k_max = k_max;
  cert.symbolic_zero = backward_diff(b, static_cast<std::size_t>(r)).is_zero();

  for (int k = r + 3; k <= k_max; ++k) {
    RecurrenceIdentity id{k, {}, 0};
    for (int i = 0; i <= r; ++i) id.values.push_back(beta_closed(k - i, k - i + r));
    id.alternating_sum = alternating_sum(r, id.values);
    cert.topological.push_back(std::move(id));
  }
  for (int k = -k_max; k <= k_max; ++k) {
    RecurrenceIdentity id{k, {}, 0};
    for (int i = 0; i <= r; ++i) {
      id.values.push_back(as_integer(b.evaluate(Rational(k - i)), "B_r at an integer point"));
    }
    id.alternating_sum = alternating_sum(r, id.values);
    cert.polynomial_extension.push_back(std::move(id));
  }
  return cert;
}

BigInt sharp_difference(int r) {
  const RatPolynomial d = backward_diff(diagonal_poly(r), static_cast<std::size_t>(r - 1));
  if (!d.is_constant()) {
    throw InternalError("nabla^(r-1) B_" + std::to_string(r) + " is not constant: " + d.to_string());
  }
  return as_integer(d.coefficient(0), "nabla^(r-1) B_r");
}

std::vector<BigInt> RationalGenFun::series(std::size_t terms) const {
  std::vector<BigInt> c(terms, BigInt(0));
  const auto& num = numerator.coefficients();
  for (std::size_t i = 0; i < std::min(terms, num.size()); ++i) c[i] = num[i];
  // Each factor 1/(1-x) is a running sum.
  for (int e = 0; e < pole_order; ++e) {
    for (std::size_t i = 1; i < terms; ++i) c[i] += c[i - 1];
  }
  return c;
}

RationalGenFun RationalGenFun::canonical() const {
  RationalGenFun out = *this;
  if (out.numerator.is_zero()) {
    out.pole_order = 0;
    return out;
  }
  while (out.pole_order > 0) {
    auto q = out.numerator.divide_by_one_minus_x();
    if (!q) break;
    out.numerator = std::move(*q);
    --out.pole_order;
  }
  return out;
}

RationalGenFun diagonal_genfun(int r) {
  require_diagonal(r);
  const auto ur = static_cast<std::size_t>(r);
  IntPolynomial h;
  for (std::size_t i = 1; i <= ur; ++i) h = h + IntPolynomial::monomial(1, i);
  h = h + IntPolynomial::monomial(r, 1) * IntPolynomial::one_minus_x_pow(ur - 1);
  for (std::size_t j = 0; j + 1 <= ur; ++j) {
    h = h - IntPolynomial::monomial(r - static_cast<int>(j) + 1, j + 1) *
                IntPolynomial::one_minus_x_pow(ur - j - 1);
  }
  return RationalGenFun{std::move(h), r}.canonical();
}

IntPolynomial h_polynomial(int k, int n) {
  if (k < 2 || k > n - 2) {
    throw InvalidArgument("h_polynomial needs 2 <= k <= n-2, got k=" + std::to_string(k) +
                          " n=" + std::to_string(n));
  }
  const int r = n - k;
  std::vector<BigInt> h(static_cast<std::size_t>(r + 1), BigInt(0));
  for (int i = 0; i <= r; ++i) {
    BigInt hi = 0;
    for (int p = 0; p <= i; ++p) {
      const BigInt term = binomial(n, p) * binomial(r - p, i - p);
      if ((i - p) % 2 == 0) {
        hi += term;
      } else {
        hi -= term;
      }
    }
    h[static_cast<std::size_t>(i)] = hi;
  }
  h[static_cast<std::size_t>(r - 1)] -= r;
  h[static_cast<std::size_t>(r)] += r - z_count(k, n);
  return IntPolynomial(std::move(h));
}

RationalGenFun hilbert_series(int k, int n) { return RationalGenFun{h_polynomial(k, n), n - k}; }

const BigInt& BettiTable::at(int k, int r) const {
  const auto it = entries.find({k, r});
  if (it == entries.end()) {
    throw InvalidArgument("table has no entry for k=" + std::to_string(k) +
                          " r=" + std::to_string(r));
  }
  return it->second;
}

BettiTable closed_form_table(int r_min, int r_max, int k_min, int k_max) {
  if (r_min < 3 || r_max < r_min || k_min < 2 || k_max < k_min) {
    throw InvalidArgument("table ranges need 3 <= r_min <= r_max and 2 <= k_min <= k_max");
  }
  BettiTable t{r_min, r_max, k_min, k_max, Provenance::kClosedForm, {}};
  for (int r = r_min; r <= r_max; ++r) {
    for (int k = k_min; k <= k_max; ++k) t.entries.emplace(std::make_pair(k, r), beta_closed(k, k + r));
  }
  return t;
}

}  // namespace cutcx
