#include "cutcx/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace cutcx {
namespace {

template <class T>
void trim_zeros(std::vector<T>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

template <class T>
std::vector<T> add(const std::vector<T>& a, const std::vector<T>& b, int sign) {
  std::vector<T> out(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (sign > 0) {
      out[i] += b[i];
    } else {
      out[i] -= b[i];
    }
  }
  return out;
}

template <class T>
std::vector<T> multiply(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<T> out(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Renders sum c_d var^d with the lowest degree first.
template <class T, class Str>
std::string pretty(const std::vector<T>& c, char var, Str&& str) {
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < c.size(); ++d) {
    if (c[d] == 0) continue;
    const bool negative = c[d] < 0;
    const T mag = negative ? T(-c[d]) : c[d];
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      out << str(mag);
      continue;
    }
    if (mag != 1) {
      const std::string text = str(mag);
      if (text.find('/') != std::string::npos) {
        out << '(' << text << ')';
      } else {
        out << text;
      }
    }
    out << var;
    if (d > 1) out << '^' << d;
  }
  return out.str();
}

template <class T, class Str>
std::string list(const std::vector<T>& c, Str&& str) {
  std::string out = "[";
  for (std::size_t d = 0; d < c.size(); ++d) {
    if (d != 0) out += ", ";
    out += str(c[d]);
  }
  out += ']';
  return out;
}

}  // namespace

// ---- IntPolynomial --------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() { trim_zeros(coeffs_); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_minus_x_pow(std::size_t e) {
  std::vector<BigInt> v(e + 1);
  for (std::size_t i = 0; i <= e; ++i) {
    v[i] = binomial(static_cast<std::int64_t>(e), static_cast<std::int64_t>(i));
    if (i % 2 == 1) v[i] = -v[i];
  }
  return IntPolynomial(std::move(v));
}

BigInt IntPolynomial::coefficient(std::size_t degree) const {
  return degree < coeffs_.size() ? coeffs_[degree] : BigInt(0);
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::optional<IntPolynomial> IntPolynomial::divide_by_one_minus_x() const {
  if (is_zero()) return IntPolynomial{};
  // p(x) = (1 - x) q(x)  <=>  q_d = sum_{i<=d} p_i, and the total sum vanishes.
  std::vector<BigInt> q(coeffs_.size() - 1);
  BigInt running = 0;
  for (std::size_t d = 0; d + 1 < coeffs_.size(); ++d) {
    running += coeffs_[d];
    q[d] = running;
  }
  if (running + coeffs_.back() != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  return IntPolynomial(add(a.coeffs_, b.coeffs_, +1));
}
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  return IntPolynomial(add(a.coeffs_, b.coeffs_, -1));
}
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  return IntPolynomial(multiply(a.coeffs_, b.coeffs_));
}

std::string IntPolynomial::to_string(char var) const {
  return pretty(coeffs_, var, [](const BigInt& v) { return v.get_str(); });
}

// ---- RatPolynomial --------------------------------------------------------

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void RatPolynomial::trim() { trim_zeros(coeffs_); }

RatPolynomial RatPolynomial::constant(const Rational& c) { return RatPolynomial({c}); }

RatPolynomial RatPolynomial::from_int(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

RatPolynomial RatPolynomial::binomial(std::int64_t a, std::size_t m) {
  // prod_{i=0}^{m-1} (k + a - i), divided by m!
  RatPolynomial out = constant(1);
  BigInt factorial = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const auto shift = a - static_cast<std::int64_t>(i);
    out = out * RatPolynomial({Rational(BigInt(std::to_string(shift))), Rational(1)});
    factorial *= static_cast<unsigned long>(i + 1);
  }
  return Rational(1, factorial) * out;
}

Rational RatPolynomial::coefficient(std::size_t degree) const {
  return degree < coeffs_.size() ? coeffs_[degree] : Rational(0);
}

Rational RatPolynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational RatPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  acc.canonicalize();
  return acc;
}

RatPolynomial RatPolynomial::shifted(std::int64_t shift) const {
  // Horner's scheme in the polynomial ring: p(k + c).
  const RatPolynomial linear({Rational(BigInt(std::to_string(shift))), Rational(1)});
  RatPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * linear + constant(*it);
  return acc;
}

RatPolynomial RatPolynomial::operator-() const {
  RatPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
  return RatPolynomial(add(a.coeffs_, b.coeffs_, +1));
}
RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) {
  return RatPolynomial(add(a.coeffs_, b.coeffs_, -1));
}
RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  return RatPolynomial(multiply(a.coeffs_, b.coeffs_));
}
RatPolynomial operator*(const Rational& c, const RatPolynomial& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return RatPolynomial(std::move(v));
}

std::string RatPolynomial::to_string(char var) const {
  return pretty(coeffs_, var, [](const Rational& v) { return cutcx::to_string(v); });
}

RatPolynomial backward_diff(const RatPolynomial& p, std::size_t s) {
  RatPolynomial out = p;
  for (std::size_t i = 0; i < s && !out.is_zero(); ++i) out = out - out.shifted(-1);
  return out;
}

std::string coefficient_list(const IntPolynomial& p) {
  return list(p.coefficients(), [](const BigInt& v) { return v.get_str(); });
}

std::string coefficient_list(const RatPolynomial& p) {
  return list(p.coefficients(), [](const Rational& v) { return to_string(v); });
}

}  // namespace cutcx
