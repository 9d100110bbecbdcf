#include <doctest.h>

#include "cutcx/closed_forms.hpp"
#include "cutcx/cut_complex.hpp"
#include "cutcx/errors.hpp"
#include "cutcx/serialize.hpp"
#include "oracles.hpp"

using namespace cutcx;

namespace {

BigInt big(oracle::i128 v) { return BigInt(oracle::str(v)); }

RatPolynomial rat(std::initializer_list<int> num, int den) {
  std::vector<Rational> c;
  for (int v : num) c.emplace_back(v, den);
  return RatPolynomial(c);
}

IntPolynomial ints(std::initializer_list<int> c) {
  std::vector<BigInt> v;
  for (int x : c) v.emplace_back(x);
  return IntPolynomial(v);
}

}  // namespace

TEST_CASE("binomial convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-1, 0), InvalidArgument);
  CHECK(binomial(100, 50).get_str() == "100891344545564193334812497256");
}

TEST_CASE("beta examples") {
  CHECK(beta_closed(3, 6) == 1);
  CHECK(beta_closed(4, 8) == 11);
  CHECK(beta_closed(10, 16) == 3720);
  for (int k = 2; k <= 40; ++k) CHECK(beta_closed(k, k + 2) == 0);
  CHECK_THROWS_AS(beta_closed(4, 5), InvalidArgument);
  CHECK_THROWS_AS(beta_closed(1, 5), InvalidArgument);
}

TEST_CASE("diagonal table") {
  const int expected[4][8] = {{1, 3, 6, 10, 15, 21, 28, 36},
                              {3, 11, 26, 50, 85, 133, 196, 276},
                              {6, 25, 67, 145, 275, 476, 770, 1182},
                              {10, 46, 136, 324, 674, 1274, 2240, 3720}};
  const BettiTable t = closed_form_table(3, 6, 3, 10);
  CHECK(t.provenance == Provenance::kClosedForm);
  CHECK(t.entries.size() == 32);
  for (int r = 3; r <= 6; ++r) {
    for (int k = 3; k <= 10; ++k) CHECK(t.at(k, r) == expected[r - 3][k - 3]);
  }
  CHECK_THROWS_AS(t.at(2, 3), InvalidArgument);
  CHECK_THROWS_AS(closed_form_table(2, 6, 3, 10), InvalidArgument);
  CHECK_THROWS_AS(closed_form_table(4, 3, 3, 10), InvalidArgument);
  CHECK_THROWS_AS(closed_form_table(3, 6, 1, 10), InvalidArgument);
  const BettiTable wide = closed_form_table(3, 9, 2, 30);
  for (const auto& [key, value] : wide.entries) CHECK(value >= 0);
  for (int k = 2; k <= 30; ++k) CHECK(wide.at(k, 3) == binomial(k - 1, 2));
}

TEST_CASE("beta agrees with the int128 oracle") {
  for (int n = 4; n <= 60; ++n) {
    for (int k = 2; k <= n - 2; ++k) CHECK(beta_closed(k, n) == big(oracle::beta(k, n)));
  }
}

TEST_CASE("closed forms for k = 4 and k = 5") {
  CHECK(beta_k4(7) == 3);
  CHECK(beta_k5(8) == 6);
  CHECK(beta_k4(10) == 46);
  for (int n = 7; n <= 60; ++n) CHECK(beta_k4(n) == beta_closed(4, n));
  for (int n = 8; n <= 60; ++n) CHECK(beta_k5(n) == beta_closed(5, n));
  CHECK_THROWS_AS(beta_k4(6), InvalidArgument);
  CHECK_THROWS_AS(beta_k5(7), InvalidArgument);
}

TEST_CASE("diagonal polynomials") {
  CHECK(diagonal_poly(3) == rat({2, -3, 1}, 2));
  CHECK(diagonal_poly(4) == rat({6, -5, -3, 2}, 6));
  CHECK(diagonal_poly(6) == rat({60, -46, -30, 15, 0, 1}, 30));
  CHECK(diagonal_poly(3).to_string() == "1 - (3/2)k + (1/2)k^2");
  CHECK(coefficient_list(diagonal_poly(3)) == "[1, -3/2, 1/2]");
  CHECK_THROWS_AS(diagonal_poly(2), InvalidArgument);
  for (int r = 3; r <= 12; ++r) {
    const RatPolynomial b = diagonal_poly(r);
    CHECK(b.degree() == r - 1);
    CHECK(b.leading_coefficient() == leading_coefficient(r));
    for (int k = -30; k <= 60; ++k) {
      const Rational v = b.evaluate(Rational(k));
      CHECK(v.get_den() == 1);
      CHECK(v == Rational(big(oracle::diagonal_value(r, k))));
    }
  }
  for (int r = 3; r <= 8; ++r) {
    for (int k = 2; k <= 40; ++k) CHECK(diagonal_poly(r).evaluate(Rational(k)) == Rational(beta_closed(k, k + r)));
  }
}

TEST_CASE("leading coefficient") {
  CHECK(leading_coefficient(3) == Rational(1, 2));
  CHECK(leading_coefficient(4) == Rational(1, 3));
  CHECK(leading_coefficient(5) == Rational(1, 8));
  CHECK_THROWS_AS(leading_coefficient(2), InvalidArgument);
}

TEST_CASE("backward differences") {
  CHECK(backward_diff(RatPolynomial::constant(7), 1).is_zero());
  for (int r = 1; r <= 10; ++r) {
    CHECK(backward_diff(RatPolynomial::binomial(r - 1, static_cast<std::size_t>(r)), static_cast<std::size_t>(r)) ==
          RatPolynomial::constant(1));
  }
  CHECK(backward_diff(diagonal_poly(4), 3) == RatPolynomial::constant(2));
  for (int r = 3; r <= 12; ++r) {
    const RatPolynomial b = diagonal_poly(r);
    for (int s = 0; s <= r - 1; ++s) CHECK(backward_diff(b, static_cast<std::size_t>(s)).degree() == r - 1 - s);
    CHECK(backward_diff(b, static_cast<std::size_t>(r)).is_zero());
    CHECK(backward_diff(b, static_cast<std::size_t>(r - 1)) == RatPolynomial::constant(r - 2));
  }
}

TEST_CASE("backward differences against pointwise sums") {
  for (int r = 3; r <= 8; ++r) {
    for (int s = 0; s <= r; ++s) {
      const RatPolynomial d = backward_diff(diagonal_poly(r), static_cast<std::size_t>(s));
      for (int k = -10; k <= 30; ++k) CHECK(d.evaluate(Rational(k)) == Rational(big(oracle::backward_difference(r, s, k))));
    }
  }
}

TEST_CASE("recurrence certificates") {
  const RecurrenceCertificate c3 = verify_recurrence(3, 6);
  REQUIRE(c3.topological.size() == 1);
  CHECK(c3.topological[0].values == std::vector<BigInt>{10, 6, 3, 1});
  CHECK(c3.topological[0].alternating_sum == 0);
  const RecurrenceCertificate c4 = verify_recurrence(4, 7);
  REQUIRE(c4.topological.size() == 1);
  CHECK(c4.topological[0].values == std::vector<BigInt>{85, 50, 26, 11, 3});
  for (int r = 3; r <= 8; ++r) {
    const RecurrenceCertificate c = verify_recurrence(r, 40);
    CHECK(c.holds());
    CHECK(c.symbolic_zero);
    CHECK(c.topological.size() == static_cast<std::size_t>(40 - (r + 3) + 1));
    CHECK(c.polynomial_extension.size() == 81);
    for (const auto& id : c.topological) {
      for (int i = 0; i <= r; ++i) CHECK(id.values[static_cast<std::size_t>(i)] == big(oracle::beta(id.k - i, id.k - i + r)));
    }
  }
  CHECK_THROWS_AS(verify_recurrence(3, 5), InvalidArgument);
  CHECK_THROWS_AS(verify_recurrence(2, 10), InvalidArgument);
}

TEST_CASE("sharp differences") {
  CHECK(sharp_difference(3) == 1);
  CHECK(sharp_difference(4) == 2);
  CHECK(sharp_difference(5) == 3);
  for (int r = 3; r <= 12; ++r) CHECK(sharp_difference(r) == r - 2);
  // third difference of row r = 4 straight from the table: 50 - 3*26 + 3*11 - 3
  CHECK(50 - 3 * 26 + 3 * 11 - 3 == 2);
}

TEST_CASE("generating functions") {
  CHECK(diagonal_genfun(3) == RationalGenFun{ints({0, 0, 0, 1}), 3});
  CHECK(diagonal_genfun(4) == RationalGenFun{ints({0, 0, 0, 3, -1}), 4});
  CHECK(diagonal_genfun(5) == RationalGenFun{ints({0, 0, 0, 6, -5, 2}), 5});
  CHECK(diagonal_genfun(4).numerator.to_string() == "3x^3 - x^4");
  CHECK_THROWS_AS(diagonal_genfun(2), InvalidArgument);
  for (int r = 3; r <= 12; ++r) {
    const RationalGenFun g = diagonal_genfun(r);
    CHECK(g.pole_order == r);
    CHECK(g.numerator.degree() <= r);
    CHECK_FALSE(g.numerator.divide_by_one_minus_x().has_value());
    const auto series = g.series(51);
    std::vector<oracle::i128> num;
    for (const auto& c : g.numerator.coefficients()) num.push_back(static_cast<oracle::i128>(to_int64(c)));
    const auto independent = oracle::rational_series(num, r, 51);
    CHECK(series[0] == 0);
    for (int k = 1; k <= 50; ++k) {
      CHECK(series[static_cast<std::size_t>(k)] == big(oracle::diagonal_value(r, k)));
      CHECK(series[static_cast<std::size_t>(k)] == big(independent[static_cast<std::size_t>(k)]));
    }
  }
}

TEST_CASE("generating function canonical form") {
  const RationalGenFun padded{ints({0, 0, 0, 1}) * IntPolynomial::one_minus_x_pow(2), 5};
  CHECK(padded.canonical() == diagonal_genfun(3));
  CHECK(RationalGenFun{IntPolynomial{}, 4}.canonical().pole_order == 0);
  CHECK(to_text(diagonal_genfun(4)) == "genfun pole_order=4\nnumerator=[0, 0, 0, 3, -1]\n");
}

TEST_CASE("h-polynomial") {
  CHECK(h_polynomial(4, 7) == ints({1, 4, 7, 3}));
  CHECK_THROWS_AS(h_polynomial(6, 7), InvalidArgument);
  for (int n = 4; n <= 40; ++n) {
    for (int k = 2; k <= n - 2; ++k) {
      const int r = n - k;
      const IntPolynomial h = h_polynomial(k, n);
      CHECK(h.coefficient(0) == 1);
      CHECK(h.degree() <= r);
      CHECK(h.coefficient(static_cast<std::size_t>(r)) == beta_closed(k, n));
      // h(t) = sum_p f_{p-1} t^p (1-t)^{r-p}
      const IntPolynomial f = face_enumerator_closed(k, n);
      IntPolynomial transform;
      for (int p = 0; p <= r; ++p) {
        transform = transform + IntPolynomial::monomial(f.coefficient(static_cast<std::size_t>(p)), static_cast<std::size_t>(p)) *
                                    IntPolynomial::one_minus_x_pow(static_cast<std::size_t>(r - p));
      }
      CHECK(h == transform);
    }
  }
}

TEST_CASE("Hilbert series") {
  const RationalGenFun h = hilbert_series(4, 7);
  CHECK(h.pole_order == 3);
  const auto s = h.series(6);
  CHECK(s[0] == 1);
  CHECK(s[1] == 7);
  CHECK(s[2] == 25);
  for (int n = 4; n <= 40; ++n) {
    for (int k = 2; k <= n - 2; ++k) {
      const int r = n - k;
      const auto series = hilbert_series(k, n).series(10);
      CHECK(series[1] == (r >= 3 ? n : n - 2));
      const IntPolynomial f = face_enumerator_closed(k, n);
      for (int d = 1; d < 10; ++d) {
        BigInt expected = 0;
        for (int p = 1; p <= r; ++p) expected += f.coefficient(static_cast<std::size_t>(p)) * binomial(d - 1, p - 1);
        CHECK(series[static_cast<std::size_t>(d)] == expected);
      }
    }
  }
}
