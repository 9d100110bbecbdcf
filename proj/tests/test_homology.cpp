#include <doctest.h>

#include <array>

#include "cutcx/errors.hpp"
#include "cutcx/homology.hpp"
#include "oracles.hpp"

using namespace cutcx;

namespace {

FaceLists from_facets(int n, std::initializer_list<std::initializer_list<int>> facets) {
  std::vector<VertexSet> v;
  for (auto f : facets) v.push_back(VertexSet::of(f));
  return FaceLists::from_facets(n, v);
}

std::vector<std::uint64_t> betti(const FaceLists& faces, std::uint32_t p) {
  return betti_numbers(build_chain_complex(faces), p).values;
}

BoundaryMatrix dense(const std::vector<std::vector<int>>& rows) {
  BoundaryMatrix m;
  m.dim = 1;
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows[0].size();
  m.columns.resize(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (rows[r][c] != 0) m.columns[c].push_back({static_cast<std::uint32_t>(r), static_cast<std::int8_t>(rows[r][c])});
    }
  }
  return m;
}

}  // namespace

TEST_CASE("field elements") {
  const FieldElement a(5, 7);
  const FieldElement b(-3, 7);
  CHECK(b.value() == 4);
  CHECK((a + b).value() == 2);
  CHECK((a - b).value() == 1);
  CHECK((a * b).value() == 6);
  CHECK((a / b * b) == a);
  for (std::uint32_t p : {2U, 3U, 5U, 65521U}) {
    for (std::int64_t v = 1; v < std::min<std::int64_t>(p, 200); ++v) {
      const FieldElement x(v, p);
      CHECK((x * x.inverse()).value() == 1);
    }
  }
  CHECK_THROWS_AS(FieldElement(0, 5).inverse(), InvalidArgument);
  CHECK_THROWS_AS(FieldElement(1, 5) / FieldElement(0, 5), InvalidArgument);
  CHECK_THROWS_AS(FieldElement(1, 5) + FieldElement(1, 7), InvalidArgument);
  CHECK_THROWS_AS(FieldElement(1, 4), InvalidArgument);
  CHECK_THROWS_AS(FieldElement(1, 65537), InvalidArgument);
  CHECK_THROWS_AS(require_prime(1), InvalidArgument);
  CHECK_NOTHROW(require_prime(65521));
}

TEST_CASE("field axioms over GF(7) exhaustively") {
  for (int x = 0; x < 7; ++x) {
    for (int y = 0; y < 7; ++y) {
      for (int z = 0; z < 7; ++z) {
        const FieldElement a(x, 7), b(y, 7), c(z, 7);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
      }
    }
  }
}

TEST_CASE("rank against the dense oracle") {
  std::uint64_t state = 12345;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state >> 33) % 3) - 1;
  };
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + static_cast<std::size_t>(trial % 13);
    const std::size_t cols = 1 + static_cast<std::size_t>((trial * 7) % 17) + (trial > 40 ? 60 : 0);
    std::vector<std::vector<int>> a(rows, std::vector<int>(cols));
    for (auto& row : a) {
      for (auto& x : row) x = next();
    }
    const BoundaryMatrix m = dense(a);
    for (std::uint32_t p : {2U, 3U, 5U}) {
      std::vector<std::vector<int>> reduced = a;
      for (auto& row : reduced) {
        for (auto& x : row) x = ((x % static_cast<int>(p)) + static_cast<int>(p)) % static_cast<int>(p);
      }
      CHECK(rank_mod_p(m, p) == static_cast<std::size_t>(oracle::rank_mod(reduced, static_cast<int>(p))));
    }
  }
}

TEST_CASE("small complexes") {
  // single vertex: the augmentation is [1]
  const auto point = build_chain_complex(from_facets(1, {{1}}));
  REQUIRE(point.size() == 1);
  CHECK(point[0].rows == 1);
  CHECK(point[0].cols == 1);
  CHECK(point[0].columns[0].size() == 1);
  CHECK(point[0].columns[0][0].sign == 1);
  CHECK(betti(from_facets(1, {{1}}), 2) == std::vector<std::uint64_t>{0});

  const FaceLists circle = from_facets(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(betti(circle, 2) == std::vector<std::uint64_t>{0, 1});
  CHECK(betti(circle, 3) == std::vector<std::uint64_t>{0, 1});

  const FaceLists two_points = from_facets(2, {{1}, {2}});
  CHECK(betti(two_points, 2) == std::vector<std::uint64_t>{1});

  const FaceLists sphere = from_facets(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  CHECK(betti(sphere, 3) == std::vector<std::uint64_t>{0, 0, 1});

  // {empty}: only the augmentation target, no vertices.
  const FaceLists empty_only{3, {{VertexSet{}}}};
  const auto chain = build_chain_complex(empty_only);
  REQUIRE(chain.size() == 1);
  CHECK(chain[0].rows == 1);
  CHECK(chain[0].cols == 0);
  const BettiNumbers b = betti_numbers(chain, 2);
  CHECK(b.degree_minus_one == 1);
  CHECK(b.euler_characteristic() == -1);

  const FaceLists nothing{3, {}};
  CHECK(build_chain_complex(nothing).empty());
  CHECK(betti_numbers(build_chain_complex(nothing), 2).values.empty());
}

TEST_CASE("torsion shows up only in characteristic 2") {
  // Six-vertex triangulation of the real projective plane.
  const FaceLists rp2 = from_facets(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                        {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {2, 4, 6}, {3, 5, 6}});
  CHECK(betti(rp2, 2) == std::vector<std::uint64_t>{0, 1, 1});
  CHECK(betti(rp2, 3) == std::vector<std::uint64_t>{0, 0, 0});
}

TEST_CASE("chain complex validation") {
  const FaceLists missing{3, {{VertexSet{}}, {VertexSet::of({1})}, {VertexSet::of({1, 2})}}};
  try {
    build_chain_complex(missing);
    FAIL("expected an error");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("{2}") != std::string::npos);
  }
  const FaceLists no_empty{3, {{}, {VertexSet::of({1})}}};
  CHECK_THROWS_AS(build_chain_complex(no_empty), InvalidArgument);
  const FaceLists duplicate{3, {{VertexSet{}}, {VertexSet::of({1}), VertexSet::of({1})}}};
  CHECK_THROWS_AS(build_chain_complex(duplicate), InvalidArgument);
  const FaceLists misplaced{3, {{VertexSet{}}, {VertexSet::of({1, 2})}}};
  CHECK_THROWS_AS(build_chain_complex(misplaced), InvalidArgument);
}

TEST_CASE("corrupted boundaries are rejected") {
  auto chain = build_chain_complex(from_facets(3, {{1, 2, 3}}));
  CHECK(composition_vanishes(chain[0], chain[1], 3));
  chain[1].columns[0][0].sign = static_cast<std::int8_t>(-chain[1].columns[0][0].sign);
  CHECK_FALSE(composition_vanishes(chain[0], chain[1], 3));
  CHECK_THROWS_AS(betti_numbers(chain, 3), InternalError);
  CHECK_THROWS_AS(composition_vanishes(chain[0], chain[2], 3), InvalidArgument);
}

TEST_CASE("cut complex chain shapes") {
  const auto chain = build_chain_complex(cut_complex_faces(squared_path(7), 4));
  REQUIRE(chain.size() == 3);
  CHECK(chain[0].cols == 7);
  CHECK(chain[1].cols == 18);
  CHECK(chain[2].cols == 15);
  for (const auto& m : chain) {
    for (const auto& col : m.columns) CHECK(col.size() == static_cast<std::size_t>(m.dim + 1));
  }
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    for (std::size_t i = 1; i < chain.size(); ++i) CHECK(composition_vanishes(chain[i - 1], chain[i], p));
  }
}

TEST_CASE("Betti examples") {
  CHECK(betti(cut_complex_faces(squared_path(7), 4), 2) == std::vector<std::uint64_t>{0, 0, 3});
  CHECK(betti(cut_complex_faces(squared_path(6), 3), 2) == std::vector<std::uint64_t>{0, 0, 1});
  for (int k = 2; k <= 9; ++k) {
    for (std::uint32_t p : {2U, 3U}) {
      const BettiNumbers b = betti_numbers(build_chain_complex(cut_complex_faces(squared_path(k + 2), k)), p);
      CHECK(b.degree_minus_one == 0);
      for (auto v : b.values) CHECK(v == 0);
    }
  }
}

TEST_CASE("Betti numbers agree with the naive oracle") {
  for (int n = 4; n <= 9; ++n) {
    const auto edges = oracle::squared_path_edges(n);
    for (int k = 2; k <= n; ++k) {
      const auto facets = oracle::cut_facets(edges, n, k);
      for (int p : {2, 3}) {
        const auto expected = oracle::reduced_betti(n, facets, p);
        const BettiNumbers b =
            betti_numbers(build_chain_complex(cut_complex_faces(squared_path(n), k)), static_cast<std::uint32_t>(p));
        if (expected.empty()) {
          CHECK(b.values.empty());
          continue;
        }
        std::vector<int> got{static_cast<int>(b.degree_minus_one)};
        for (auto v : b.values) got.push_back(static_cast<int>(v));
        CHECK_MESSAGE(got == expected, "k=" << k << " n=" << n << " p=" << p);
      }
    }
  }
}

TEST_CASE("concentration") {
  const std::array<std::uint32_t, 2> p23{2, 3};
  const ConcentrationReport a = verify_concentration(4, 7, p23);
  CHECK(a.holds());
  CHECK(a.expected == 3);
  REQUIRE(a.per_prime.size() == 2);
  for (const auto& b : a.per_prime) CHECK(b.values == std::vector<std::uint64_t>{0, 0, 3});
  const ConcentrationReport b = verify_concentration(5, 8, p23);
  CHECK(b.holds());
  CHECK(b.per_prime[0].values.back() == 6);
  const std::array<std::uint32_t, 1> p2{2};
  CHECK(verify_concentration(3, 6, p2).per_prime[0].values == std::vector<std::uint64_t>{0, 0, 1});
  CHECK_THROWS_AS(verify_concentration(4, 6, p2), InvalidArgument);
  CHECK_THROWS_AS(verify_concentration(4, 15, p2), CapacityError);
  CHECK_THROWS_AS(verify_concentration(4, 8, std::span<const std::uint32_t>{}), InvalidArgument);
  const std::array<std::uint32_t, 1> p4{4};
  CHECK_THROWS_AS(verify_concentration(4, 8, p4), InvalidArgument);
}

TEST_CASE("concentration and Euler consistency for n <= 12") {
  const std::array<std::uint32_t, 2> p23{2, 3};
  for (int n = 5; n <= 12; ++n) {
    for (int k = 2; k + 3 <= n; ++k) {
      const ConcentrationReport rep = verify_concentration(k, n, p23);
      CHECK_MESSAGE(rep.holds(), "k=" << k << " n=" << n);
      const BigInt chi = reduced_euler(f_vector_bruteforce(squared_path(n), k));
      for (const auto& b : rep.per_prime) {
        CHECK(BigInt(static_cast<long>(b.euler_characteristic())) == chi);
        CHECK(b.values.size() == static_cast<std::size_t>(n - k));
        CHECK(b.values[static_cast<std::size_t>(n - k - 1)] == to_int64(beta_closed(k, n)));
      }
    }
  }
}

TEST_CASE("homology table") {
  const BettiTable t = homology_table(3, 5, 3, 6, 2);
  CHECK(t.provenance == Provenance::kHomologyOracle);
  const BettiTable closed = closed_form_table(3, 5, 3, 6);
  CHECK(t.entries == closed.entries);
  CHECK_THROWS_AS(homology_table(3, 6, 3, 9, 2), CapacityError);
}

TEST_CASE("boundary triplets") {
  const std::string text = format_boundary_triplets(build_chain_complex(from_facets(2, {{1, 2}})));
  CHECK(text == "# dim row col value\n0 0 0 1\n0 0 1 1\n1 1 0 1\n1 0 0 -1\n");
}
