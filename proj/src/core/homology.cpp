#include "cutcx/homology.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <unordered_map>

#include "cutcx/errors.hpp"
#include "cutcx/graph.hpp"

namespace cutcx {
namespace {

constexpr std::size_t kMaxFacesPerDimension = 100'000;

std::uint32_t mod_pow(std::uint64_t base, std::uint32_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp != 0) {
    if ((exp & 1U) != 0) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

void require_same_field(FieldElement a, FieldElement b) {
  if (a.prime() != b.prime()) {
    throw InvalidArgument("field elements over GF(" + std::to_string(a.prime()) + ") and GF(" +
                          std::to_string(b.prime()) + ") cannot be combined");
  }
}

std::size_t rank_gf2(const BoundaryMatrix& m) {
  const std::size_t words = (m.cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(m.rows, std::vector<std::uint64_t>(words, 0));
  for (std::size_t c = 0; c < m.cols; ++c) {
    for (const auto& e : m.columns[c]) rows[e.row][c / 64] ^= std::uint64_t{1} << (c % 64);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows && (rows[pivot][w] & bit) == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(rows[pivot], rows[rank]);
    const auto& prow = rows[rank];
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if ((rows[r][w] & bit) == 0) continue;
      for (std::size_t x = w; x < words; ++x) rows[r][x] ^= prow[x];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_dense(const BoundaryMatrix& m, std::uint32_t p) {
  const std::size_t cols = m.cols;
  std::vector<std::uint32_t> a(m.rows * cols, 0);
  for (std::size_t c = 0; c < cols; ++c) {
    for (const auto& e : m.columns[c]) a[e.row * cols + c] = e.sign > 0 ? 1U % p : p - 1;
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    }
    const std::uint32_t* prow = &a[rank * cols];
    const std::uint64_t inv = mod_pow(prow[c], p - 2, p);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      std::uint32_t* row = &a[r * cols];
      if (row[c] == 0) continue;
      const std::uint64_t factor = row[c] * inv % p;
      const std::uint64_t neg = p - factor;
      for (std::size_t x = c; x < cols; ++x) {
        if (prow[x] != 0) row[x] = static_cast<std::uint32_t>((row[x] + neg * prow[x]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

void require_prime(std::uint32_t p) {
  bool prime = p >= 2 && p < kPrimeLimit;
  for (std::uint32_t d = 2; prime && d * d <= p; ++d) prime = p % d != 0;
  if (!prime) throw InvalidArgument(std::to_string(p) + " is not a prime below 65536");
}

FieldElement::FieldElement(std::int64_t value, std::uint32_t prime) : prime_(prime) {
  require_prime(prime);
  const auto p = static_cast<std::int64_t>(prime);
  value_ = static_cast<std::uint32_t>(((value % p) + p) % p);
}

FieldElement FieldElement::inverse() const {
  if (value_ == 0) throw InvalidArgument("division by zero in GF(" + std::to_string(prime_) + ")");
  return {mod_pow(value_, prime_ - 2, prime_), prime_};
}

FieldElement operator+(FieldElement a, FieldElement b) {
  require_same_field(a, b);
  return {static_cast<std::int64_t>(a.value_) + b.value_, a.prime_};
}
FieldElement operator-(FieldElement a, FieldElement b) {
  require_same_field(a, b);
  return {static_cast<std::int64_t>(a.value_) - b.value_, a.prime_};
}
FieldElement operator*(FieldElement a, FieldElement b) {
  require_same_field(a, b);
  return {static_cast<std::int64_t>(static_cast<std::uint64_t>(a.value_) * b.value_ % a.prime_),
          a.prime_};
}
FieldElement operator/(FieldElement a, FieldElement b) {
  require_same_field(a, b);
  return a * b.inverse();
}

std::vector<BoundaryMatrix> build_chain_complex(const FaceLists& faces) {
  if (faces.is_void()) return {};
  const auto& layers = faces.by_cardinality;
  if (layers[0].size() != 1 || !layers[0][0].empty()) {
    throw InvalidArgument("face family is not downward closed: missing subface {}");
  }

  std::vector<std::unordered_map<Mask, std::uint32_t>> index(layers.size());
  for (std::size_t p = 0; p < layers.size(); ++p) {
    if (layers[p].size() > kMaxFacesPerDimension) {
      throw CapacityError("more than 10^5 faces of cardinality " + std::to_string(p));
    }
    for (std::size_t i = 0; i < layers[p].size(); ++i) {
      const VertexSet f = layers[p][i];
      if (f.size() != static_cast<int>(p) || !f.within(faces.n)) {
        throw InvalidArgument("face " + f.to_string() + " listed under cardinality " +
                              std::to_string(p));
      }
      if (!index[p].emplace(f.mask(), static_cast<std::uint32_t>(i)).second) {
        throw InvalidArgument("face " + f.to_string() + " listed twice");
      }
    }
  }

  std::vector<BoundaryMatrix> out;
  // dim 0 always exists so that the augmentation records beta_{-1}.
  const std::size_t top_dim = layers.size() >= 2 ? layers.size() - 2 : 0;
  for (std::size_t dim = 0; dim <= top_dim; ++dim) {
    BoundaryMatrix m;
    m.dim = static_cast<int>(dim);
    m.rows = layers[dim].size();
    static const std::vector<VertexSet> kNoFaces;
    const auto& sources = dim + 1 < layers.size() ? layers[dim + 1] : kNoFaces;
    m.cols = sources.size();
    m.columns.resize(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c) {
      const VertexSet sigma = sources[c];
      int position = 0;
      sigma.for_each([&](int v) {
        const VertexSet tau = sigma.without(v);
        const auto it = index[dim].find(tau.mask());
        if (it == index[dim].end()) {
          throw InvalidArgument("face family is not downward closed: " + sigma.to_string() +
                                " is missing subface " + tau.to_string());
        }
        m.columns[c].push_back({it->second, static_cast<std::int8_t>(position % 2 == 0 ? 1 : -1)});
        ++position;
      });
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::size_t rank_mod_p(const BoundaryMatrix& m, std::uint32_t prime) {
  require_prime(prime);
  return prime == 2 ? rank_gf2(m) : rank_dense(m, prime);
}

bool composition_vanishes(const BoundaryMatrix& lower, const BoundaryMatrix& upper,
                          std::uint32_t prime) {
  require_prime(prime);
  if (lower.dim + 1 != upper.dim || lower.cols != upper.rows) {
    throw InvalidArgument("boundary matrices are not composable");
  }
  std::vector<std::int64_t> acc(lower.rows, 0);
  std::vector<std::uint32_t> touched;
  for (const auto& column : upper.columns) {
    touched.clear();
    for (const auto& e : column) {
      for (const auto& f : lower.columns[e.row]) {
        acc[f.row] += static_cast<std::int64_t>(e.sign) * f.sign;
        touched.push_back(f.row);
      }
    }
    bool zero = true;
    for (std::uint32_t row : touched) {
      if (acc[row] % static_cast<std::int64_t>(prime) != 0) zero = false;
      acc[row] = 0;
    }
    if (!zero) return false;
  }
  return true;
}

std::int64_t BettiNumbers::euler_characteristic() const {
  std::int64_t chi = -static_cast<std::int64_t>(degree_minus_one);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto v = static_cast<std::int64_t>(values[i]);
    chi += i % 2 == 0 ? v : -v;
  }
  return chi;
}

BettiNumbers betti_numbers(std::span<const BoundaryMatrix> complex, std::uint32_t prime) {
  require_prime(prime);
  BettiNumbers out;
  out.prime = prime;
  if (complex.empty()) return out;

  for (std::size_t i = 1; i < complex.size(); ++i) {
    if (!composition_vanishes(complex[i - 1], complex[i], prime)) {
      throw InternalError("boundary composition d_" + std::to_string(i - 1) + " d_" +
                          std::to_string(i) + " is nonzero over GF(" + std::to_string(prime) + ")");
    }
  }
  out.ranks.resize(complex.size());
  for (std::size_t i = 0; i < complex.size(); ++i) out.ranks[i] = rank_mod_p(complex[i], prime);

  out.degree_minus_one = complex[0].rows - out.ranks[0];
  for (std::size_t i = 0; i < complex.size(); ++i) {
    const std::size_t next_rank = i + 1 < complex.size() ? out.ranks[i + 1] : 0;
    out.values.push_back(complex[i].cols - out.ranks[i] - next_rank);
  }
  return out;
}

ConcentrationReport verify_concentration(int k, int n, std::span<const std::uint32_t> primes) {
  if (k < 2 || n < k + 3) {
    throw InvalidArgument("concentration check needs k >= 2 and n >= k+3, got k=" +
                          std::to_string(k) + " n=" + std::to_string(n));
  }
  if (n > 14) throw CapacityError("homology oracle is limited to n <= 14");
  if (primes.empty()) throw InvalidArgument("at least one prime is required");

  ConcentrationReport report;
  report.k = k;
  report.n = n;
  report.expected = beta_closed(k, n);
  const int r = n - k;

  const FaceLists faces = cut_complex_faces(squared_path(n), k);
  const std::vector<BoundaryMatrix> chain = build_chain_complex(faces);
  const BigInt chi = reduced_euler(f_vector_of(faces, k));

  for (std::uint32_t p : primes) {
    BettiNumbers betti = betti_numbers(chain, p);
    const std::string field = "GF(" + std::to_string(p) + ")";
    if (betti.degree_minus_one != 0) {
      report.failures.push_back(field + ": reduced beta_{-1} = " +
                                std::to_string(betti.degree_minus_one));
    }
    if (betti.values.size() != static_cast<std::size_t>(r)) {
      report.failures.push_back(field + ": complex has dimension " +
                                std::to_string(static_cast<int>(betti.values.size()) - 1) +
                                ", expected " + std::to_string(r - 1));
    }
    for (std::size_t i = 0; i < betti.values.size(); ++i) {
      const BigInt want = static_cast<int>(i) == r - 1 ? report.expected : BigInt(0);
      if (BigInt(static_cast<unsigned long>(betti.values[i])) != want) {
        report.failures.push_back(field + ": beta_" + std::to_string(i) + " = " +
                                  std::to_string(betti.values[i]) + ", expected " + want.get_str());
      }
    }
    if (BigInt(static_cast<long>(betti.euler_characteristic())) != chi) {
      report.failures.push_back(field + ": alternating Betti sum " +
                                std::to_string(betti.euler_characteristic()) +
                                " differs from reduced Euler characteristic " + chi.get_str());
    }
    report.per_prime.push_back(std::move(betti));
  }
  return report;
}

BettiTable homology_table(int r_min, int r_max, int k_min, int k_max, std::uint32_t prime) {
  if (r_min < 3 || r_max < r_min || k_min < 2 || k_max < k_min) {
    throw InvalidArgument("table ranges need 3 <= r_min <= r_max and 2 <= k_min <= k_max");
  }
  if (k_max + r_max > 14) throw CapacityError("homology oracle is limited to n <= 14");
  BettiTable t{r_min, r_max, k_min, k_max, Provenance::kHomologyOracle, {}};
  for (int r = r_min; r <= r_max; ++r) {
    for (int k = k_min; k <= k_max; ++k) {
      const auto chain = build_chain_complex(cut_complex_faces(squared_path(k + r), k));
      const BettiNumbers betti = betti_numbers(chain, prime);
      t.entries.emplace(std::make_pair(k, r),
                        BigInt(static_cast<unsigned long>(betti.values.at(static_cast<std::size_t>(r - 1)))));
    }
  }
  return t;
}

std::string format_boundary_triplets(std::span<const BoundaryMatrix> complex) {
  std::ostringstream out;
  out << "# dim row col value\n";
  for (const auto& m : complex) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      for (const auto& e : m.columns[c]) {
        out << m.dim << ' ' << e.row << ' ' << c << ' ' << static_cast<int>(e.sign) << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace cutcx
