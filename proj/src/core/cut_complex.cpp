#include "cutcx/cut_complex.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "cutcx/bad_complements.hpp"
#include "cutcx/errors.hpp"
#include "cutcx/parallel.hpp"
#include "cutcx/subsets.hpp"

namespace cutcx {
namespace {

constexpr int kPowersetScanLimit = 20;
constexpr std::size_t kLayerListingLimit = 1'000'000;

void require_k_in_range(int k, int n) {
  if (k < 2 || k > n) {
    throw InvalidArgument("k=" + std::to_string(k) + " outside 2..n with n=" + std::to_string(n));
  }
}

void require_closed_range(int k, int n) {
  if (k < 2 || k > n - 2) {
    throw InvalidArgument("closed formulas need 2 <= k <= n-2, got k=" + std::to_string(k) +
                          " n=" + std::to_string(n));
  }
}

// Drops trailing zero counts; an all-zero vector means the void complex.
FVector make_fvector(int n, int k, std::vector<BigInt> counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  FVector fv{n, k, counts.empty(), std::move(counts)};
  return fv;
}

FVector powerset_scan(const Graph& g, int k, unsigned threads) {
  const int n = g.vertex_count();
  if (n > kPowersetScanLimit) {
    throw CapacityError("powerset face scan is limited to n <= " +
                        std::to_string(kPowersetScanLimit));
  }
  const int top = n - k;
  constexpr std::size_t kBlock = 1U << 12;
  const std::size_t total = std::size_t{1} << n;
  const std::size_t blocks = (total + kBlock - 1) / kBlock;
  std::vector<std::vector<std::uint64_t>> partial(blocks,
                                                  std::vector<std::uint64_t>(top + 1, 0));
  parallel_for(blocks, threads, [&](std::size_t b) {
    const std::size_t hi = std::min(total, (b + 1) * kBlock);
    for (std::size_t m = b * kBlock; m < hi; ++m) {
      const VertexSet f = VertexSet::from_mask(m);
      const int p = f.size();
      if (p <= top && is_face(g, k, f)) ++partial[b][static_cast<std::size_t>(p)];
    }
  });
  std::vector<BigInt> counts(static_cast<std::size_t>(top + 1), BigInt(0));
  for (const auto& part : partial) {
    for (std::size_t p = 0; p < part.size(); ++p) counts[p] += static_cast<unsigned long>(part[p]);
  }
  return make_fvector(n, k, std::move(counts));
}

FVector complement_counting(const Graph& g, int k, unsigned threads) {
  const int n = g.vertex_count();
  const BadProfile q = q_profile_bruteforce(g, k, threads);
  std::vector<BigInt> counts;
  for (int p = 0; p <= n - k; ++p) counts.push_back(binomial(n, p) - q.q(n - p));
  return make_fvector(n, k, std::move(counts));
}

}  // namespace

BigInt FVector::at(int p) const {
  if (p < 0 || p >= static_cast<int>(counts.size())) return BigInt(0);
  return counts[static_cast<std::size_t>(p)];
}

FaceLists FaceLists::from_facets(int n, const std::vector<VertexSet>& facets) {
  require_vertex_count(n);
  require_enumerable(n);
  FaceLists out{n, {}};
  if (facets.empty()) return out;

  std::vector<std::uint8_t> present(std::size_t{1} << n, 0);
  int top = 0;
  for (VertexSet facet : facets) {
    if (!facet.within(n)) {
      throw InvalidArgument("facet " + facet.to_string() + " is not a subset of 1.." +
                            std::to_string(n));
    }
    top = std::max(top, facet.size());
    const Mask full = facet.mask();
    for (Mask sub = full;; sub = (sub - 1) & full) {
      present[sub] = 1;
      if (sub == 0) break;
    }
  }
  out.by_cardinality.resize(static_cast<std::size_t>(top + 1));
  for (std::size_t m = 0; m < present.size(); ++m) {
    if (present[m] != 0) {
      out.by_cardinality[static_cast<std::size_t>(std::popcount(m))].push_back(
          VertexSet::from_mask(m));
    }
  }
  for (auto& layer : out.by_cardinality) std::sort(layer.begin(), layer.end(), lex_less);
  return out;
}

FVector f_vector_of(const FaceLists& faces, int k) {
  std::vector<BigInt> counts;
  for (const auto& layer : faces.by_cardinality) counts.emplace_back(static_cast<unsigned long>(layer.size()));
  return make_fvector(faces.n, k, std::move(counts));
}

std::vector<VertexSet> disconnected_k_sets(const Graph& g, int k) {
  const int n = g.vertex_count();
  require_k_in_range(k, n);
  require_enumerable(n);
  std::vector<VertexSet> out;
  for_each_k_subset(g.vertices(), k, [&](VertexSet t) {
    if (!is_connected_induced(g, t)) out.push_back(t);
    return true;
  });
  return out;
}

FaceLists cut_complex_faces(const Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<VertexSet> facets;
  for (VertexSet t : disconnected_k_sets(g, k)) facets.push_back(t.complement(n));
  return FaceLists::from_facets(n, facets);
}

bool is_face(const Graph& g, int k, VertexSet f) {
  const int n = g.vertex_count();
  require_k_in_range(k, n);
  if (!f.within(n)) {
    throw InvalidArgument("set " + f.to_string() + " is not a subset of 1.." + std::to_string(n));
  }
  const VertexSet reservoir = f.complement(n);
  if (reservoir.size() < k) return false;
  // The scan completes only when every k-subset is connected.
  return !for_each_k_subset(reservoir, k, [&](VertexSet t) { return is_connected_induced(g, t); });
}

FVector f_vector_bruteforce(const Graph& g, int k, FVectorMethod method, unsigned threads) {
  const int n = g.vertex_count();
  require_k_in_range(k, n);
  require_enumerable(n);
  if (method == FVectorMethod::kAuto) {
    method = n <= kPowersetScanLimit ? FVectorMethod::kPowersetScan
                                     : FVectorMethod::kComplementCounting;
  }
  return method == FVectorMethod::kPowersetScan ? powerset_scan(g, k, threads)
                                                : complement_counting(g, k, threads);
}

IntPolynomial face_enumerator_closed(int k, int n) {
  require_closed_range(k, n);
  const int r = n - k;
  std::vector<BigInt> coeffs;
  for (int p = 0; p <= r; ++p) coeffs.push_back(binomial(n, p));
  coeffs[static_cast<std::size_t>(r - 1)] -= r;
  coeffs[static_cast<std::size_t>(r)] -= z_count(k, n);
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial face_polynomial(const FVector& fv) {
  return fv.is_void ? IntPolynomial{} : IntPolynomial(fv.counts);
}

BigInt reduced_euler(const FVector& fv) {
  if (fv.is_void) return BigInt(0);
  return -face_polynomial(fv).evaluate(BigInt(-1));
}

NonfaceLayers nonface_layers(int k, int n) {
  require_closed_range(k, n);
  require_vertex_count(n);
  const int r = n - k;
  const LayerSizes sizes = layer_sizes(k, n);
  if (sizes.rminus1 + sizes.r_total() > static_cast<unsigned long>(kLayerListingLimit)) {
    throw CapacityError("nonface layers of (k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                        ") exceed the listing limit");
  }

  NonfaceLayers out{k, n, {}, {}};
  for (int s = 1; s <= r; ++s) out.level_rminus1.push_back(VertexSet::interval(s, s + k).complement(n));

  // Connected k-sets as gap words: j of the k-1 gaps equal 2, the rest 1.
  const int j_max = std::min(k - 1, r);
  out.level_r_by_j.resize(static_cast<std::size_t>(j_max + 1));
  for (int j = 0; j <= j_max; ++j) {
    auto& layer = out.level_r_by_j[static_cast<std::size_t>(j)];
    for_each_k_subset(VertexSet::interval(1, k - 1), j, [&](VertexSet long_gaps) {
      for (int start = 1; start <= r - j + 1; ++start) {
        Mask c = 0;
        int a = start;
        for (int i = 1; i <= k; ++i) {
          c |= Mask{1} << (a - 1);
          a += long_gaps.contains(i) ? 2 : 1;
        }
        layer.push_back(VertexSet::from_mask(c).complement(n));
      }
      return true;
    });
    std::sort(layer.begin(), layer.end(), lex_less);
  }

  const Graph g = squared_path(n);
  auto check = [&](const std::vector<VertexSet>& layer, const std::string& label) {
    for (std::size_t i = 0; i < layer.size(); ++i) {
      if (i > 0 && layer[i] == layer[i - 1]) {
        throw InternalError("duplicate nonface " + layer[i].to_string() + " in " + label);
      }
      if (is_face(g, k, layer[i])) {
        throw InternalError("listed nonface " + layer[i].to_string() + " in " + label +
                            " is a face");
      }
    }
  };
  std::vector<VertexSet> sorted_rminus1 = out.level_rminus1;
  std::sort(sorted_rminus1.begin(), sorted_rminus1.end(), lex_less);
  check(sorted_rminus1, "level r-1");
  for (int j = 0; j <= j_max; ++j) {
    check(out.level_r_by_j[static_cast<std::size_t>(j)], "level r, j=" + std::to_string(j));
  }
  return out;
}

BigInt LayerSizes::r_total() const {
  BigInt total = 0;
  for (const auto& c : r_by_j) total += c;
  return total;
}

LayerSizes layer_sizes(int k, int n) {
  require_closed_range(k, n);
  const int r = n - k;
  LayerSizes out;
  out.rminus1 = r;
  for (int j = 0; j <= std::min(k - 1, r); ++j) out.r_by_j.push_back(binomial(k - 1, j) * (r - j + 1));
  return out;
}

BigInt layered_beta(int k, int n) {
  const LayerSizes sizes = layer_sizes(k, n);
  return binomial(n - 1, n - k) + sizes.rminus1 - sizes.r_total();
}

}  // namespace cutcx
