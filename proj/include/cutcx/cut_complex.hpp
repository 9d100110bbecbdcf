#pragma once

#include <vector>

#include "cutcx/bigint.hpp"
#include "cutcx/graph.hpp"
#include "cutcx/polynomial.hpp"
#include "cutcx/vertex_set.hpp"

namespace cutcx {

// Face counts of a k-cut complex by cardinality: counts[p] = f_{p-1}.
// The void complex (no faces, not even the empty one) has is_void set and
// no counts.
struct FVector {
  int n = 0;
  int k = 0;
  bool is_void = false;
  std::vector<BigInt> counts;

  // Zero beyond the stored range.
  BigInt at(int p) const;

  friend bool operator==(const FVector&, const FVector&) = default;
};

// Explicit face lists, by cardinality. Void when by_cardinality is empty.
struct FaceLists {
  int n = 0;
  std::vector<std::vector<VertexSet>> by_cardinality;  // each list lex-sorted

  bool is_void() const { return by_cardinality.empty(); }
  // All subsets of the given facets.
  static FaceLists from_facets(int n, const std::vector<VertexSet>& facets);
};

FVector f_vector_of(const FaceLists& faces, int k);

// D_k(G): k-subsets T with G[T] disconnected, in lexicographic order.
std::vector<VertexSet> disconnected_k_sets(const Graph& g, int k);

// Delta_k(G) built from its facets [n] \ T, T in D_k(G).
FaceLists cut_complex_faces(const Graph& g, int k);

// Complement criterion: f is a face iff [n] \ f contains a disconnected
// k-subset.
bool is_face(const Graph& g, int k, VertexSet f);

enum class FVectorMethod {
  kAuto,                // powerset scan for n <= 20, complement counting above
  kPowersetScan,        // is_face on every subset (n <= 20)
  kComplementCounting,  // f_{p-1} = C(n,p) - q_{n-p} from the bad profile
};

FVector f_vector_bruteforce(const Graph& g, int k, FVectorMethod method = FVectorMethod::kAuto,
                            unsigned threads = 1);

// Closed face enumerator of Delta_k(P_n^2), 2 <= k <= n-2, r = n-k:
//   sum_{p=0}^{r} C(n,p) x^p - r x^{r-1} - z_{k,n} x^r.
IntPolynomial face_enumerator_closed(int k, int n);

// sum_p f_{p-1} x^p; zero polynomial for the void complex.
IntPolynomial face_polynomial(const FVector& fv);

// -F(-1) = sum over faces of (-1)^{|F|-1}. The void complex gives 0 and {empty}
// gives -1.
BigInt reduced_euler(const FVector& fv);

// Nonfaces of Delta_k(P_n^2) in cardinalities r-1 and r.
struct NonfaceLayers {
  int k = 0;
  int n = 0;
  // [n] \ {s, ..., s+k} for s = 1..r
  std::vector<VertexSet> level_rminus1;
  // level_r_by_j[j]: complements of connected k-sets with exactly j gaps of 2
  std::vector<std::vector<VertexSet>> level_r_by_j;
};

// Builds the layers constructively from intervals and gap words, then checks
// every listed set with is_face on P_n^2. Listing is capped at 10^6 sets.
NonfaceLayers nonface_layers(int k, int n);

// Layer cardinalities without listing: |M_{r-1}| = r and
// |M_r(j)| = C(k-1, j)(r-j+1).
struct LayerSizes {
  BigInt rminus1;
  std::vector<BigInt> r_by_j;
  BigInt r_total() const;
};
LayerSizes layer_sizes(int k, int n);

// C(n-1, r) + |M_{r-1}| - |M_r|.
BigInt layered_beta(int k, int n);

}  // namespace cutcx
