#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cutcx/bigint.hpp"
#include "cutcx/graph.hpp"
#include "cutcx/vertex_set.hpp"

namespace cutcx {

// q_m(G, k) for k <= m <= n: the number of k-bad m-subsets.
struct BadProfile {
  int k = 0;
  int n = 0;
  std::vector<BigInt> counts;  // counts[m - k]

  // Zero outside k..n.
  BigInt q(int m) const;

  friend bool operator==(const BadProfile&, const BadProfile&) = default;
};

// Which connectivity predicate a brute-force engine uses.
enum class ConnectivityEngine {
  kInducedSearch,  // breadth-first search in G[S]; any graph
  kGapCriterion,   // consecutive gaps <= 2; valid for P_n^2 only
};

// True iff |c| >= k and every k-subset of c induces a connected subgraph.
// Scans k-subsets and stops at the first disconnected one; when |c| >= k+2
// the candidate {c_1} u {c_{s+2}, ..., c_{k+s}} (s = |c| - k) is tried first.
bool is_bad(const Graph& g, int k, VertexSet c);
// Same scan with the gap criterion, i.e. badness in P_n^2.
bool is_bad_gap(int k, VertexSet c);

// Bitmap over all subsets C of [n] recording whether C contains a k-subset
// that the predicate reports disconnected. Built by marking the
// disconnected k-sets and closing upward under supersets.
class DisconnectedClosure {
 public:
  DisconnectedClosure(int n, int k, ConnectivityEngine engine, const Graph* g,
                      unsigned threads = 1);

  int n() const { return n_; }
  int k() const { return k_; }
  bool contains_disconnected(Mask c) const {
    return ((words_[c >> 6] >> (c & 63U)) & 1U) != 0;
  }
  // Number of k-bad subsets of each cardinality m in k..n.
  std::vector<std::uint64_t> bad_counts() const;

 private:
  int n_;
  int k_;
  std::vector<std::uint64_t> words_;
};

// Direct enumeration of q_m over all subsets (n <= 24), generic graph.
BadProfile q_profile_bruteforce(const Graph& g, int k, unsigned threads = 1);
// Same for P_n^2 using the gap criterion as the connectivity engine.
BadProfile q_profile_bruteforce_squared_path(int n, int k, unsigned threads = 1);

// Number of connected k-subsets of P_n^2 by the gap-word count
//   sum_{j=0}^{min(k-1, n-k)} C(k-1, j) (n-k-j+1).
BigInt z_count(int k, int n);

// Closed bad-complement profile of P_n^2 for 2 <= k <= n-2:
// q_k = z_{k,n}, q_{k+1} = n-k, and zero above.
BadProfile q_profile_closed(int k, int n);

}  // namespace cutcx
