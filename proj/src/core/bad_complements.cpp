#include "cutcx/bad_complements.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "cutcx/errors.hpp"
#include "cutcx/parallel.hpp"
#include "cutcx/subsets.hpp"

namespace cutcx {
namespace {

void require_k_in_range(int k, int n) {
  if (k < 2 || k > n) {
    throw InvalidArgument("k=" + std::to_string(k) + " outside 2..n with n=" + std::to_string(n));
  }
}

template <class Connected>
bool is_bad_with(int k, VertexSet c, Connected&& connected) {
  const int size = c.size();
  if (size < k) return false;
  if (size >= k + 2) {
    // {c_1} u {c_{s+2}, ..., c_{k+s}}: the first two members are s+1 >= 3
    // positions apart in c, which settles P_n^2 at once.
    const int s = size - k;
    std::array<int, kMaxVertices> members{};
    int count = 0;
    c.for_each([&](int v) { members[count++] = v; });
    Mask witness = Mask{1} << (members[0] - 1);
    for (int i = s + 1; i < size; ++i) witness |= Mask{1} << (members[i] - 1);
    if (!connected(VertexSet::from_mask(witness))) return false;
  }
  return for_each_k_subset(c, k, [&](VertexSet t) { return connected(t); });
}

}  // namespace

BigInt BadProfile::q(int m) const {
  if (m < k || m > n) return BigInt(0);
  return counts[static_cast<std::size_t>(m - k)];
}

bool is_bad(const Graph& g, int k, VertexSet c) {
  require_k_in_range(k, g.vertex_count());
  if (!c.within(g.vertex_count())) {
    throw InvalidArgument("set " + c.to_string() + " is not a subset of 1.." +
                          std::to_string(g.vertex_count()));
  }
  return is_bad_with(k, c, [&](VertexSet t) { return is_connected_induced(g, t); });
}

bool is_bad_gap(int k, VertexSet c) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  return is_bad_with(k, c, [](VertexSet t) { return gap_connected(t); });
}

DisconnectedClosure::DisconnectedClosure(int n, int k, ConnectivityEngine engine, const Graph* g,
                                         unsigned threads)
    : n_(n), k_(k) {
  require_vertex_count(n);
  require_enumerable(n);
  require_k_in_range(k, n);
  if (engine == ConnectivityEngine::kInducedSearch && (g == nullptr || g->vertex_count() != n)) {
    throw InvalidArgument("induced-search engine needs a graph on n vertices");
  }
  const std::size_t word_count = std::max<std::size_t>(1, (std::size_t{1} << n) / 64);
  words_.assign(word_count, 0);

  // Mark the disconnected k-sets. Each worker owns a block of words.
  const Mask limit = Mask{1} << n;
  parallel_for(word_count, threads, [&](std::size_t w) {
    std::uint64_t word = 0;
    for (unsigned b = 0; b < 64; ++b) {
      const Mask m = static_cast<Mask>(w) * 64 + b;
      if (m >= limit) break;
      if (std::popcount(m) != k) continue;
      const VertexSet t = VertexSet::from_mask(m);
      const bool connected = engine == ConnectivityEngine::kGapCriterion
                                 ? gap_connected(t)
                                 : is_connected_induced(*g, t);
      if (!connected) word |= std::uint64_t{1} << b;
    }
    words_[w] = word;
  });

  // Close upward: flag[m] |= flag[m without bit i], one bit at a time.
  static constexpr std::array<std::uint64_t, 6> kLowHalf = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
      0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
  for (int i = 0; i < n; ++i) {
    if (i < 6) {
      const unsigned shift = 1U << i;
      parallel_for(word_count, threads, [&](std::size_t w) {
        words_[w] |= (words_[w] & kLowHalf[static_cast<std::size_t>(i)]) << shift;
      });
    } else {
      const std::size_t stride = std::size_t{1} << (i - 6);
      parallel_for(word_count, threads, [&](std::size_t w) {
        if ((w & stride) != 0) words_[w] |= words_[w ^ stride];
      });
    }
  }
}

std::vector<std::uint64_t> DisconnectedClosure::bad_counts() const {
  const Mask limit = Mask{1} << n_;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n_ - k_ + 1), 0);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (unsigned b = 0; b < 64; ++b) {
      const Mask m = static_cast<Mask>(w) * 64 + b;
      if (m >= limit) break;
      const int size = std::popcount(m);
      if (size >= k_ && ((words_[w] >> b) & 1U) == 0) ++counts[static_cast<std::size_t>(size - k_)];
    }
  }
  return counts;
}

namespace {

BadProfile profile_from_closure(const DisconnectedClosure& closure) {
  BadProfile out{closure.k(), closure.n(), {}};
  for (std::uint64_t c : closure.bad_counts()) out.counts.emplace_back(static_cast<unsigned long>(c));
  return out;
}

}  // namespace

BadProfile q_profile_bruteforce(const Graph& g, int k, unsigned threads) {
  const DisconnectedClosure closure(g.vertex_count(), k, ConnectivityEngine::kInducedSearch, &g,
                                    threads);
  return profile_from_closure(closure);
}

BadProfile q_profile_bruteforce_squared_path(int n, int k, unsigned threads) {
  const DisconnectedClosure closure(n, k, ConnectivityEngine::kGapCriterion, nullptr, threads);
  return profile_from_closure(closure);
}

BigInt z_count(int k, int n) {
  require_k_in_range(k, n);
  BigInt total = 0;
  const int top = std::min(k - 1, n - k);
  for (int j = 0; j <= top; ++j) total += binomial(k - 1, j) * (n - k - j + 1);
  return total;
}

BadProfile q_profile_closed(int k, int n) {
  if (k < 2 || k > n - 2) {
    throw InvalidArgument("closed profile needs 2 <= k <= n-2, got k=" + std::to_string(k) +
                          " n=" + std::to_string(n));
  }
  BadProfile out{k, n, std::vector<BigInt>(static_cast<std::size_t>(n - k + 1), BigInt(0))};
  out.counts[0] = z_count(k, n);
  out.counts[1] = n - k;
  return out;
}

}  // namespace cutcx
