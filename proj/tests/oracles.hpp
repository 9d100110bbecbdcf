// Naive reference implementations used only by the tests. Nothing here calls
// into the library's algorithms: graphs are edge lists, sets are sorted int
// vectors, arithmetic is __int128 or plain GF(p) Gaussian elimination.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using i128 = __int128;
using Set = std::vector<int>;
using EdgeList = std::vector<std::pair<int, int>>;

inline std::string str(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  std::string s;
  while (v != 0) {
    const int d = static_cast<int>(v % 10);
    s.push_back(static_cast<char>('0' + (neg ? -d : d)));
    v /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

inline EdgeList squared_path_edges(int n) {
  EdgeList e;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (j - i <= 2) e.emplace_back(i, j);
    }
  }
  return e;
}

inline EdgeList complete_edges(int n) {
  EdgeList e;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  }
  return e;
}

// Flood fill that rescans the whole edge list until nothing changes.
inline bool connected(const EdgeList& edges, const Set& s) {
  if (s.empty()) return false;
  std::vector<int> reached{s.front()};
  bool grew = true;
  auto in = [](const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); };
  while (grew) {
    grew = false;
    for (auto [u, v] : edges) {
      if (!in(s, u) || !in(s, v)) continue;
      if (in(reached, u) && !in(reached, v)) {
        reached.push_back(v);
        grew = true;
      } else if (in(reached, v) && !in(reached, u)) {
        reached.push_back(u);
        grew = true;
      }
    }
  }
  return reached.size() == s.size();
}

inline Set members(std::uint64_t mask) {
  Set s;
  for (int v = 1; v <= 64; ++v) {
    if ((mask >> (v - 1)) & 1U) s.push_back(v);
  }
  return s;
}

inline std::vector<Set> k_subsets(const Set& pool, int k) {
  std::vector<Set> out;
  const int m = static_cast<int>(pool.size());
  if (k < 0 || k > m) return out;
  std::vector<bool> pick(static_cast<std::size_t>(m), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Set s;
    for (int i = 0; i < m; ++i) {
      if (pick[static_cast<std::size_t>(i)]) s.push_back(pool[static_cast<std::size_t>(i)]);
    }
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

inline Set complement(int n, const Set& s) {
  Set out;
  for (int v = 1; v <= n; ++v) {
    if (std::find(s.begin(), s.end(), v) == s.end()) out.push_back(v);
  }
  return out;
}

// Face test straight from the facet definition: F lies in [n] \ T for some
// disconnected k-set T.
inline bool is_face(const EdgeList& edges, int n, int k, const Set& f) {
  for (const Set& t : k_subsets(complement(n, {}), k)) {
    if (connected(edges, t)) continue;
    bool disjoint = true;
    for (int v : f) disjoint = disjoint && std::find(t.begin(), t.end(), v) == t.end();
    if (disjoint) return true;
  }
  return false;
}

// Faces by cardinality; empty when the complex is void.
inline std::vector<std::int64_t> f_vector(const EdgeList& edges, int n, int k) {
  std::vector<Set> disconnected;
  for (const Set& t : k_subsets(complement(n, {}), k)) {
    if (!connected(edges, t)) disconnected.push_back(t);
  }
  std::vector<std::int64_t> f;
  if (disconnected.empty()) return f;
  f.assign(static_cast<std::size_t>(n + 1), 0);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const Set s = members(m);
    for (const Set& t : disconnected) {
      bool disjoint = true;
      for (int v : s) disjoint = disjoint && std::find(t.begin(), t.end(), v) == t.end();
      if (disjoint) {
        ++f[s.size()];
        break;
      }
    }
  }
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

// q_m for m = k..n by testing every k-subset of every m-subset.
inline std::vector<std::int64_t> bad_profile(const EdgeList& edges, int n, int k) {
  std::vector<std::int64_t> q(static_cast<std::size_t>(n - k + 1), 0);
  for (int m = k; m <= n; ++m) {
    for (const Set& c : k_subsets(complement(n, {}), m)) {
      bool bad = true;
      for (const Set& t : k_subsets(c, k)) {
        if (!connected(edges, t)) {
          bad = false;
          break;
        }
      }
      if (bad) ++q[static_cast<std::size_t>(m - k)];
    }
  }
  return q;
}

// Combinatorial binomial, zero outside 0 <= b <= a.
inline i128 choose(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  i128 r = 1;
  for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

// Connected k-subsets of P_n^2 counted by enumeration.
inline i128 connected_count(int n, int k) {
  const EdgeList e = squared_path_edges(n);
  i128 c = 0;
  for (const Set& t : k_subsets(complement(n, {}), k)) c += connected(e, t) ? 1 : 0;
  return c;
}

// z_{k,n} by a dynamic program over the last two chosen positions: a connected
// k-set is a run of gaps in {1, 2}, so count starts times gap words that fit.
inline i128 z_dp(int k, int n) {
  // ways[len] = number of gap words of k-1 letters from {1,2} with total len.
  std::vector<i128> ways(static_cast<std::size_t>(2 * k + 1), 0);
  ways[0] = 1;
  for (int step = 0; step < k - 1; ++step) {
    std::vector<i128> next(ways.size(), 0);
    for (std::size_t len = 0; len < ways.size(); ++len) {
      if (ways[len] == 0) continue;
      if (len + 1 < next.size()) next[len + 1] += ways[len];
      if (len + 2 < next.size()) next[len + 2] += ways[len];
    }
    ways = next;
  }
  i128 total = 0;
  for (int len = 0; len < static_cast<int>(ways.size()); ++len) {
    if (len <= n - 1) total += ways[static_cast<std::size_t>(len)] * (n - len);
  }
  return total;
}

// beta(k, n) from the definition pieces, with int128 arithmetic.
inline i128 beta(int k, int n) { return choose(n - 1, k - 1) - z_dp(k, n) + (n - k); }

// Polynomial binomial binom(x + a, m) evaluated at an integer x.
inline i128 poly_choose(std::int64_t top, int m) {
  i128 num = 1;
  i128 den = 1;
  for (int i = 0; i < m; ++i) {
    num *= top - i;
    den *= i + 1;
  }
  if (num % den != 0) throw std::logic_error("non-integral falling factorial");
  return num / den;
}

// B_r(k) evaluated pointwise with the polynomial binomial.
inline i128 diagonal_value(int r, std::int64_t k) {
  i128 v = poly_choose(k + r - 1, r) + r;
  for (int j = 0; j <= r; ++j) v -= static_cast<i128>(r - j + 1) * poly_choose(k - 1, j);
  return v;
}

// s-th backward difference of B_r at k, by expansion.
inline i128 backward_difference(int r, int s, std::int64_t k) {
  i128 sum = 0;
  for (int i = 0; i <= s; ++i) {
    const i128 term = choose(s, i) * diagonal_value(r, k - i);
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum;
}

// Power series of num(x) / (1-x)^e by convolution with C(m+e-1, e-1).
inline std::vector<i128> rational_series(const std::vector<i128>& num, int e, int terms) {
  std::vector<i128> out(static_cast<std::size_t>(terms), 0);
  for (int d = 0; d < terms; ++d) {
    for (int i = 0; i <= d && i < static_cast<int>(num.size()); ++i) {
      const int m = d - i;
      const i128 c = e == 0 ? (m == 0 ? 1 : 0) : choose(m + e - 1, e - 1);
      out[static_cast<std::size_t>(d)] += num[static_cast<std::size_t>(i)] * c;
    }
  }
  return out;
}

// ---- homology over GF(p) --------------------------------------------------

inline int rank_mod(std::vector<std::vector<int>> a, int p) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    int inv = 1;
    const int pivot = ((a[r][c] % p) + p) % p;
    while ((pivot * inv) % p != 1) ++inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const int factor = (((a[i][c] % p) + p) % p) * inv % p;
      if (factor == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = (((a[i][j] - factor * a[r][j]) % p) + p) % p;
    }
    ++r;
    ++rank;
  }
  return rank;
}

// Reduced Betti numbers beta_{-1}, beta_0, ..., beta_d of the complex given by
// its facets, over GF(p). Index 0 of the result is degree -1. Empty for void.
inline std::vector<int> reduced_betti(int n, const std::vector<Set>& facets, int p) {
  if (facets.empty()) return {};
  std::map<Set, int> index;
  std::vector<std::vector<Set>> by_size(static_cast<std::size_t>(n + 2));
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const Set s = members(m);
    for (const Set& f : facets) {
      if (std::includes(f.begin(), f.end(), s.begin(), s.end())) {
        by_size[s.size()].push_back(s);
        break;
      }
    }
  }
  while (!by_size.empty() && by_size.back().empty()) by_size.pop_back();
  for (auto& layer : by_size) {
    std::sort(layer.begin(), layer.end());
    for (std::size_t i = 0; i < layer.size(); ++i) index[layer[i]] = static_cast<int>(i);
  }
  const int top = static_cast<int>(by_size.size()) - 1;  // largest cardinality
  // ranks[c] = rank of the map from cardinality c to c-1, c = 1..top.
  std::vector<int> ranks(static_cast<std::size_t>(top + 2), 0);
  for (int c = 1; c <= top; ++c) {
    const auto& lo = by_size[static_cast<std::size_t>(c - 1)];
    const auto& hi = by_size[static_cast<std::size_t>(c)];
    std::vector<std::vector<int>> mat(lo.size(), std::vector<int>(hi.size(), 0));
    for (std::size_t j = 0; j < hi.size(); ++j) {
      for (int i = 0; i < c; ++i) {
        Set face = hi[j];
        face.erase(face.begin() + i);
        mat[static_cast<std::size_t>(index.at(face))][j] = (i % 2 == 0) ? 1 : p - 1;
      }
    }
    ranks[static_cast<std::size_t>(c)] = rank_mod(mat, p);
  }
  std::vector<int> betti;
  for (int c = 0; c <= top; ++c) {
    const int faces = static_cast<int>(by_size[static_cast<std::size_t>(c)].size());
    betti.push_back(faces - ranks[static_cast<std::size_t>(c)] - ranks[static_cast<std::size_t>(c + 1)]);
  }
  return betti;
}

inline std::vector<Set> cut_facets(const EdgeList& edges, int n, int k) {
  std::vector<Set> facets;
  for (const Set& t : k_subsets(complement(n, {}), k)) {
    if (!connected(edges, t)) facets.push_back(complement(n, t));
  }
  return facets;
}

}  // namespace oracle
