#pragma once

#include <array>

#include "cutcx/vertex_set.hpp"

namespace cutcx {

// Visits every k-subset of `universe` in lexicographic order of the sorted
// member sequences. `fn` returns false to stop early; the return value
// reports whether the scan ran to completion.
template <class Fn>
bool for_each_k_subset(VertexSet universe, int k, Fn&& fn) {
  std::array<int, kMaxVertices> pool{};
  int size = 0;
  universe.for_each([&](int v) { pool[size++] = v; });
  if (k < 0 || k > size) return true;
  if (k == 0) return fn(VertexSet{});

  std::array<int, kMaxVertices> idx{};
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    Mask m = 0;
    for (int i = 0; i < k; ++i) m |= Mask{1} << (pool[idx[i]] - 1);
    if (!fn(VertexSet::from_mask(m))) return false;

    int i = k - 1;
    while (i >= 0 && idx[i] == size - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Next larger mask with the same popcount (Gosper's hack). m must be nonzero.
constexpr Mask next_same_popcount(Mask m) {
  const Mask low = m & (~m + 1);
  const Mask ripple = m + low;
  return ripple | (((m ^ ripple) >> 2) / low);
}

}  // namespace cutcx
