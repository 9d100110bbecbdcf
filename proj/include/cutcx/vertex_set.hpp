#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cutcx {

using Mask = std::uint64_t;

// Largest n representable by a single-word VertexSet.
inline constexpr int kMaxVertices = 64;
// Largest n for which full powerset scans are permitted.
inline constexpr int kEnumerationCapacity = 24;

// A subset of {1..64}. Bit v-1 of the mask represents vertex v.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet from_mask(Mask bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  static VertexSet of(std::initializer_list<int> vertices);
  static VertexSet from_members(std::span<const int> vertices);
  // {lo, lo+1, ..., hi}; empty when hi < lo.
  static VertexSet interval(int lo, int hi);
  static VertexSet full(int n) { return interval(1, n); }

  constexpr Mask mask() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const {
    return v >= 1 && v <= kMaxVertices && ((bits_ >> (v - 1)) & 1U) != 0;
  }
  // Smallest / largest member; 0 for the empty set.
  constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  constexpr int max() const { return bits_ == 0 ? 0 : kMaxVertices - std::countl_zero(bits_); }
  constexpr bool within(int n) const { return n >= kMaxVertices || (bits_ >> n) == 0; }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  VertexSet with(int v) const;
  VertexSet without(int v) const;
  VertexSet complement(int n) const;

  constexpr VertexSet operator|(VertexSet o) const { return from_mask(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return from_mask(bits_ & o.bits_); }

  std::vector<int> members() const;

  // Visits members in ascending order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (Mask rest = bits_; rest != 0; rest &= rest - 1) {
      fn(std::countr_zero(rest) + 1);
    }
  }

  // "{1,3,5}"
  std::string to_string() const;

  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

 private:
  Mask bits_ = 0;
};

// Lexicographic order on the ascending member sequences.
bool lex_less(VertexSet a, VertexSet b);

// Throws CapacityError when n exceeds the powerset-enumeration limit.
void require_enumerable(int n);

// Throws InvalidArgument / CapacityError unless 1 <= n <= kMaxVertices.
void require_vertex_count(int n);

}  // namespace cutcx
