#include "cutcx/vertex_set.hpp"

#include <string>

#include "cutcx/errors.hpp"

namespace cutcx {
namespace {

Mask bit_of(int v) {
  if (v < 1 || v > kMaxVertices) {
    throw InvalidArgument("vertex " + std::to_string(v) + " outside 1.." +
                          std::to_string(kMaxVertices));
  }
  return Mask{1} << (v - 1);
}

}  // namespace

VertexSet VertexSet::of(std::initializer_list<int> vertices) {
  Mask m = 0;
  for (int v : vertices) m |= bit_of(v);
  return from_mask(m);
}

VertexSet VertexSet::from_members(std::span<const int> vertices) {
  Mask m = 0;
  for (int v : vertices) m |= bit_of(v);
  return from_mask(m);
}

VertexSet VertexSet::interval(int lo, int hi) {
  if (hi < lo) return {};
  Mask m = 0;
  for (int v = lo; v <= hi; ++v) m |= bit_of(v);
  return from_mask(m);
}

VertexSet VertexSet::with(int v) const { return from_mask(bits_ | bit_of(v)); }
VertexSet VertexSet::without(int v) const { return from_mask(bits_ & ~bit_of(v)); }

VertexSet VertexSet::complement(int n) const {
  return from_mask(full(n).mask() & ~bits_);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](int v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  out += '}';
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  const Mask diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  const int e = std::countr_zero(diff);
  // The sequences agree below e. If e belongs to a, then a < b exactly when b
  // still has a member beyond e; otherwise b is a proper prefix of a.
  const Mask above = (e == 63) ? 0 : (~Mask{0} << (e + 1));
  if ((a.mask() >> e) & 1U) return (b.mask() & above) != 0;
  return (a.mask() & above) == 0;
}

void require_enumerable(int n) {
  if (n > kEnumerationCapacity) {
    throw CapacityError("n=" + std::to_string(n) + " exceeds the enumeration capacity of " +
                        std::to_string(kEnumerationCapacity));
  }
}

void require_vertex_count(int n) {
  if (n < 1) throw InvalidArgument("vertex count must be positive, got " + std::to_string(n));
  if (n > kMaxVertices) {
    throw CapacityError("n=" + std::to_string(n) + " exceeds the bitmask limit of " +
                        std::to_string(kMaxVertices));
  }
}

}  // namespace cutcx
