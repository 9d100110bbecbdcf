#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cutcx/vertex_set.hpp"

namespace cutcx {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 1..n (n <= 64). Immutable once built.
class Graph {
 public:
  // Validates endpoints and rejects self-loops; repeated edges collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const;
  VertexSet vertices() const { return VertexSet::full(vertex_count()); }
  VertexSet neighbors(int v) const;
  bool adjacent(int u, int v) const;
  // Edges as (u, v) with u < v, ascending.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<Mask> adjacency) : adjacency_(std::move(adjacency)) {}

  std::vector<Mask> adjacency_;  // adjacency_[v-1] is the neighbor mask of v
};

// P_n^2: edges {i, i+1} and {i, i+2}.
Graph squared_path(int n);
Graph complete_graph(int n);

// True iff G[s] is connected. s must be a nonempty subset of 1..n.
bool is_connected_induced(const Graph& g, VertexSet s);

// Connectivity in P_n^2 by the gap criterion: consecutive members differ by
// at most 2. s must be nonempty.
bool gap_connected(VertexSet s);

// Text format: a header line "n <count>" followed by one "e <u> <v>" line per
// edge, 1-based. Blank lines and lines starting with '#' are ignored; any
// other line is rejected with InvalidArgument naming the line number.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

}  // namespace cutcx
