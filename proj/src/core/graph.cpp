#include "cutcx/graph.hpp"

#include <bit>
#include <charconv>
#include <sstream>
#include <string>

#include "cutcx/errors.hpp"

namespace cutcx {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  require_vertex_count(n);
  std::vector<Mask> adjacency(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} has an endpoint outside 1.." + std::to_string(n));
    }
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    adjacency[u - 1] |= Mask{1} << (v - 1);
    adjacency[v - 1] |= Mask{1} << (u - 1);
  }
  return Graph(std::move(adjacency));
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (Mask m : adjacency_) twice += static_cast<std::size_t>(std::popcount(m));
  return twice / 2;
}

VertexSet Graph::neighbors(int v) const {
  if (v < 1 || v > vertex_count()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " outside 1.." +
                          std::to_string(vertex_count()));
  }
  return VertexSet::from_mask(adjacency_[v - 1]);
}

bool Graph::adjacent(int u, int v) const { return neighbors(u).contains(v); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= vertex_count(); ++u) {
    neighbors(u).for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph squared_path(int n) {
  require_vertex_count(n);
  std::vector<Edge> edges;
  for (int i = 1; i + 1 <= n; ++i) edges.emplace_back(i, i + 1);
  for (int i = 1; i + 2 <= n; ++i) edges.emplace_back(i, i + 2);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  require_vertex_count(n);
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

bool is_connected_induced(const Graph& g, VertexSet s) {
  if (s.empty()) throw InvalidArgument("connectivity of the empty vertex set is undefined");
  if (!s.within(g.vertex_count())) {
    throw InvalidArgument("vertex set " + s.to_string() + " is not a subset of 1.." +
                          std::to_string(g.vertex_count()));
  }
  const Mask target = s.mask();
  Mask reached = target & (~target + 1);
  Mask frontier = reached;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask rest = frontier; rest != 0; rest &= rest - 1) {
      next |= g.neighbors(std::countr_zero(rest) + 1).mask();
    }
    next &= target & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == target;
}

bool gap_connected(VertexSet s) {
  if (s.empty()) throw InvalidArgument("connectivity of the empty vertex set is undefined");
  int prev = 0;
  bool ok = true;
  s.for_each([&](int v) {
    if (prev != 0 && v - prev > 2) ok = false;
    prev = v;
  });
  return ok;
}

namespace {

int parse_int(std::string_view token, std::size_t line_no) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw InvalidArgument("line " + std::to_string(line_no) + ": expected an integer, got '" +
                          std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens[0] == "n" && tokens.size() == 2) {
      if (n != -1) throw InvalidArgument("line " + std::to_string(line_no) + ": repeated header");
      n = parse_int(tokens[1], line_no);
      require_vertex_count(n);
    } else if (tokens[0] == "e" && tokens.size() == 3) {
      if (n == -1) {
        throw InvalidArgument("line " + std::to_string(line_no) + ": edge before 'n' header");
      }
      edges.emplace_back(parse_int(tokens[1], line_no), parse_int(tokens[2], line_no));
    } else {
      throw InvalidArgument("line " + std::to_string(line_no) + ": unrecognised line '" +
                            std::string(line) + "'");
    }
  }
  if (n == -1) throw InvalidArgument("missing 'n <count>' header");
  return Graph::from_edges(n, edges);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace cutcx
