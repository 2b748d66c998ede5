#include "bigeo/graph.hpp"

#include <algorithm>
#include <string>

#include "bigeo/errors.hpp"

namespace bigeo {

Graph::Graph(std::size_t n_vertices) : adjacency_(n_vertices) {}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= vertex_count() || v >= vertex_count()) {
    throw PreconditionError("edge {" + std::to_string(u) + ", " + std::to_string(v) +
                            "} references a vertex outside [0, " +
                            std::to_string(vertex_count()) + ")");
  }
  if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
  auto& from_u = adjacency_[u];
  auto at = std::lower_bound(from_u.begin(), from_u.end(), v);
  if (at != from_u.end() && *at == v) {
    throw PreconditionError("repeated edge {" + std::to_string(u) + ", " + std::to_string(v) +
                            "}");
  }
  from_u.insert(at, v);
  auto& from_v = adjacency_[v];
  from_v.insert(std::lower_bound(from_v.begin(), from_v.end(), u), u);
  ++n_edges_;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& from_u = adjacency_.at(u);
  return std::binary_search(from_u.begin(), from_u.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(n_edges_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("a cycle needs at least three vertices");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph complete_bipartite_graph(std::size_t left, std::size_t right) {
  Graph g(left + right);
  for (Vertex u = 0; u < left; ++u) {
    for (Vertex v = 0; v < right; ++v) g.add_edge(u, left + v);
  }
  return g;
}

}  // namespace bigeo
