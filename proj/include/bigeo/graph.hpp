#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace bigeo {

using Vertex = std::size_t;

// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  explicit Graph(std::size_t n_vertices = 0);

  // Throws PreconditionError on loops, repeated edges or out-of-range ids.
  void add_edge(Vertex u, Vertex v);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return n_edges_; }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;

  // Every edge once as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t n_edges_ = 0;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t left, std::size_t right);

}  // namespace bigeo
