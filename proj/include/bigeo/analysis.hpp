#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>

#include <json.hpp>

#include "bigeo/graph.hpp"

namespace bigeo {

// All-pairs shortest-path distances and geodesic counts.
class GeodesicTable {
 public:
  GeodesicTable(std::size_t n, std::vector<std::uint32_t> distance,
                std::vector<std::uint64_t> count);

  std::size_t vertex_count() const noexcept { return n_; }
  std::uint32_t distance(Vertex u, Vertex v) const { return distance_.at(u * n_ + v); }
  std::uint64_t count(Vertex u, Vertex v) const { return count_.at(u * n_ + v); }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> distance_;
  std::vector<std::uint64_t> count_;
};

// Breadth-first layering from every source with shortest-path DAG
// accumulation. Throws DisconnectedGraphError on a disconnected graph and
// OverflowError if a count would exceed 2^63.
GeodesicTable geodesic_counts(const Graph& graph);

bool is_connected(const Graph& graph);

// Largest geodesic count over nonadjacent pairs; 1 when every pair is
// adjacent. A graph is geodetic iff this is 1, bigeodetic iff it is <= 2.
std::uint64_t geodetic_index(const Graph& graph);
std::uint64_t geodetic_index(const Graph& graph, const GeodesicTable& table);

std::uint32_t diameter(const Graph& graph);
std::uint32_t diameter(const GeodesicTable& table);

// Maximum number of internally vertex-disjoint s-t paths for nonadjacent s, t.
std::size_t local_vertex_connectivity(const Graph& graph, Vertex s, Vertex t);

// Exact vertex connectivity via unit-capacity max flow on the split graph.
// A complete graph on m vertices has connectivity m - 1. Throws
// PreconditionError for graphs with fewer than two vertices.
std::size_t vertex_connectivity(const Graph& graph);

// degree -> number of vertices with that degree
std::map<std::size_t, std::size_t> degree_multiset(const Graph& graph);

// Witness of B(connectivity, degree, diameter) membership.
struct ClassMembership {
  std::size_t connectivity = 0;
  std::size_t degree = 0;
  std::uint32_t diameter = 0;

  friend bool operator==(const ClassMembership&, const ClassMembership&) = default;
};

struct GraphReport {
  std::size_t n_vertices = 0;
  std::size_t n_edges = 0;
  std::map<std::size_t, std::size_t> degree_multiset;
  bool is_connected = false;
  std::uint32_t diameter = 0;
  std::size_t vertex_connectivity = 0;
  std::uint64_t geodetic_index = 0;
  bool is_block = false;
  std::optional<ClassMembership> class_membership;

  nlohmann::json to_json() const;
};

// Requires a connected graph.
GraphReport classify(const Graph& graph);

}  // namespace bigeo
