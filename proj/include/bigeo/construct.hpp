#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "bigeo/design.hpp"
#include "bigeo/graph.hpp"

namespace bigeo {

enum class VertexKind { hub, copy };

// Hub(point) or Copy(block, point). `block` is meaningless for hubs.
struct VertexLabel {
  VertexKind kind = VertexKind::hub;
  std::size_t block = 0;
  Point point = 0;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

// K_n*(r, k, lambda): one hub per point, one copy vertex per (block, point)
// incidence, a clique on the copies of each block and a pendant edge from
// every copy to the hub of its point.
//
// Vertex ids: hubs are 0..n-1 in point order, copies follow in
// (block, position-in-block) order.
class StarGraph {
 public:
  StarGraph(Graph graph, std::vector<VertexLabel> labels, DesignParams params,
            std::vector<std::string> point_names);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<VertexLabel>& labels() const noexcept { return labels_; }
  const VertexLabel& label(Vertex v) const { return labels_.at(v); }
  const DesignParams& params() const noexcept { return params_; }

  // "x3" for a hub, "B2:x3" for the copy of x3 in the second block.
  std::string label_text(Vertex v) const;

 private:
  Graph graph_;
  std::vector<VertexLabel> labels_;
  DesignParams params_;
  std::vector<std::string> point_names_;
};

// Throws PreconditionError when the design does not verify.
StarGraph star_construct(const Design& design);

std::string export_dot(const StarGraph& star);

// {"n_vertices": int, "edges": [[u, v], ...], "labels": [string, ...]}
nlohmann::json graph_to_json(const StarGraph& star);

}  // namespace bigeo
