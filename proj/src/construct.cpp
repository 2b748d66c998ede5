#include "bigeo/construct.hpp"

#include <sstream>

#include "bigeo/errors.hpp"

namespace bigeo {

StarGraph::StarGraph(Graph graph, std::vector<VertexLabel> labels, DesignParams params,
                     std::vector<std::string> point_names)
    : graph_(std::move(graph)),
      labels_(std::move(labels)),
      params_(params),
      point_names_(std::move(point_names)) {
  if (labels_.size() != graph_.vertex_count()) {
    throw PreconditionError("star graph needs exactly one label per vertex");
  }
}

std::string StarGraph::label_text(Vertex v) const {
  const VertexLabel& l = label(v);
  const std::string& point = point_names_.at(l.point);
  if (l.kind == VertexKind::hub) return point;
  return "B" + std::to_string(l.block + 1) + ":" + point;
}

StarGraph star_construct(const Design& design) {
  const VerificationReport report = verify_design(design);
  if (!report.valid) {
    std::string why = report.violations.empty() ? "" : ": " + report.violations.front();
    throw PreconditionError("star construction needs a verified design" + why);
  }

  const std::size_t n = design.point_count();
  std::size_t incidences = 0;
  for (const Block& block : design.blocks()) incidences += block.size();

  std::vector<VertexLabel> labels;
  labels.reserve(n + incidences);
  for (Point p = 0; p < n; ++p) labels.push_back({VertexKind::hub, 0, p});

  Graph graph(n + incidences);
  Vertex next = n;
  for (std::size_t i = 0; i < design.block_count(); ++i) {
    const Block& block = design.block(i);
    const Vertex first = next;
    for (Point p : block) {
      labels.push_back({VertexKind::copy, i, p});
      graph.add_edge(next, p);
      for (Vertex earlier = first; earlier < next; ++earlier) graph.add_edge(earlier, next);
      ++next;
    }
  }

  std::vector<std::string> names;
  names.reserve(n);
  for (Point p = 0; p < n; ++p) names.push_back(design.label(p));
  return StarGraph(std::move(graph), std::move(labels), *report.params, std::move(names));
}

std::string export_dot(const StarGraph& star) {
  const DesignParams& p = star.params();
  std::ostringstream out;
  out << "graph \"K" << p.n << "*(" << p.r << "," << p.k << "," << p.lambda << ")\" {\n";
  const Graph& g = star.graph();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const bool hub = star.label(v).kind == VertexKind::hub;
    out << "  v" << v << " [label=\"" << star.label_text(v) << "\", shape="
        << (hub ? "box" : "circle") << "];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json graph_to_json(const StarGraph& star) {
  const Graph& g = star.graph();
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::json labels = nlohmann::json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) labels.push_back(star.label_text(v));
  return {{"n_vertices", g.vertex_count()}, {"edges", std::move(edges)},
          {"labels", std::move(labels)}};
}

}  // namespace bigeo
