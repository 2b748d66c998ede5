#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "bigeo/analysis.hpp"
#include "bigeo/catalog.hpp"
#include "bigeo/construct.hpp"
#include "bigeo/errors.hpp"
#include "bigeo/search.hpp"
#include "oracles.hpp"

using namespace bigeo;

namespace {

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  std::size_t count = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.find(needle) != std::string::npos) ++count;
  }
  return count;
}

// Checks the structural contract of the star graph against its design.
void check_structure(const Design& design) {
  const StarGraph star = star_construct(design);
  const Graph& g = star.graph();
  const DesignParams p = star.params();

  CHECK(g.vertex_count() == static_cast<std::size_t>(p.n * (p.r + 1)));
  CHECK(g.edge_count() == static_cast<std::size_t>(p.n * p.r * (p.k + 1) / 2));

  std::size_t hubs = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const VertexLabel& l = star.label(v);
    if (l.kind == VertexKind::hub) {
      ++hubs;
      CHECK(v == l.point);
      CHECK(g.degree(v) == static_cast<std::size_t>(p.r));
    } else {
      CHECK(g.degree(v) == static_cast<std::size_t>(p.k));
      CHECK(g.adjacent(v, l.point));
    }
  }
  CHECK(hubs == design.point_count());

  // Adjacency is exactly: block cliques plus copy-hub pendants.
  for (const auto& [u, v] : g.edges()) {
    const VertexLabel& a = star.label(u);
    const VertexLabel& b = star.label(v);
    const bool pendant = (a.kind == VertexKind::hub) != (b.kind == VertexKind::hub) &&
                         a.point == b.point;
    const bool clique = a.kind == VertexKind::copy && b.kind == VertexKind::copy &&
                        a.block == b.block && a.point != b.point;
    CHECK((pendant || clique));
  }
}

}  // namespace

TEST_CASE("star graph sizes") {
  SUBCASE("fig2: 49 vertices, 84 edges") {
    const StarGraph s = star_construct(get_design("fig2").design);
    CHECK(s.graph().vertex_count() == 49);
    CHECK(s.graph().edge_count() == 84);
  }
  SUBCASE("fig3: 16 vertices, 24 edges") {
    const StarGraph s = star_construct(get_design("fig3").design);
    CHECK(s.graph().vertex_count() == 16);
    CHECK(s.graph().edge_count() == 24);
  }
  SUBCASE("fig4: 35 vertices, 70 edges") {
    const StarGraph s = star_construct(get_design("fig4").design);
    CHECK(s.graph().vertex_count() == 35);
    CHECK(s.graph().edge_count() == 70);
  }
}

TEST_CASE("vertex id scheme") {
  const StarGraph s = star_construct(get_design("fig3").design);
  CHECK(s.label(0) == VertexLabel{VertexKind::hub, 0, 0});
  CHECK(s.label(3) == VertexLabel{VertexKind::hub, 0, 3});
  CHECK(s.label(4) == VertexLabel{VertexKind::copy, 0, 0});
  CHECK(s.label(6) == VertexLabel{VertexKind::copy, 0, 2});
  CHECK(s.label(7) == VertexLabel{VertexKind::copy, 1, 0});
  CHECK(s.label_text(0) == "x1");
  CHECK(s.label_text(7) == "B2:x1");
}

TEST_CASE("star construction contract over the catalog and searched designs") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    check_structure(get_design(name).design);
  }
  for (const DesignParams& p : {DesignParams{10, 6, 5, 3, 2}, DesignParams{24, 9, 8, 3, 2},
                                DesignParams{10, 5, 6, 3, 3}}) {
    CAPTURE(p.to_string());
    check_structure(*search_design(p).design);
  }
}

TEST_CASE("regular star graph when r = k") {
  const StarGraph s = star_construct(get_design("biplane-11").design);
  CHECK(degree_multiset(s.graph()) == std::map<std::size_t, std::size_t>{{5, 66}});
}

TEST_CASE("relabelled designs give star graphs with the same invariants") {
  std::mt19937_64 rng(99);
  for (const char* name : {"fig1", "fig3", "fig4"}) {
    CAPTURE(name);
    const Design& d = get_design(name).design;
    const Graph base = star_construct(d).graph();
    const GeodesicTable base_table = geodesic_counts(base);
    std::map<std::uint32_t, std::size_t> base_distances;
    for (Vertex u = 0; u < base.vertex_count(); ++u) {
      for (Vertex v = u + 1; v < base.vertex_count(); ++v) ++base_distances[base_table.distance(u, v)];
    }
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Point> perm(d.point_count());
      std::iota(perm.begin(), perm.end(), Point{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      const Graph moved = star_construct(oracle::relabel(d, perm, rng)).graph();
      CHECK(degree_multiset(moved) == degree_multiset(base));
      const GeodesicTable table = geodesic_counts(moved);
      std::map<std::uint32_t, std::size_t> distances;
      for (Vertex u = 0; u < moved.vertex_count(); ++u) {
        for (Vertex v = u + 1; v < moved.vertex_count(); ++v) ++distances[table.distance(u, v)];
      }
      CHECK(distances == base_distances);
    }
  }
}

TEST_CASE("star_construct rejects unverified designs") {
  CHECK_THROWS_AS(star_construct(Design(4, {{0, 1, 2}, {0, 1, 3}})), PreconditionError);
}

TEST_CASE("export_dot") {
  const StarGraph s = star_construct(get_design("fig3").design);
  const std::string dot = export_dot(s);
  CHECK(dot.rfind("graph ", 0) == 0);
  CHECK(count_lines_with(dot, "[label=") == 16);
  CHECK(count_lines_with(dot, " -- ") == 24);
  CHECK(count_lines_with(dot, "shape=box") == 4);
  CHECK(export_dot(s) == dot);

  const StarGraph single = star_construct(Design(3, {{0, 1, 2}}));
  const std::string small = export_dot(single);
  CHECK(count_lines_with(small, "shape=box") == 3);
  CHECK(count_lines_with(small, "shape=circle") == 3);
}

TEST_CASE("graph_to_json") {
  const StarGraph s = star_construct(get_design("fig3").design);
  const auto doc = graph_to_json(s);
  CHECK(doc["n_vertices"] == 16);
  CHECK(doc["edges"].size() == 24);
  CHECK(doc["labels"].size() == 16);
  CHECK(doc["edges"][0] == nlohmann::json::array({0, 4}));
}
