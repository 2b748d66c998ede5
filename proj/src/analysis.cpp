#include "bigeo/analysis.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "bigeo/errors.hpp"

namespace bigeo {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint64_t kCountLimit = std::uint64_t{1} << 63;

// BFS from `source`, filling one row of the distance and count tables.
void accumulate_from(const Graph& graph, Vertex source, std::uint32_t* distance,
                     std::uint64_t* count) {
  const std::size_t n = graph.vertex_count();
  std::fill(distance, distance + n, kUnreached);
  std::fill(count, count + n, 0);
  distance[source] = 0;
  count[source] = 1;
  std::vector<Vertex> frontier{source};
  std::vector<Vertex> next;
  while (!frontier.empty()) {
    next.clear();
    for (Vertex u : frontier) {
      for (Vertex v : graph.neighbors(u)) {
        if (distance[v] == kUnreached) {
          distance[v] = distance[u] + 1;
          next.push_back(v);
        }
        if (distance[v] == distance[u] + 1) {
          if (count[v] > kCountLimit - count[u]) {
            throw OverflowError("geodesic count exceeds 2^63");
          }
          count[v] += count[u];
        }
      }
    }
    frontier.swap(next);
  }
}

// Unit-capacity max flow on the vertex-split digraph: vertex v becomes
// in(v) = 2v -> out(v) = 2v + 1 with capacity 1, every undirected edge {u, v}
// becomes out(u) -> in(v) and out(v) -> in(u) with unbounded capacity.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& graph) : head_(2 * graph.vertex_count(), -1) {
    for (Vertex v = 0; v < graph.vertex_count(); ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (const auto& [u, v] : graph.edges()) {
      add_arc(2 * u + 1, 2 * v, kUnbounded);
      add_arc(2 * v + 1, 2 * u, kUnbounded);
    }
  }

  std::size_t max_flow(std::size_t source, std::size_t sink) {
    std::size_t flow = 0;
    std::vector<int> via(head_.size());
    for (;;) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<std::size_t> queue;
      queue.push(source);
      via[source] = -2;
      while (!queue.empty() && via[sink] == -1) {
        const std::size_t x = queue.front();
        queue.pop();
        for (int a = head_[x]; a != -1; a = arcs_[a].next) {
          const Arc& arc = arcs_[a];
          if (arc.capacity > 0 && via[arc.to] == -1) {
            via[arc.to] = a;
            queue.push(arc.to);
          }
        }
      }
      if (via[sink] == -1) return flow;
      for (std::size_t x = sink; x != source;) {
        const int a = via[x];
        arcs_[a].capacity -= 1;
        arcs_[a ^ 1].capacity += 1;
        x = arcs_[a ^ 1].to;
      }
      ++flow;
    }
  }

 private:
  static constexpr int kUnbounded = std::numeric_limits<int>::max() / 2;

  struct Arc {
    std::size_t to;
    int capacity;
    int next;
  };

  void add_arc(std::size_t from, std::size_t to, int capacity) {
    arcs_.push_back({to, capacity, head_[from]});
    head_[from] = static_cast<int>(arcs_.size() - 1);
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size() - 1);
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

GeodesicTable::GeodesicTable(std::size_t n, std::vector<std::uint32_t> distance,
                             std::vector<std::uint64_t> count)
    : n_(n), distance_(std::move(distance)), count_(std::move(count)) {}

GeodesicTable geodesic_counts(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::uint32_t> distance(n * n);
  std::vector<std::uint64_t> count(n * n);
  for (Vertex s = 0; s < n; ++s) {
    accumulate_from(graph, s, distance.data() + s * n, count.data() + s * n);
    for (Vertex t = 0; t < n; ++t) {
      if (distance[s * n + t] == kUnreached) throw DisconnectedGraphError(s, t);
    }
  }
  return GeodesicTable(n, std::move(distance), std::move(count));
}

bool is_connected(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : graph.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

std::uint64_t geodetic_index(const Graph& graph, const GeodesicTable& table) {
  std::uint64_t index = 1;
  for (Vertex u = 0; u < graph.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < graph.vertex_count(); ++v) {
      if (!graph.adjacent(u, v)) index = std::max(index, table.count(u, v));
    }
  }
  return index;
}

std::uint64_t geodetic_index(const Graph& graph) {
  return geodetic_index(graph, geodesic_counts(graph));
}

std::uint32_t diameter(const GeodesicTable& table) {
  std::uint32_t d = 0;
  for (Vertex u = 0; u < table.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < table.vertex_count(); ++v) d = std::max(d, table.distance(u, v));
  }
  return d;
}

std::uint32_t diameter(const Graph& graph) { return diameter(geodesic_counts(graph)); }

std::size_t local_vertex_connectivity(const Graph& graph, Vertex s, Vertex t) {
  if (s == t || graph.adjacent(s, t)) {
    throw PreconditionError("local connectivity needs two distinct nonadjacent vertices");
  }
  SplitNetwork network(graph);
  return network.max_flow(2 * s + 1, 2 * t);
}

std::size_t vertex_connectivity(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n < 2) throw PreconditionError("vertex connectivity needs at least two vertices");
  if (graph.edge_count() == n * (n - 1) / 2) return n - 1;

  Vertex pivot = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (graph.degree(v) < graph.degree(pivot)) pivot = v;
  }

  // Either some minimum separator misses the pivot, and then it separates
  // the pivot from a non-neighbour; or every minimum separator contains the
  // pivot, and then it separates two nonadjacent neighbours of the pivot.
  std::size_t best = graph.degree(pivot);
  for (Vertex u = 0; u < n; ++u) {
    if (u != pivot && !graph.adjacent(pivot, u)) {
      best = std::min(best, local_vertex_connectivity(graph, pivot, u));
    }
  }
  const auto around = graph.neighbors(pivot);
  for (std::size_t i = 0; i < around.size(); ++i) {
    for (std::size_t j = i + 1; j < around.size(); ++j) {
      if (!graph.adjacent(around[i], around[j])) {
        best = std::min(best, local_vertex_connectivity(graph, around[i], around[j]));
      }
    }
  }
  return best;
}

std::map<std::size_t, std::size_t> degree_multiset(const Graph& graph) {
  std::map<std::size_t, std::size_t> degrees;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) ++degrees[graph.degree(v)];
  return degrees;
}

GraphReport classify(const Graph& graph) {
  GraphReport report;
  report.n_vertices = graph.vertex_count();
  report.n_edges = graph.edge_count();
  report.degree_multiset = degree_multiset(graph);

  const GeodesicTable table = geodesic_counts(graph);
  report.is_connected = true;
  report.diameter = diameter(table);
  report.geodetic_index = geodetic_index(graph, table);
  report.vertex_connectivity = report.n_vertices >= 2 ? vertex_connectivity(graph) : 0;
  report.is_block = report.vertex_connectivity >= 2;

  const bool regular = report.degree_multiset.size() == 1;
  if (regular && report.is_block && report.diameter >= 2 && report.geodetic_index <= 2) {
    report.class_membership = ClassMembership{
        report.vertex_connectivity, report.degree_multiset.begin()->first, report.diameter};
  }
  return report;
}

nlohmann::json GraphReport::to_json() const {
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& [degree, count] : degree_multiset) {
    degrees.push_back({{"degree", degree}, {"count", count}});
  }
  nlohmann::json out{
      {"n_vertices", n_vertices},
      {"n_edges", n_edges},
      {"degree_multiset", std::move(degrees)},
      {"is_connected", is_connected},
      {"diameter", diameter},
      {"vertex_connectivity", vertex_connectivity},
      {"geodetic_index", geodetic_index},
      {"is_block", is_block},
      {"class_membership", nullptr},
  };
  if (class_membership) {
    out["class_membership"] = {class_membership->connectivity, class_membership->degree,
                               class_membership->diameter};
  }
  return out;
}

}  // namespace bigeo
