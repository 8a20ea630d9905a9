#include "nilgraph/graph.hpp"

#include <algorithm>
#include <queue>

namespace nilgraph {

NilpotentGraph::NilpotentGraph(FiniteRing ring, NilData nil)
    : ring_(std::move(ring)), nil_(std::move(nil)) {
  const std::int64_t order = ring_.order();
  positions_.assign(static_cast<std::size_t>(order), -1);
  for (std::int64_t x = 0; x < order; ++x) {
    if (!nil_.contains(x)) {
      positions_[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(vertices_.size());
      vertices_.push_back(x);
    }
  }
  const std::int64_t v = vertex_count();
  // adjacency needs ~|V| * |Nil| ints; refuse sizes that cannot be analyzed
  if (v > 0 && nil_.t > (std::int64_t{200'000'000} / v)) {
    throw CapExceeded("graph of " + ring_.spec().canonical_text + " is too large to materialize");
  }
  adjacency_.assign(static_cast<std::size_t>(v), {});
  doubles_nil_.assign(static_cast<std::size_t>(v), 0);
  for (std::int32_t pos = 0; pos < v; ++pos) {
    const std::int64_t x = vertices_[static_cast<std::size_t>(pos)];
    auto& nbrs = adjacency_[static_cast<std::size_t>(pos)];
    for (std::int64_t n : nil_.nilpotent_ids) {
      const std::int64_t y = ring_.sub(n, x);
      if (y == x) continue;  // no loops
      // y = n - x cannot be nilpotent: x = n - y would be too
      nbrs.push_back(positions_[static_cast<std::size_t>(y)]);
    }
    std::sort(nbrs.begin(), nbrs.end());
    edge_count_ += static_cast<std::int64_t>(nbrs.size());
    doubles_nil_[static_cast<std::size_t>(pos)] = nil_.contains(ring_.add(x, x)) ? 1 : 0;
  }
  edge_count_ /= 2;
}

bool NilpotentGraph::adjacent(std::int32_t u, std::int32_t v) const {
  const auto& nbrs = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<std::int32_t, std::int32_t>> NilpotentGraph::edge_list() const {
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  edges.reserve(static_cast<std::size_t>(edge_count_));
  for (std::int32_t u = 0; u < vertex_count(); ++u) {
    for (std::int32_t v : neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

NilpotentGraph build_graph(const FiniteRing& ring) { return NilpotentGraph(ring, nil_set(ring)); }

DegreeCheck degree_check(const NilpotentGraph& graph) {
  DegreeCheck check;
  const std::int64_t t = graph.nil().t;
  check.rows.reserve(static_cast<std::size_t>(graph.vertex_count()));
  for (std::int32_t pos = 0; pos < graph.vertex_count(); ++pos) {
    DegreeCheck::Row row;
    row.element = graph.element_of(pos);
    row.actual = graph.degree(pos);
    row.predicted = graph.doubles_to_nil(pos) ? t - 1 : t;
    if (row.actual != row.predicted) check.all_match = false;
    check.rows.push_back(row);
  }
  return check;
}

namespace {

std::vector<std::vector<std::int32_t>> connected_components(const NilpotentGraph& graph) {
  std::vector<std::vector<std::int32_t>> components;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(graph.vertex_count()), 0);
  for (std::int32_t start = 0; start < graph.vertex_count(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<std::int32_t> component;
    std::queue<std::int32_t> queue;
    queue.push(start);
    seen[static_cast<std::size_t>(start)] = 1;
    while (!queue.empty()) {
      const std::int32_t u = queue.front();
      queue.pop();
      component.push_back(u);
      for (std::int32_t w : graph.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

// Two-colors one component by BFS layering. Returns false on an odd cycle.
bool two_color(const NilpotentGraph& graph, const std::vector<std::int32_t>& component,
               std::vector<std::int8_t>& color, std::vector<std::int32_t>& parent,
               std::vector<std::int32_t>& conflict_edge) {
  std::queue<std::int32_t> queue;
  const std::int32_t root = component.front();
  color[static_cast<std::size_t>(root)] = 0;
  queue.push(root);
  while (!queue.empty()) {
    const std::int32_t u = queue.front();
    queue.pop();
    for (std::int32_t w : graph.neighbors(u)) {
      if (color[static_cast<std::size_t>(w)] < 0) {
        color[static_cast<std::size_t>(w)] = static_cast<std::int8_t>(1 - color[static_cast<std::size_t>(u)]);
        parent[static_cast<std::size_t>(w)] = u;
        queue.push(w);
      } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
        conflict_edge = {u, w};
        return false;
      }
    }
  }
  return true;
}

std::vector<std::int32_t> odd_cycle_from_conflict(const std::vector<std::int32_t>& parent,
                                                  std::int32_t u, std::int32_t w) {
  std::vector<std::int32_t> up_u{u}, up_w{w};
  for (std::int32_t x = u; parent[static_cast<std::size_t>(x)] >= 0;) {
    x = parent[static_cast<std::size_t>(x)];
    up_u.push_back(x);
  }
  for (std::int32_t x = w; parent[static_cast<std::size_t>(x)] >= 0;) {
    x = parent[static_cast<std::size_t>(x)];
    up_w.push_back(x);
  }
  // strip the common tail above the lowest common ancestor
  while (up_u.size() > 1 && up_w.size() > 1 &&
         up_u[up_u.size() - 2] == up_w[up_w.size() - 2]) {
    up_u.pop_back();
    up_w.pop_back();
  }
  std::vector<std::int32_t> cycle(up_u.begin(), up_u.end());
  for (std::size_t i = up_w.size() - 1; i-- > 0;) cycle.push_back(up_w[i]);
  return cycle;
}

}  // namespace

ComponentDecomposition components_classify(const NilpotentGraph& graph) {
  ComponentDecomposition decomposition;
  decomposition.components = connected_components(graph);
  for (const auto& component : decomposition.components) {
    ComponentShape shape;
    const std::size_t size = component.size();
    bool all_double_nil = true;
    bool complete = true;
    for (std::int32_t v : component) {
      if (!graph.doubles_to_nil(v)) all_double_nil = false;
      if (graph.degree(v) != static_cast<std::int64_t>(size) - 1) complete = false;
    }
    if (size == 1) {
      shape.kind = ShapeKind::CompleteK;
      shape.complete_order = 1;
    } else if (complete && all_double_nil) {
      shape.kind = ShapeKind::CompleteK;
      shape.complete_order = static_cast<std::int64_t>(size);
    } else {
      std::vector<std::int8_t> color(static_cast<std::size_t>(graph.vertex_count()), -1);
      std::vector<std::int32_t> parent(static_cast<std::size_t>(graph.vertex_count()), -1);
      std::vector<std::int32_t> conflict;
      if (two_color(graph, component, color, parent, conflict)) {
        std::vector<std::int32_t> a, b;
        for (std::int32_t v : component) {
          (color[static_cast<std::size_t>(v)] == 0 ? a : b).push_back(v);
        }
        bool complete_bipartite = true;
        for (std::int32_t v : a) {
          if (graph.degree(v) != static_cast<std::int64_t>(b.size())) complete_bipartite = false;
        }
        for (std::int32_t v : b) {
          if (graph.degree(v) != static_cast<std::int64_t>(a.size())) complete_bipartite = false;
        }
        if (complete_bipartite) {
          shape.kind = ShapeKind::Biclique;
          shape.part_a = std::move(a);
          shape.part_b = std::move(b);
        }
      }
    }
    if (shape.kind == ShapeKind::Biclique) ++decomposition.m_biclique;
    decomposition.shapes.push_back(std::move(shape));
  }
  return decomposition;
}

BipartitionResult is_bipartite_with_parts(const NilpotentGraph& graph) {
  BipartitionResult result;
  std::vector<std::int8_t> color(static_cast<std::size_t>(graph.vertex_count()), -1);
  std::vector<std::int32_t> parent(static_cast<std::size_t>(graph.vertex_count()), -1);
  for (const auto& component : connected_components(graph)) {
    std::vector<std::int32_t> conflict;
    if (!two_color(graph, component, color, parent, conflict)) {
      result.bipartite = false;
      result.odd_cycle = odd_cycle_from_conflict(parent, conflict[0], conflict[1]);
      return result;
    }
  }
  result.bipartite = true;
  for (std::int32_t v = 0; v < graph.vertex_count(); ++v) {
    (color[static_cast<std::size_t>(v)] == 0 ? result.part_a : result.part_b).push_back(v);
  }
  return result;
}

std::string to_dot(const NilpotentGraph& graph) {
  std::string out = "graph \"G(" + graph.ring().spec().canonical_text + ")\" {\n";
  for (std::int32_t v = 0; v < graph.vertex_count(); ++v) {
    out += "  \"" + graph.ring().element_label(graph.element_of(v)) + "\";\n";
  }
  for (const auto& [u, v] : graph.edge_list()) {
    out += "  \"" + graph.ring().element_label(graph.element_of(u)) + "\" -- \"" +
           graph.ring().element_label(graph.element_of(v)) + "\";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace nilgraph
