#include "nilgraph/invariants.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

namespace nilgraph {

namespace {

std::vector<std::vector<std::int32_t>> component_list(const NilpotentGraph& graph) {
  std::vector<std::vector<std::int32_t>> components;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(graph.vertex_count()), 0);
  for (std::int32_t start = 0; start < graph.vertex_count(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<std::int32_t> component;
    std::queue<std::int32_t> queue;
    queue.push(start);
    seen[static_cast<std::size_t>(start)] = 1;
    while (!queue.empty()) {
      std::int32_t u = queue.front();
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

// Local adjacency of one component with vertices relabeled 0..size-1 and
// rows stored as bitsets.
struct LocalGraph {
  std::int64_t size = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> rows;        // size * words
  std::vector<std::int32_t> original;     // local -> graph position
  std::vector<std::vector<std::int32_t>> adj;

  bool test(std::int64_t u, std::int64_t v) const {
    return (rows[static_cast<std::size_t>(u) * words + static_cast<std::size_t>(v) / 64] >>
            (static_cast<std::size_t>(v) % 64)) & 1u;
  }
};

LocalGraph make_local(const NilpotentGraph& graph, const std::vector<std::int32_t>& component) {
  LocalGraph local;
  local.size = static_cast<std::int64_t>(component.size());
  local.words = (component.size() + 63) / 64;
  local.rows.assign(component.size() * local.words, 0);
  local.original = component;
  local.adj.resize(component.size());
  std::vector<std::int32_t> index(static_cast<std::size_t>(graph.vertex_count()), -1);
  for (std::size_t i = 0; i < component.size(); ++i) {
    index[static_cast<std::size_t>(component[i])] = static_cast<std::int32_t>(i);
  }
  for (std::size_t i = 0; i < component.size(); ++i) {
    for (std::int32_t w : graph.neighbors(component[i])) {
      const std::int32_t j = index[static_cast<std::size_t>(w)];
      local.rows[i * local.words + static_cast<std::size_t>(j) / 64] |=
          std::uint64_t{1} << (static_cast<std::size_t>(j) % 64);
      local.adj[i].push_back(j);
    }
    std::sort(local.adj[i].begin(), local.adj[i].end());
  }
  return local;
}

Girth component_girth(const NilpotentGraph& graph, const std::vector<std::int32_t>& component) {
  std::int64_t best = -1;
  std::vector<std::int64_t> dist(static_cast<std::size_t>(graph.vertex_count()));
  std::vector<std::int32_t> parent(static_cast<std::size_t>(graph.vertex_count()));
  for (std::int32_t root : component) {
    for (std::int32_t v : component) {
      dist[static_cast<std::size_t>(v)] = -1;
      parent[static_cast<std::size_t>(v)] = -1;
    }
    dist[static_cast<std::size_t>(root)] = 0;
    std::queue<std::int32_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      const std::int32_t u = queue.front();
      queue.pop();
      if (best > 0 && 2 * dist[static_cast<std::size_t>(u)] >= best) break;
      for (std::int32_t w : graph.neighbors(u)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push(w);
        } else if (w != parent[static_cast<std::size_t>(u)]) {
          // closed walk through root; the minimum over all roots is the girth
          const std::int64_t candidate =
              dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
          if (best < 0 || candidate < best) best = candidate;
        }
      }
    }
    if (best == 3) break;  // no simple graph does better
  }
  return best < 0 ? Girth::infinity() : Girth::of(best);
}

// Tomita-style max clique on a component bitset graph.
class CliqueSearch {
 public:
  explicit CliqueSearch(const LocalGraph& g) : g_(g) {}

  std::int64_t run() {
    std::vector<std::int32_t> candidates(static_cast<std::size_t>(g_.size));
    std::iota(candidates.begin(), candidates.end(), 0);
    // high-degree vertices first helps the coloring bound
    std::stable_sort(candidates.begin(), candidates.end(), [&](std::int32_t a, std::int32_t b) {
      return g_.adj[static_cast<std::size_t>(a)].size() > g_.adj[static_cast<std::size_t>(b)].size();
    });
    expand(candidates, 0);
    return best_;
  }

 private:
  void expand(std::vector<std::int32_t>& candidates, std::int64_t depth) {
    if (candidates.empty()) {
      if (depth > best_) best_ = depth;
      return;
    }
    // greedy coloring: vertices in color class c can bound the clique by c+1
    std::vector<std::int32_t> color(candidates.size());
    std::vector<std::vector<std::int32_t>> classes;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const std::int32_t v = candidates[i];
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = false;
        for (std::int32_t u : classes[c]) {
          if (g_.test(v, u)) {
            clash = true;
            break;
          }
        }
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
      color[i] = static_cast<std::int32_t>(c);
    }
    std::vector<std::int32_t> order(candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::int32_t a, std::int32_t b) { return color[a] < color[b]; });
    for (std::size_t oi = order.size(); oi-- > 0;) {
      const std::int32_t idx = order[oi];
      if (depth + color[idx] + 1 <= best_) return;
      const std::int32_t v = candidates[static_cast<std::size_t>(idx)];
      std::vector<std::int32_t> next;
      for (std::size_t oj = 0; oj < oi; ++oj) {
        const std::int32_t u = candidates[static_cast<std::size_t>(order[oj])];
        if (g_.test(v, u)) next.push_back(u);
      }
      expand(next, depth + 1);
    }
  }

  const LocalGraph& g_;
  std::int64_t best_ = 0;
};

// Minimum dominating set by iterative deepening: every dominating set must
// contain a closed neighbor of the lowest undominated vertex, so branching
// on N[v] is complete.
class DominatingSearch {
 public:
  explicit DominatingSearch(const LocalGraph& g) : g_(g), words_((g.size + 63) / 64) {
    closed_.assign(static_cast<std::size_t>(g_.size) * words_, 0);
    for (std::int64_t v = 0; v < g_.size; ++v) {
      set_bit(&closed_[static_cast<std::size_t>(v) * words_], v);
      for (std::int32_t u : g_.adj[static_cast<std::size_t>(v)]) {
        set_bit(&closed_[static_cast<std::size_t>(v) * words_], u);
      }
    }
    full_.assign(words_, 0);
    for (std::int64_t v = 0; v < g_.size; ++v) set_bit(full_.data(), v);
  }

  std::vector<std::int32_t> run() {
    for (std::int64_t k = 0;; ++k) {
      chosen_.clear();
      std::vector<std::uint64_t> dominated(words_, 0);
      if (g_.size == 0) return {};
      if (search(dominated, k)) {
        std::sort(chosen_.begin(), chosen_.end());
        return chosen_;
      }
    }
  }

 private:
  static void set_bit(std::uint64_t* row, std::int64_t v) {
    row[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (static_cast<std::size_t>(v) % 64);
  }

  bool all_dominated(const std::vector<std::uint64_t>& dominated) const {
    for (std::size_t w = 0; w < words_; ++w) {
      if (dominated[w] != full_[w]) return false;
    }
    return true;
  }

  std::int64_t first_undominated(const std::vector<std::uint64_t>& dominated) const {
    for (std::size_t w = 0; w < words_; ++w) {
      const std::uint64_t missing = full_[w] & ~dominated[w];
      if (missing) return static_cast<std::int64_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(missing)));
    }
    return -1;
  }

  bool search(const std::vector<std::uint64_t>& dominated, std::int64_t remaining) {
    if (all_dominated(dominated)) return true;
    if (remaining == 0) return false;
    const std::int64_t v = first_undominated(dominated);
    std::vector<std::int32_t> branch{static_cast<std::int32_t>(v)};
    branch.insert(branch.end(), g_.adj[static_cast<std::size_t>(v)].begin(),
                  g_.adj[static_cast<std::size_t>(v)].end());
    std::sort(branch.begin(), branch.end());
    for (std::int32_t u : branch) {
      std::vector<std::uint64_t> next(dominated);
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] |= closed_[static_cast<std::size_t>(u) * words_ + w];
      }
      chosen_.push_back(u);
      if (search(next, remaining - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const LocalGraph& g_;
  std::size_t words_;
  std::vector<std::uint64_t> closed_;
  std::vector<std::uint64_t> full_;
  std::vector<std::int32_t> chosen_;
};

// Backtracking proper edge coloring with k colors. Colors are canonicalized
// by first use, and the edge with the fewest feasible colors is branched
// first.
class EdgeColoringSearch {
 public:
  EdgeColoringSearch(const LocalGraph& g, std::vector<std::pair<std::int32_t, std::int32_t>> edges,
                     std::int64_t k)
      : g_(g), edges_(std::move(edges)), k_(k) {
    vertex_mask_.assign(static_cast<std::size_t>(g_.size), 0);
    assignment_.assign(edges_.size(), -1);
  }

  bool run() { return edges_.empty() ? true : place(0); }

 private:
  static std::uint64_t low_bits(std::int64_t n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  }

  std::uint64_t feasible(std::size_t e) const {
    const std::uint64_t blocked = vertex_mask_[static_cast<std::size_t>(edges_[e].first)] |
                                  vertex_mask_[static_cast<std::size_t>(edges_[e].second)];
    const std::uint64_t avail = low_bits(k_) & ~blocked;
    // colors are interchangeable: allow the ones used so far plus one fresh
    return avail & low_bits(std::min<std::int64_t>(k_, used_ + 1));
  }

  bool place(std::size_t colored) {
    if (colored == edges_.size()) return true;
    std::size_t pick = edges_.size();
    int pick_count = 65;
    std::uint64_t pick_avail = 0;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (assignment_[e] >= 0) continue;
      const std::uint64_t avail = feasible(e);
      const int count = std::popcount(avail);
      if (count == 0) return false;
      if (count < pick_count) {
        pick_count = count;
        pick = e;
        pick_avail = avail;
        if (count == 1) break;
      }
    }
    std::uint64_t avail = pick_avail;
    while (avail) {
      const int c = std::countr_zero(avail);
      avail &= avail - 1;
      assignment_[pick] = c;
      const std::uint64_t bit = std::uint64_t{1} << c;
      vertex_mask_[static_cast<std::size_t>(edges_[pick].first)] |= bit;
      vertex_mask_[static_cast<std::size_t>(edges_[pick].second)] |= bit;
      const std::int64_t prev_used = used_;
      used_ = std::max<std::int64_t>(used_, c + 1);
      if (place(colored + 1)) return true;
      used_ = prev_used;
      vertex_mask_[static_cast<std::size_t>(edges_[pick].first)] &= ~bit;
      vertex_mask_[static_cast<std::size_t>(edges_[pick].second)] &= ~bit;
      assignment_[pick] = -1;
    }
    return false;
  }

  const LocalGraph& g_;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges_;
  std::int64_t k_;
  std::vector<std::uint64_t> vertex_mask_;
  std::vector<int> assignment_;
  std::int64_t used_ = 0;
};

// Sequential edge coloring with k colors using Kempe-chain repair: color
// edges in order; when no color is free at both endpoints, swap an
// alternating two-color path. Succeeds on every bipartite graph (this is
// Koenig's argument) and usually elsewhere; returns false when repair runs
// out of options, in which case the backtracking search decides.
class KempeEdgeColoring {
 public:
  KempeEdgeColoring(const LocalGraph& g, std::int64_t k)
      : k_(k), color_at_(static_cast<std::size_t>(g.size * k), -1) {}

  bool run(const std::vector<std::pair<std::int32_t, std::int32_t>>& edges) {
    for (const auto& [u, v] : edges) {
      if (!color_edge(u, v)) return false;
    }
    return true;
  }

 private:
  std::int32_t& mate(std::int32_t vertex, std::int64_t color) {
    return color_at_[static_cast<std::size_t>(vertex) * k_ + color];
  }

  std::int64_t free_color(std::int32_t vertex, std::int64_t from = 0) {
    for (std::int64_t c = from; c < k_; ++c) {
      if (mate(vertex, c) < 0) return c;
    }
    return -1;
  }

  void assign(std::int32_t u, std::int32_t v, std::int64_t c) {
    mate(u, c) = v;
    mate(v, c) = u;
  }

  // swap colors a and b along the alternating path starting at v with a;
  // v carries no b-edge, so the walk is a simple path and terminates
  void flip_chain(std::int32_t v, std::int64_t a, std::int64_t b) {
    std::vector<std::tuple<std::int32_t, std::int32_t, std::int64_t>> chain;
    std::int32_t at = v;
    std::int64_t want = a;
    while (mate(at, want) >= 0) {
      const std::int32_t next = mate(at, want);
      chain.emplace_back(at, next, want);
      at = next;
      want = want == a ? b : a;
    }
    for (const auto& [x, y, c] : chain) {
      mate(x, c) = -1;
      mate(y, c) = -1;
    }
    for (const auto& [x, y, c] : chain) {
      assign(x, y, c == a ? b : a);
    }
  }

  bool chain_reaches(std::int32_t start, std::int32_t target, std::int64_t a, std::int64_t b) {
    std::int32_t at = start;
    std::int64_t want = a;
    while (true) {
      const std::int32_t next = mate(at, want);
      if (next < 0) return false;
      if (next == target) return true;
      at = next;
      want = want == a ? b : a;
    }
  }

  bool color_edge(std::int32_t u, std::int32_t v) {
    for (std::int64_t a = free_color(u); a >= 0; a = free_color(u, a + 1)) {
      if (mate(v, a) < 0) {
        assign(u, v, a);
        return true;
      }
    }
    for (std::int64_t a = free_color(u); a >= 0; a = free_color(u, a + 1)) {
      for (std::int64_t b = free_color(v); b >= 0; b = free_color(v, b + 1)) {
        if (a == b || chain_reaches(v, u, a, b)) continue;
        flip_chain(v, a, b);  // afterwards a is free at v and still free at u
        assign(u, v, a);
        return true;
      }
    }
    return false;
  }

  std::int64_t k_;
  std::vector<std::int32_t> color_at_;  // vertex x color -> mate vertex
};

// Backtracking proper vertex coloring with k colors, same canonicalization.
bool vertex_colorable(const LocalGraph& g, std::int64_t k) {
  std::vector<std::int32_t> color(static_cast<std::size_t>(g.size), -1);
  std::int64_t used = 0;
  std::vector<std::int32_t> order(static_cast<std::size_t>(g.size));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
    return g.adj[static_cast<std::size_t>(a)].size() > g.adj[static_cast<std::size_t>(b)].size();
  });
  std::function<bool(std::size_t, std::int64_t&)> assign = [&](std::size_t i,
                                                               std::int64_t& used_count) -> bool {
    if (i == order.size()) return true;
    const std::int32_t v = order[i];
    std::uint64_t blocked = 0;
    for (std::int32_t u : g.adj[static_cast<std::size_t>(v)]) {
      if (color[static_cast<std::size_t>(u)] >= 0) blocked |= std::uint64_t{1} << color[static_cast<std::size_t>(u)];
    }
    const std::int64_t limit = std::min<std::int64_t>(k, used_count + 1);
    for (std::int64_t c = 0; c < limit; ++c) {
      if (blocked & (std::uint64_t{1} << c)) continue;
      color[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(c);
      const std::int64_t prev = used_count;
      used_count = std::max(used_count, c + 1);
      if (assign(i + 1, used_count)) return true;
      used_count = prev;
      color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  return assign(0, used);
}

std::int64_t component_chromatic_number(const LocalGraph& local) {
  bool has_edge = false;
  for (const auto& nbrs : local.adj) {
    if (!nbrs.empty()) has_edge = true;
  }
  if (!has_edge) return local.size > 0 ? 1 : 0;
  if (local.size > 64) {
    throw CapExceeded("vertex coloring: the bitmask search supports at most 64 colors");
  }
  for (std::int64_t k = 2;; ++k) {
    if (vertex_colorable(local, k)) return k;
  }
}

std::vector<std::pair<std::int32_t, std::int32_t>> local_edges(const LocalGraph& local) {
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  for (std::int64_t u = 0; u < local.size; ++u) {
    for (std::int32_t v : local.adj[static_cast<std::size_t>(u)]) {
      if (u < v) edges.emplace_back(static_cast<std::int32_t>(u), v);
    }
  }
  return edges;
}

}  // namespace

Girth girth(const NilpotentGraph& graph) {
  Girth best = Girth::infinity();
  for (const auto& component : component_list(graph)) {
    const Girth g = component_girth(graph, component);
    if (!g.infinite && (best.infinite || g.length < best.length)) best = g;
    if (!best.infinite && best.length == 3) break;
  }
  return best;
}

std::int64_t max_degree(const NilpotentGraph& graph) {
  std::int64_t delta = 0;
  for (std::int32_t v = 0; v < graph.vertex_count(); ++v) delta = std::max(delta, graph.degree(v));
  return delta;
}

std::int64_t clique_number(const NilpotentGraph& graph, std::int64_t cap) {
  if (graph.vertex_count() == 0) return 0;
  std::int64_t best = 0;
  for (const auto& component : component_list(graph)) {
    if (static_cast<std::int64_t>(component.size()) > cap) {
      throw CapExceeded("clique search: component of " + std::to_string(component.size()) +
                        " vertices exceeds cap " + std::to_string(cap));
    }
    LocalGraph local = make_local(graph, component);
    best = std::max(best, CliqueSearch(local).run());
  }
  return best;
}

DominatingSet dominating_number(const NilpotentGraph& graph, std::int64_t cap) {
  DominatingSet result;
  for (const auto& component : component_list(graph)) {
    if (static_cast<std::int64_t>(component.size()) > cap) {
      throw CapExceeded("dominating search: component of " + std::to_string(component.size()) +
                        " vertices exceeds cap " + std::to_string(cap));
    }
    LocalGraph local = make_local(graph, component);
    for (std::int32_t v : DominatingSearch(local).run()) {
      result.witness.push_back(local.original[static_cast<std::size_t>(v)]);
    }
  }
  std::sort(result.witness.begin(), result.witness.end());
  result.gamma = static_cast<std::int64_t>(result.witness.size());
  return result;
}

EdgeColoringResult chromatic_index(const NilpotentGraph& graph, std::int64_t cap) {
  EdgeColoringResult result;
  std::int64_t chi_prime = 0;
  for (const auto& component : component_list(graph)) {
    LocalGraph local = make_local(graph, component);
    auto edges = local_edges(local);
    if (edges.empty()) continue;
    if (static_cast<std::int64_t>(component.size()) > cap) {
      throw CapExceeded("edge coloring: component of " + std::to_string(component.size()) +
                        " vertices exceeds cap " + std::to_string(cap));
    }
    std::int64_t delta = 0;
    for (const auto& nbrs : local.adj) {
      delta = std::max(delta, static_cast<std::int64_t>(nbrs.size()));
    }
    if (delta + 1 > 64) {
      throw CapExceeded("edge coloring: the bitmask search supports at most 64 colors");
    }
    std::int64_t value;
    if (EdgeColoringSearch(local, edges, delta).run()) {
      value = delta;
    } else if (EdgeColoringSearch(local, edges, delta + 1).run()) {
      value = delta + 1;
    } else {
      throw FalsificationError("no proper edge coloring with Delta+1 colors found");
    }
    chi_prime = std::max(chi_prime, value);
  }
  result.chi_prime = chi_prime;
  result.vizing_class = chi_prime == max_degree(graph) ? 1 : 2;
  return result;
}

SumColoring constructive_edge_coloring(const NilpotentGraph& graph) {
  SumColoring coloring;
  coloring.edges = graph.edge_list();
  coloring.colors.reserve(coloring.edges.size());
  std::set<std::int64_t> palette;
  const auto& ring = graph.ring();
  for (const auto& [u, v] : coloring.edges) {
    const std::int64_t color = ring.add(graph.element_of(u), graph.element_of(v));
    if (!graph.nil().contains(color)) {
      throw FalsificationError("edge color " + ring.element_label(color) + " is not nilpotent");
    }
    coloring.colors.push_back(color);
    palette.insert(color);
  }
  // properness: two edges at a shared vertex x with equal color x+y = x+z
  // would force y = z; verify anyway
  std::vector<std::set<std::int64_t>> seen(static_cast<std::size_t>(graph.vertex_count()));
  for (std::size_t e = 0; e < coloring.edges.size(); ++e) {
    for (std::int32_t endpoint : {coloring.edges[e].first, coloring.edges[e].second}) {
      if (!seen[static_cast<std::size_t>(endpoint)].insert(coloring.colors[e]).second) {
        throw FalsificationError("sum coloring assigns one color twice at vertex " +
                                 ring.element_label(graph.element_of(endpoint)));
      }
    }
  }
  coloring.colors_used = static_cast<std::int64_t>(palette.size());
  if (coloring.colors_used > graph.nil().t) {
    throw FalsificationError("sum coloring used more than |Nil(R)| colors");
  }
  return coloring;
}

std::int64_t vertex_chromatic_number(const NilpotentGraph& graph,
                                     const ComponentDecomposition& decomposition,
                                     std::int64_t cap) {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < decomposition.components.size(); ++i) {
    const auto& shape = decomposition.shapes[i];
    std::int64_t value;
    switch (shape.kind) {
      case ShapeKind::CompleteK:
        value = shape.complete_order;
        break;
      case ShapeKind::Biclique:
        value = 2;
        break;
      default: {
        if (static_cast<std::int64_t>(decomposition.components[i].size()) > cap) {
          throw CapExceeded("vertex coloring: component of " +
                            std::to_string(decomposition.components[i].size()) +
                            " vertices exceeds cap " + std::to_string(cap));
        }
        value = component_chromatic_number(make_local(graph, decomposition.components[i]));
        break;
      }
    }
    chi = std::max(chi, value);
  }
  return chi;
}

std::int64_t chromatic_number_exact(const NilpotentGraph& graph, std::int64_t cap) {
  std::int64_t chi = 0;
  for (const auto& component : component_list(graph)) {
    if (static_cast<std::int64_t>(component.size()) > cap) {
      throw CapExceeded("vertex coloring: component of " + std::to_string(component.size()) +
                        " vertices exceeds cap " + std::to_string(cap));
    }
    chi = std::max(chi, component_chromatic_number(make_local(graph, component)));
  }
  return chi;
}

InvariantReport compute_invariants(const NilpotentGraph& graph,
                                   const ComponentDecomposition& decomposition, const Caps& caps) {
  InvariantReport report;
  report.girth_value = girth(graph);
  report.delta = max_degree(graph);
  auto note = [&report](const std::string& what, const CapExceeded& e) {
    if (!report.skip_note.empty()) report.skip_note += "; ";
    report.skip_note += what + " skipped: " + e.what();
  };
  try {
    report.omega = clique_number(graph, caps.clique_cap);
  } catch (const CapExceeded& e) {
    note("omega", e);
  }
  try {
    report.gamma = dominating_number(graph, caps.dominating_cap).gamma;
  } catch (const CapExceeded& e) {
    note("gamma", e);
  }
  try {
    const EdgeColoringResult ec = chromatic_index(graph, caps.coloring_cap);
    report.chi_prime = ec.chi_prime;
    report.vizing_class = ec.vizing_class;
  } catch (const CapExceeded& e) {
    note("chi_prime", e);
  }
  try {
    report.chi = vertex_chromatic_number(graph, decomposition, caps.coloring_cap);
  } catch (const CapExceeded& e) {
    note("chi", e);
  }
  return report;
}

}  // namespace nilgraph
