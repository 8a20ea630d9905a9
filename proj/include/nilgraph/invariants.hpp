#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilgraph/graph.hpp"

namespace nilgraph {

// Search caps are configuration, not constants: exceeding one raises
// CapExceeded so sweeps can skip-and-log instead of aborting.
struct Caps {
  std::int64_t max_order = kDefaultMaxOrder;
  std::int64_t clique_cap = 512;      // component vertices, exact max-clique
  std::int64_t dominating_cap = 512;  // component vertices, exact dominating set
  std::int64_t coloring_cap = 16;     // component vertices, exact edge/vertex coloring
  std::int64_t spectra_cap = 2048;    // matrix dimension for exact nullity runs
};

struct Girth {
  bool infinite = true;
  std::int64_t length = 0;  // meaningful only when !infinite

  static Girth infinity() { return Girth{}; }
  static Girth of(std::int64_t len) { return Girth{false, len}; }
  bool operator==(const Girth&) const = default;
  std::string str() const { return infinite ? "inf" : std::to_string(length); }
};

// Shortest cycle length by per-vertex breadth-first search.
Girth girth(const NilpotentGraph& graph);

std::int64_t max_degree(const NilpotentGraph& graph);

// Exact maximum clique, branch and bound with a greedy coloring bound,
// run per component.
std::int64_t clique_number(const NilpotentGraph& graph, std::int64_t cap);

struct DominatingSet {
  std::int64_t gamma = 0;
  std::vector<std::int32_t> witness;  // positions, ascending
};

// Exact minimum dominating set. Gamma is additive over components, so the
// search runs per component with increasing target size.
DominatingSet dominating_number(const NilpotentGraph& graph, std::int64_t cap);

struct EdgeColoringResult {
  std::int64_t chi_prime = 0;
  int vizing_class = 1;  // 1 iff chi_prime == max degree of the whole graph
};

// Exact chromatic index: per component, backtracking search at Delta colors
// and, only if that fails, at Delta + 1.
EdgeColoringResult chromatic_index(const NilpotentGraph& graph, std::int64_t cap);

struct SumColoring {
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;  // (u, v) positions, u < v
  std::vector<std::int64_t> colors;                          // element id of u + v, per edge
  std::int64_t colors_used = 0;
};

// The x+y edge coloring: every color is a nilpotent element, properness is
// re-verified edge by edge. Uses at most |Nil(R)| colors, which may exceed
// the exact chromatic index.
SumColoring constructive_edge_coloring(const NilpotentGraph& graph);

// Exact vertex chromatic number via classified shapes (CompleteK(t) -> t,
// Biclique -> 2, isolated vertex -> 1); unclassified components fall back
// to the backtracking search.
std::int64_t vertex_chromatic_number(const NilpotentGraph& graph,
                                     const ComponentDecomposition& decomposition,
                                     std::int64_t cap);

// Pure search route, no shape shortcuts; validates the fast route in tests.
std::int64_t chromatic_number_exact(const NilpotentGraph& graph, std::int64_t cap);

struct InvariantReport {
  Girth girth_value;
  std::int64_t delta = 0;
  std::optional<std::int64_t> omega;      // empty = skipped by cap
  std::optional<std::int64_t> gamma;
  std::optional<std::int64_t> chi_prime;
  std::optional<int> vizing_class;
  std::optional<std::int64_t> chi;
  std::string skip_note;
};

InvariantReport compute_invariants(const NilpotentGraph& graph,
                                   const ComponentDecomposition& decomposition, const Caps& caps);

}  // namespace nilgraph
