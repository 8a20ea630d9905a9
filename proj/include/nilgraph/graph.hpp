#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilgraph/ring.hpp"

namespace nilgraph {

// Simple graph on R \ Nil(R): distinct x, y adjacent iff x + y is nilpotent.
// Vertices are kept sorted by element id; algorithms work on dense vertex
// positions, element ids appear only at the boundary (labels, witnesses).
class NilpotentGraph {
 public:
  NilpotentGraph(FiniteRing ring, NilData nil);

  const FiniteRing& ring() const { return ring_; }
  const NilData& nil() const { return nil_; }

  std::int64_t vertex_count() const { return static_cast<std::int64_t>(vertices_.size()); }
  std::int64_t edge_count() const { return edge_count_; }
  const std::vector<std::int64_t>& vertices() const { return vertices_; }

  std::int64_t element_of(std::int32_t pos) const { return vertices_[static_cast<std::size_t>(pos)]; }
  // -1 when the element is nilpotent (not a vertex)
  std::int32_t position_of(std::int64_t element) const { return positions_[static_cast<std::size_t>(element)]; }

  const std::vector<std::int32_t>& neighbors(std::int32_t pos) const {
    return adjacency_[static_cast<std::size_t>(pos)];
  }
  std::int64_t degree(std::int32_t pos) const {
    return static_cast<std::int64_t>(adjacency_[static_cast<std::size_t>(pos)].size());
  }
  bool adjacent(std::int32_t u, std::int32_t v) const;

  // 2x in Nil(R), precomputed per vertex; drives the degree lemma case split
  bool doubles_to_nil(std::int32_t pos) const { return doubles_nil_[static_cast<std::size_t>(pos)] != 0; }

  // edges as (u, v) position pairs with u < v, ascending
  std::vector<std::pair<std::int32_t, std::int32_t>> edge_list() const;

 private:
  FiniteRing ring_;
  NilData nil_;
  std::vector<std::int64_t> vertices_;
  std::vector<std::int32_t> positions_;
  std::vector<std::vector<std::int32_t>> adjacency_;
  std::vector<std::uint8_t> doubles_nil_;
  std::int64_t edge_count_ = 0;
};

NilpotentGraph build_graph(const FiniteRing& ring);

struct DegreeCheck {
  struct Row {
    std::int64_t element = 0;
    std::int64_t actual = 0;
    std::int64_t predicted = 0;  // |Nil|-1 when 2x nilpotent, else |Nil|
  };
  std::vector<Row> rows;
  bool all_match = true;
};

DegreeCheck degree_check(const NilpotentGraph& graph);

enum class ShapeKind { CompleteK, Biclique, Other };

struct ComponentShape {
  ShapeKind kind = ShapeKind::Other;
  std::int64_t complete_order = 0;            // CompleteK(t)
  std::vector<std::int32_t> part_a, part_b;   // Biclique parts, positions ascending
};

struct ComponentDecomposition {
  std::vector<std::vector<std::int32_t>> components;  // positions, ascending within and across
  std::vector<ComponentShape> shapes;                 // parallel to components
  std::int64_t m_biclique = 0;
};

// Classifies every connected component as CompleteK(t), Biclique(a, b) or
// Other. A two-vertex component counts as CompleteK(2) exactly when its
// vertices x satisfy 2x in Nil(R); that keeps the classifier aligned with
// the decomposition corollaries, which place those vertices in the clique.
ComponentDecomposition components_classify(const NilpotentGraph& graph);

struct BipartitionResult {
  bool bipartite = false;
  std::vector<std::int32_t> part_a, part_b;  // positions, valid when bipartite
  std::vector<std::int32_t> odd_cycle;       // certificate otherwise
};

BipartitionResult is_bipartite_with_parts(const NilpotentGraph& graph);

// Deterministic DOT text: node lines in ascending element order, each edge
// once with the lower element first.
std::string to_dot(const NilpotentGraph& graph);

}  // namespace nilgraph
