#include <doctest.h>

#include <algorithm>
#include <set>

#include "nilgraph/graph.hpp"
#include "oracles.hpp"

using namespace nilgraph;

namespace {

NilpotentGraph graph_of(const std::string& spec) {
  return build_graph(FiniteRing(parse_ring_spec(spec)));
}

std::vector<std::int64_t> component_elements(const NilpotentGraph& g,
                                              const std::vector<std::int32_t>& positions) {
  std::vector<std::int64_t> out;
  for (std::int32_t pos : positions) out.push_back(g.element_of(pos));
  return out;
}

std::set<std::pair<std::int64_t, std::int64_t>> element_edges(const NilpotentGraph& g) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& [u, v] : g.edge_list()) {
    out.insert({g.element_of(u), g.element_of(v)});
  }
  return out;
}

}  // namespace

TEST_CASE("figure graphs") {
  const NilpotentGraph z12 = graph_of("Z12");
  CHECK(z12.vertex_count() == 10);
  CHECK(z12.edge_count() == 9);
  const std::set<std::pair<std::int64_t, std::int64_t>> expected{
      {1, 5}, {1, 11}, {5, 7}, {7, 11}, {2, 4}, {2, 10}, {4, 8}, {8, 10}, {3, 9}};
  CHECK(element_edges(z12) == expected);

  const NilpotentGraph z18 = graph_of("Z18");
  CHECK(z18.vertex_count() == 15);
  CHECK(z18.edge_count() == 21);

  const NilpotentGraph z5 = graph_of("Z5");
  CHECK(z5.vertex_count() == 4);
  CHECK(element_edges(z5) ==
        std::set<std::pair<std::int64_t, std::int64_t>>{{1, 4}, {2, 3}});
}

TEST_CASE("degree lemma per vertex") {
  const NilpotentGraph z12 = graph_of("Z12");
  const DegreeCheck check = degree_check(z12);
  CHECK(check.all_match);
  auto row = [&](std::int64_t element) {
    for (const auto& r : check.rows) {
      if (r.element == element) return r;
    }
    FAIL("vertex not found");
    return DegreeCheck::Row{};
  };
  CHECK(row(3).actual == 1);   // 2*3 = 6 nilpotent, so |Nil| - 1
  CHECK(row(3).predicted == 1);
  CHECK(row(1).actual == 2);   // neighbors 5 and 11
  CHECK(row(1).predicted == 2);

  const NilpotentGraph z8 = graph_of("Z8");
  for (const auto& r : degree_check(z8).rows) {
    CHECK(r.actual == 3);  // K4
  }

  for (std::int64_t n = 2; n <= 100; ++n) {
    CHECK(degree_check(build_graph(FiniteRing(RingSpec{{n}, canonical_spec_text({n})}))).all_match);
  }
}

TEST_CASE("edge-count identity from the degree lemma") {
  auto check_identity = [](const NilpotentGraph& g) {
    std::int64_t doubles = 0;
    for (std::int32_t v = 0; v < g.vertex_count(); ++v) {
      if (g.doubles_to_nil(v)) ++doubles;
    }
    CHECK(2 * g.edge_count() == g.nil().t * g.vertex_count() - doubles);
  };
  for (std::int64_t n = 2; n <= 100; ++n) {
    check_identity(build_graph(FiniteRing(RingSpec{{n}, canonical_spec_text({n})})));
  }
  for (const char* spec : {"Z2xZ2", "Z2xZ9", "Z4xZ9", "Z3xZ9", "Z5xZ5", "Z2xZ4"}) {
    check_identity(graph_of(spec));
  }
}

TEST_CASE("component classification") {
  const NilpotentGraph z18 = graph_of("Z18");
  const ComponentDecomposition d18 = components_classify(z18);
  REQUIRE(d18.components.size() == 3);
  CHECK(d18.shapes[0].kind == ShapeKind::Biclique);
  CHECK(d18.shapes[0].part_a.size() == 3);
  CHECK(d18.shapes[0].part_b.size() == 3);
  CHECK(d18.shapes[1].kind == ShapeKind::Biclique);
  CHECK(d18.shapes[2].kind == ShapeKind::CompleteK);
  CHECK(d18.shapes[2].complete_order == 3);
  CHECK(component_elements(z18, d18.components[2]) == std::vector<std::int64_t>{3, 9, 15});
  CHECK(d18.m_biclique == 2);

  const NilpotentGraph z12 = graph_of("Z12");
  const ComponentDecomposition d12 = components_classify(z12);
  REQUIRE(d12.components.size() == 3);
  // {3, 9} is complete, not a biclique: both vertices double into Nil
  CHECK(component_elements(z12, d12.components[2]) == std::vector<std::int64_t>{3, 9});
  CHECK(d12.shapes[2].kind == ShapeKind::CompleteK);
  CHECK(d12.shapes[2].complete_order == 2);
  CHECK(d12.shapes[0].kind == ShapeKind::Biclique);
  CHECK(d12.shapes[0].part_a.size() == 2);

  const ComponentDecomposition d2 = components_classify(graph_of("Z2"));
  REQUIRE(d2.shapes.size() == 1);
  CHECK(d2.shapes[0].kind == ShapeKind::CompleteK);
  CHECK(d2.shapes[0].complete_order == 1);
}

TEST_CASE("no component ever classifies as Other") {
  for (std::int64_t n = 2; n <= 150; ++n) {
    const ComponentDecomposition d =
        components_classify(build_graph(FiniteRing(RingSpec{{n}, canonical_spec_text({n})})));
    for (const auto& shape : d.shapes) {
      CHECK(shape.kind != ShapeKind::Other);
      if (shape.kind == ShapeKind::Biclique) {
        CHECK(shape.part_a.size() == shape.part_b.size());
      }
    }
  }
  for (std::int64_t a = 2; a <= 10; ++a) {
    for (std::int64_t b = a; a * b <= 100; ++b) {
      const ComponentDecomposition d = components_classify(
          build_graph(FiniteRing(RingSpec{{a, b}, canonical_spec_text({a, b})})));
      for (const auto& shape : d.shapes) {
        CHECK(shape.kind != ShapeKind::Other);
      }
    }
  }
}

TEST_CASE("bipartiteness with parts and odd-cycle certificates") {
  const BipartitionResult z9 = is_bipartite_with_parts(graph_of("Z9"));
  CHECK(z9.bipartite);
  CHECK(z9.part_a.size() == 3);
  CHECK(z9.part_b.size() == 3);

  const NilpotentGraph g8 = graph_of("Z8");
  const BipartitionResult z8 = is_bipartite_with_parts(g8);
  CHECK_FALSE(z8.bipartite);
  REQUIRE(z8.odd_cycle.size() == 3);
  // the certificate must be an actual cycle
  for (std::size_t i = 0; i < z8.odd_cycle.size(); ++i) {
    CHECK(g8.adjacent(z8.odd_cycle[i], z8.odd_cycle[(i + 1) % z8.odd_cycle.size()]));
  }

  CHECK(is_bipartite_with_parts(graph_of("Z12")).bipartite);
}

TEST_CASE("2-power rings give complete graphs") {
  for (std::int64_t n = 2; n <= 512; n *= 2) {
    const NilpotentGraph g = build_graph(FiniteRing(RingSpec{{n}, canonical_spec_text({n})}));
    CHECK(g.vertex_count() == n / 2);
    CHECK(2 * g.edge_count() == (n / 2) * (n / 2 - 1));
  }
}

TEST_CASE("DOT export") {
  const std::string dot5 = to_dot(graph_of("Z5"));
  CHECK(std::count(dot5.begin(), dot5.end(), ';') == 6);  // 4 nodes + 2 edges
  CHECK(dot5.find("\"1\" -- \"4\";") != std::string::npos);

  const std::string dot2 = to_dot(graph_of("Z2"));
  CHECK(std::count(dot2.begin(), dot2.end(), ';') == 1);
  CHECK(dot2.find("--") == std::string::npos);

  // byte-identical across independent builds
  CHECK(to_dot(graph_of("Z12")) == to_dot(graph_of("Z12")));
  const std::string dot12 = to_dot(graph_of("Z12"));
  CHECK(std::count(dot12.begin(), dot12.end(), ';') == 19);

  const std::string dot_product = to_dot(graph_of("Z2xZ3"));
  CHECK(dot_product.find("\"(1,0)\"") != std::string::npos);
}
