#include <doctest.h>

#include <algorithm>
#include <random>

#include "nilgraph/spectra.hpp"
#include "nilgraph/theorems.hpp"
#include "oracles.hpp"

using namespace nilgraph;

namespace {

NilpotentGraph graph_of(const std::string& spec) {
  return build_graph(FiniteRing(parse_ring_spec(spec)));
}

SpectrumPrediction make_prediction(MatrixTarget target,
                                   std::vector<std::pair<std::int64_t, std::int64_t>> pairs) {
  SpectrumPrediction p;
  p.target = target;
  p.pairs = std::move(pairs);
  return p;
}

}  // namespace

TEST_CASE("matrix construction") {
  const NilpotentGraph z5 = graph_of("Z5");
  const ExactMatrix a = matrix_build(z5, MatrixTarget::Adjacency);
  REQUIRE(a.dim() == 4);
  // vertices 1,2,3,4; edges {1,4} and {2,3}
  CHECK(a.at(0, 3) == 1);
  CHECK(a.at(3, 0) == 1);
  CHECK(a.at(1, 2) == 1);
  CHECK(a.at(0, 1) == 0);
  CHECK(a.at(0, 0) == 0);

  const ExactMatrix l = matrix_build(z5, MatrixTarget::Laplacian);
  for (std::int64_t i = 0; i < l.dim(); ++i) {
    mpz_class row_sum = 0;
    for (std::int64_t j = 0; j < l.dim(); ++j) row_sum += l.at(i, j);
    CHECK(row_sum == 0);
  }

  const NilpotentGraph z12 = graph_of("Z12");
  const ExactMatrix a12 = matrix_build(z12, MatrixTarget::Adjacency);
  const ExactMatrix l12 = matrix_build(z12, MatrixTarget::Laplacian);
  const ExactMatrix q12 = matrix_build(z12, MatrixTarget::SignlessLaplacian);
  for (std::int64_t i = 0; i < q12.dim(); ++i) {
    for (std::int64_t j = 0; j < q12.dim(); ++j) {
      CHECK(q12.at(i, j) == l12.at(i, j) + 2 * a12.at(i, j));
    }
  }
  CHECK(a12.is_symmetric());
  CHECK(l12.is_symmetric());
}

TEST_CASE("nullity basics") {
  ExactMatrix zero(3);
  CHECK(nullity(zero) == 3);

  ExactMatrix identity(3);
  for (int i = 0; i < 3; ++i) identity.at(i, i) = 1;
  CHECK(nullity(identity) == 0);

  ExactMatrix rank_one(2);
  rank_one.at(0, 0) = -1;
  rank_one.at(0, 1) = 1;
  rank_one.at(1, 0) = 1;
  rank_one.at(1, 1) = -1;
  CHECK(nullity(rank_one) == 1);
}

TEST_CASE("nullity agrees with rational elimination on random matrices") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> dim_pick(1, 8);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = dim_pick(rng);
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    }
    const std::int64_t rank = oracles::rational_rank(m);
    CHECK(nullity(std::move(m)) == n - rank);
  }
}

TEST_CASE("spectrum verification") {
  const NilpotentGraph z12 = graph_of("Z12");
  const SpectrumCheck ok = verify_spectrum(
      matrix_build(z12, MatrixTarget::Adjacency),
      make_prediction(MatrixTarget::Adjacency, {{2, 2}, {-2, 2}, {0, 4}, {-1, 1}, {1, 1}}));
  CHECK(ok.ok);

  const NilpotentGraph z9 = graph_of("Z9");
  CHECK(verify_spectrum(matrix_build(z9, MatrixTarget::Laplacian),
                        make_prediction(MatrixTarget::Laplacian, {{6, 1}, {0, 1}, {3, 4}}))
            .ok);

  // a deliberately wrong prediction fails at lambda = 2
  const SpectrumCheck bad = verify_spectrum(
      matrix_build(z9, MatrixTarget::Adjacency),
      make_prediction(MatrixTarget::Adjacency, {{2, 1}, {-2, 1}, {0, 4}}));
  CHECK_FALSE(bad.ok);
  REQUIRE_FALSE(bad.rows.empty());
  CHECK(bad.rows[0].lambda == 2);
  CHECK_FALSE(bad.rows[0].ok);

  // permutation of the pairs does not change the outcome
  const SpectrumCheck shuffled = verify_spectrum(
      matrix_build(z12, MatrixTarget::Adjacency),
      make_prediction(MatrixTarget::Adjacency, {{0, 4}, {1, 1}, {-2, 2}, {2, 2}, {-1, 1}}));
  CHECK(shuffled.ok);

  // multiplicities must sum to the dimension
  const SpectrumCheck short_sum = verify_spectrum(
      matrix_build(z9, MatrixTarget::Adjacency),
      make_prediction(MatrixTarget::Adjacency, {{3, 1}, {-3, 1}}));
  CHECK_FALSE(short_sum.ok);
  CHECK_FALSE(short_sum.multiplicity_sum_ok);

  ExactMatrix asymmetric(2);
  asymmetric.at(0, 1) = 1;
  CHECK_THROWS_AS(verify_spectrum(asymmetric, make_prediction(MatrixTarget::Adjacency, {{0, 2}})),
                  DomainError);
}

TEST_CASE("component spectrum predictions") {
  const NilpotentGraph z18 = graph_of("Z18");
  const SpectrumPrediction a18 =
      component_spectrum_prediction(components_classify(z18), MatrixTarget::Adjacency);
  CHECK(a18.pairs == std::vector<std::pair<std::int64_t, std::int64_t>>{
                         {3, 2}, {2, 1}, {0, 8}, {-1, 2}, {-3, 2}});

  const NilpotentGraph z15 = graph_of("Z15");
  const SpectrumPrediction a15 =
      component_spectrum_prediction(components_classify(z15), MatrixTarget::Adjacency);
  CHECK(a15.pairs ==
        std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 7}, {-1, 7}});

  // a single K2: Z3 has one balanced biclique K_{1,1}
  const SpectrumPrediction k2 =
      component_spectrum_prediction(components_classify(graph_of("Z3")), MatrixTarget::Adjacency);
  CHECK(k2.pairs == std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {-1, 1}});
}

TEST_CASE("component route certifies A, L and Q across the sweep") {
  auto certify = [](const NilpotentGraph& g) {
    const ComponentDecomposition d = components_classify(g);
    for (MatrixTarget target : {MatrixTarget::Adjacency, MatrixTarget::Laplacian,
                                MatrixTarget::SignlessLaplacian}) {
      const SpectrumPrediction p = component_spectrum_prediction(d, target);
      CHECK(verify_spectrum(matrix_build(g, target), p).ok);
    }
  };
  for (std::int64_t n = 2; n <= 120; ++n) {
    certify(build_graph(FiniteRing(RingSpec{{n}, canonical_spec_text({n})})));
  }
  for (const char* spec : {"Z2xZ2", "Z2xZ4", "Z2xZ9", "Z3xZ9", "Z4xZ9", "Z5xZ5", "Z3xZ25"}) {
    certify(graph_of(spec));
  }
}

TEST_CASE("closed-form Z_n spectra equal the component route") {
  for (std::int64_t n = 2; n <= 120; ++n) {
    RingContext ctx(FiniteRing(RingSpec{{n}, canonical_spec_text({n})}), Caps{});
    const SpectraPrediction closed = predict_spectra(ctx);
    REQUIRE(closed.applicable);
    const ComponentDecomposition d = components_classify(ctx.graph());
    CHECK(closed.a.pairs ==
          component_spectrum_prediction(d, MatrixTarget::Adjacency).pairs);
    CHECK(closed.l.pairs ==
          component_spectrum_prediction(d, MatrixTarget::Laplacian).pairs);
    CHECK(closed.q.pairs ==
          component_spectrum_prediction(d, MatrixTarget::SignlessLaplacian).pairs);
  }
}

TEST_CASE("Laplacian trace identity") {
  for (std::int64_t n = 2; n <= 150; ++n) {
    const NilpotentGraph g = build_graph(FiniteRing(RingSpec{{n}, canonical_spec_text({n})}));
    const SpectrumPrediction l =
        component_spectrum_prediction(components_classify(g), MatrixTarget::Laplacian);
    std::int64_t weighted = 0;
    for (const auto& [lambda, mult] : l.pairs) weighted += lambda * mult;
    CHECK(weighted == 2 * g.edge_count());
  }
}
