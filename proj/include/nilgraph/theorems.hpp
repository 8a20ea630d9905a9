#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilgraph/invariants.hpp"
#include "nilgraph/spectra.hpp"

namespace nilgraph {

enum class TheoremId {
  DegreeLemma,
  CompleteZ2k,
  ChromaticNumber2,
  BipartiteStructure,
  DecompositionOdd,
  DecompositionEven,
  GirthZn,
  GirthOddRing,
  GirthEvenRing,
  CliqueZn,
  CliqueRing,
  SpectraZn,
  SpectraOddRing,
  BicliqueCount,
  DominatingZn,
  DominatingRing,
  ChromaticIndexClass1,
  ChromaticIndexEqualsNil,
};

inline constexpr std::array<TheoremId, 18> kAllTheorems = {
    TheoremId::DegreeLemma,        TheoremId::CompleteZ2k,
    TheoremId::ChromaticNumber2,   TheoremId::BipartiteStructure,
    TheoremId::DecompositionOdd,   TheoremId::DecompositionEven,
    TheoremId::GirthZn,            TheoremId::GirthOddRing,
    TheoremId::GirthEvenRing,      TheoremId::CliqueZn,
    TheoremId::CliqueRing,         TheoremId::SpectraZn,
    TheoremId::SpectraOddRing,     TheoremId::BicliqueCount,
    TheoremId::DominatingZn,       TheoremId::DominatingRing,
    TheoremId::ChromaticIndexClass1, TheoremId::ChromaticIndexEqualsNil,
};

std::string_view theorem_name(TheoremId id);

enum class VerdictStatus { Match, Mismatch, NotApplicable, Skipped };

std::string_view status_name(VerdictStatus status);

struct TheoremVerdict {
  TheoremId id = TheoremId::DegreeLemma;
  std::string ring;
  VerdictStatus status = VerdictStatus::NotApplicable;
  std::string predicted = "n/a";
  std::string computed = "n/a";
  std::string note;  // hypothesis gate, three-way values, skip reason
};

// A value that an exact search may have declined to compute (cap exceeded).
struct Capped {
  std::optional<std::int64_t> value;
  std::string skip_reason;
};

// One ring instance with everything the predictions and oracles need,
// memoized lazily so cheap queries stay cheap.
class RingContext {
 public:
  RingContext(FiniteRing ring, Caps caps);
  RingContext(const std::string& spec_text, Caps caps);

  const Caps& caps() const { return caps_; }
  const FiniteRing& ring() const { return ring_; }
  const NilpotentGraph& graph() const { return graph_; }
  const NilData& nil() const { return graph_.nil(); }
  std::int64_t order() const { return ring_.order(); }
  std::int64_t nil_size() const { return graph_.nil().t; }
  std::int64_t vertex_count() const { return graph_.vertex_count(); }

  const ComponentDecomposition& decomposition() const;
  Girth girth_value() const;
  std::int64_t delta() const;
  const Capped& omega() const;
  const Capped& gamma() const;
  const Capped& chi_prime() const;
  std::optional<int> vizing_class() const;
  const Capped& chi() const;
  const SumColoring& sum_coloring() const;

  bool spectra_within_cap() const { return vertex_count() <= caps_.spectra_cap; }
  const ExactMatrix& matrix(MatrixTarget target) const;

 private:
  Caps caps_;
  FiniteRing ring_;
  NilpotentGraph graph_;
  mutable std::optional<ComponentDecomposition> decomposition_;
  mutable std::optional<Girth> girth_;
  mutable std::optional<std::int64_t> delta_;
  mutable std::optional<Capped> omega_, gamma_, chi_prime_, chi_;
  mutable std::optional<int> vizing_;
  mutable bool chromatic_index_done_ = false;
  mutable std::optional<SumColoring> sum_coloring_;
  mutable std::map<MatrixTarget, ExactMatrix> matrices_;
};

// Closed-form predictions, hypothesis-gated exactly as stated.

struct GirthPrediction {
  bool applicable = false;
  Girth value;
};

// Z_n case split for a single factor, the general-ring theorems otherwise.
GirthPrediction predict_girth(const RingContext& ctx);

// odd |R| -> 2; even |R| -> |Nil| when |Nil| >= 2, else 2
std::int64_t predict_clique(const RingContext& ctx);

struct StructurePrediction {
  bool applicable = false;
  std::int64_t clique_order = 0;    // 0 = no clique component predicted
  std::int64_t biclique_count = 0;  // m
  std::int64_t part_size = 0;       // t, each biclique K_{t,t}
  std::string str() const;
};

StructurePrediction predict_structure(const RingContext& ctx);

struct DominatingPrediction {
  std::optional<std::int64_t> zn_paper;    // Z_n formulas, parity split
  std::optional<std::int64_t> ring_paper;  // general odd-order formula
  // per predicted component: 1 for K_t and K_{1,1}, 2 for K_{t,t} with t >= 2;
  // plumbing for the three-way comparison, never presented as the paper's claim
  std::optional<std::int64_t> decomposition_derived;
};

DominatingPrediction predict_dominating(const RingContext& ctx);

struct SpectraPrediction {
  bool applicable = false;
  SpectrumPrediction a, l, q;
};

// Literal closed-form spectra: the two Z_n factorization cases, or the
// odd-order ring formulas. Even-order products: not applicable.
SpectraPrediction predict_spectra(const RingContext& ctx);

struct ChromaticIndexPrediction {
  std::int64_t class1_value = 0;  // chi' = Delta
  std::int64_t nil_value = 0;     // chi' = |Nil(R)|
};

ChromaticIndexPrediction predict_chromatic_index(const RingContext& ctx);

struct BipartitePrediction {
  bool applicable = false;
  bool bipartite = false;
  std::string hypothesis;
};

// Only for Z_n with exactly two distinct prime factors.
BipartitePrediction predict_bipartite(const RingContext& ctx);

struct BipartitionWitness {
  std::vector<std::int64_t> clique_part;  // element ids; empty for odd order
  std::vector<std::int64_t> part_a, part_b;
};

// Realizes the bipartition from the structure theorem's proof for composite
// Z_n, with pq generalized to rad(n). Every witness invariant is verified
// exhaustively; a violation throws FalsificationError.
BipartitionWitness construct_bipartition(const FiniteRing& ring);

std::string decomposition_summary(const ComponentDecomposition& decomposition);

std::vector<TheoremVerdict> verify_instance(const RingContext& ctx);
std::vector<TheoremVerdict> verify_instance(const FiniteRing& ring, const Caps& caps);

// Sweep families.
std::vector<RingSpec> enumerate_zn(std::int64_t max_n);
// Z_a x Z_b with 2 <= a <= b and a*b <= max_order
std::vector<RingSpec> enumerate_two_factor_products(std::int64_t max_order);

struct SweepRow {
  std::int64_t order = 0;
  std::string ring;
  std::int64_t nil_size = 0;
  TheoremVerdict verdict;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // sorted by (order, ring, theorem id)
  std::map<TheoremId, std::map<VerdictStatus, std::int64_t>> counts;
  std::vector<SweepRow> mismatches;
};

SweepResult sweep_verify(const std::vector<RingSpec>& family, const Caps& caps, int workers);

}  // namespace nilgraph
