#pragma once

#include <json.hpp>

#include <string>

#include "nilgraph/theorems.hpp"

namespace nilgraph {

struct SpectraReport {
  bool within_cap = true;
  SpectrumPrediction a, l, q;  // component route predictions
  bool a_ok = false, l_ok = false, q_ok = false;
};

// Everything `analyze` reports for one ring: counts, invariants, the shape
// decomposition, spectra certification and the theorem verdict table.
struct RingAnalysis {
  std::string ring;
  std::int64_t order = 0;
  std::vector<std::int64_t> nil_elements;
  std::int64_t nil_size = 0;
  std::int64_t vertex_count = 0;
  std::int64_t edge_count = 0;
  InvariantReport invariants;
  std::string decomposition;
  std::int64_t m_biclique = 0;
  SpectraReport spectra;
  std::vector<TheoremVerdict> verdicts;
  bool any_mismatch = false;
};

RingAnalysis analyze_ring(const RingContext& ctx);

nlohmann::json spectrum_json(const SpectrumPrediction& prediction);
nlohmann::json verdict_json(const TheoremVerdict& verdict);
nlohmann::json invariants_json(const InvariantReport& report);
nlohmann::json decomposition_json(const RingContext& ctx);
nlohmann::json analysis_json(const RingAnalysis& analysis, const RingContext& ctx);

inline constexpr const char* kSweepCsvHeader = "ring,order,nil_size,theorem,predicted,computed,status,note";

std::string csv_field(const std::string& raw);
std::string sweep_csv(const SweepResult& result);
std::string verdict_csv(const std::string& ring, std::int64_t order, std::int64_t nil_size,
                        const std::vector<TheoremVerdict>& verdicts);
nlohmann::json sweep_json(const SweepResult& result);

}  // namespace nilgraph
