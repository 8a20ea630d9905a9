#include "nilgraph/analysis.hpp"

namespace nilgraph {

using nlohmann::json;

RingAnalysis analyze_ring(const RingContext& ctx) {
  RingAnalysis a;
  a.ring = ctx.ring().spec().canonical_text;
  a.order = ctx.order();
  a.nil_elements = ctx.nil().nilpotent_ids;
  a.nil_size = ctx.nil_size();
  a.vertex_count = ctx.vertex_count();
  a.edge_count = ctx.graph().edge_count();
  a.invariants = compute_invariants(ctx.graph(), ctx.decomposition(), ctx.caps());
  a.decomposition = decomposition_summary(ctx.decomposition());
  a.m_biclique = ctx.decomposition().m_biclique;
  a.spectra.within_cap = ctx.spectra_within_cap();
  if (a.spectra.within_cap) {
    a.spectra.a = component_spectrum_prediction(ctx.decomposition(), MatrixTarget::Adjacency);
    a.spectra.l = component_spectrum_prediction(ctx.decomposition(), MatrixTarget::Laplacian);
    a.spectra.q =
        component_spectrum_prediction(ctx.decomposition(), MatrixTarget::SignlessLaplacian);
    a.spectra.a_ok = verify_spectrum(ctx.matrix(MatrixTarget::Adjacency), a.spectra.a).ok;
    a.spectra.l_ok = verify_spectrum(ctx.matrix(MatrixTarget::Laplacian), a.spectra.l).ok;
    a.spectra.q_ok =
        verify_spectrum(ctx.matrix(MatrixTarget::SignlessLaplacian), a.spectra.q).ok;
  }
  a.verdicts = verify_instance(ctx);
  for (const auto& v : a.verdicts) {
    if (v.status == VerdictStatus::Mismatch) a.any_mismatch = true;
  }
  return a;
}

json spectrum_json(const SpectrumPrediction& prediction) {
  json out = json::array();
  for (const auto& [lambda, mult] : prediction.pairs) {
    out.push_back(json{{"lambda", lambda}, {"mult", mult}});
  }
  return out;
}

json verdict_json(const TheoremVerdict& verdict) {
  return json{{"ring", verdict.ring},
              {"theorem", std::string(theorem_name(verdict.id))},
              {"predicted", verdict.predicted},
              {"computed", verdict.computed},
              {"status", std::string(status_name(verdict.status))},
              {"note", verdict.note}};
}

namespace {

json opt_json(const std::optional<std::int64_t>& value) {
  if (value) return *value;
  return "skipped";
}

}  // namespace

json invariants_json(const InvariantReport& report) {
  json out{{"girth", report.girth_value.infinite ? json("inf") : json(report.girth_value.length)},
           {"delta", report.delta},
           {"omega", opt_json(report.omega)},
           {"gamma", opt_json(report.gamma)},
           {"chi_prime", opt_json(report.chi_prime)},
           {"chi", opt_json(report.chi)}};
  out["vizing_class"] = report.vizing_class ? json(*report.vizing_class) : json("skipped");
  if (!report.skip_note.empty()) out["skip_note"] = report.skip_note;
  return out;
}

json decomposition_json(const RingContext& ctx) {
  const auto& decomposition = ctx.decomposition();
  json components = json::array();
  for (std::size_t i = 0; i < decomposition.components.size(); ++i) {
    json entry;
    json vertices = json::array();
    for (std::int32_t pos : decomposition.components[i]) {
      vertices.push_back(ctx.graph().element_of(pos));
    }
    entry["vertices"] = std::move(vertices);
    const auto& shape = decomposition.shapes[i];
    switch (shape.kind) {
      case ShapeKind::CompleteK:
        entry["shape"] = json{{"kind", "complete"}, {"order", shape.complete_order}};
        break;
      case ShapeKind::Biclique: {
        json pa = json::array(), pb = json::array();
        for (std::int32_t pos : shape.part_a) pa.push_back(ctx.graph().element_of(pos));
        for (std::int32_t pos : shape.part_b) pb.push_back(ctx.graph().element_of(pos));
        entry["shape"] = json{{"kind", "biclique"}, {"part_a", pa}, {"part_b", pb}};
        break;
      }
      case ShapeKind::Other:
        entry["shape"] = json{{"kind", "other"}};
        break;
    }
    components.push_back(std::move(entry));
  }
  return json{{"summary", decomposition_summary(decomposition)},
              {"m_biclique", decomposition.m_biclique},
              {"components", components}};
}

json analysis_json(const RingAnalysis& analysis, const RingContext& ctx) {
  json spectra;
  if (analysis.spectra.within_cap) {
    spectra = json{{"A", json{{"prediction", spectrum_json(analysis.spectra.a)},
                              {"verified", analysis.spectra.a_ok}}},
                   {"L", json{{"prediction", spectrum_json(analysis.spectra.l)},
                              {"verified", analysis.spectra.l_ok}}},
                   {"Q", json{{"prediction", spectrum_json(analysis.spectra.q)},
                              {"verified", analysis.spectra.q_ok}}}};
  } else {
    spectra = "skipped";
  }
  json verdicts = json::array();
  for (const auto& v : analysis.verdicts) verdicts.push_back(verdict_json(v));
  return json{{"ring", analysis.ring},
              {"order", analysis.order},
              {"nil", analysis.nil_elements},
              {"nil_size", analysis.nil_size},
              {"vertices", analysis.vertex_count},
              {"edges", analysis.edge_count},
              {"invariants", invariants_json(analysis.invariants)},
              {"decomposition", decomposition_json(ctx)},
              {"spectra", spectra},
              {"verdicts", verdicts},
              {"any_mismatch", analysis.any_mismatch}};
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

namespace {

void append_csv_row(std::string& out, const std::string& ring, std::int64_t order,
                    std::int64_t nil_size, const TheoremVerdict& v) {
  out += csv_field(ring);
  out += ',';
  out += std::to_string(order);
  out += ',';
  out += std::to_string(nil_size);
  out += ',';
  out += std::string(theorem_name(v.id));
  out += ',';
  out += csv_field(v.predicted);
  out += ',';
  out += csv_field(v.computed);
  out += ',';
  out += std::string(status_name(v.status));
  out += ',';
  out += csv_field(v.note);
  out += '\n';
}

}  // namespace

std::string sweep_csv(const SweepResult& result) {
  std::string out = kSweepCsvHeader;
  out += '\n';
  for (const auto& row : result.rows) {
    append_csv_row(out, row.ring, row.order, row.nil_size, row.verdict);
  }
  return out;
}

std::string verdict_csv(const std::string& ring, std::int64_t order, std::int64_t nil_size,
                        const std::vector<TheoremVerdict>& verdicts) {
  std::string out = kSweepCsvHeader;
  out += '\n';
  for (const auto& v : verdicts) append_csv_row(out, ring, order, nil_size, v);
  return out;
}

json sweep_json(const SweepResult& result) {
  json rows = json::array();
  for (const auto& row : result.rows) {
    json entry = verdict_json(row.verdict);
    entry["order"] = row.order;
    entry["nil_size"] = row.nil_size;
    rows.push_back(std::move(entry));
  }
  json counts;
  for (const auto& [id, by_status] : result.counts) {
    json entry;
    for (const auto& [status, count] : by_status) {
      entry[std::string(status_name(status))] = count;
    }
    counts[std::string(theorem_name(id))] = std::move(entry);
  }
  return json{{"rows", rows}, {"counts", counts}};
}

}  // namespace nilgraph
