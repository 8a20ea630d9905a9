#include "nilgraph/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

#include "nilgraph/acceptance.hpp"
#include "nilgraph/analysis.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/theorems.hpp"

namespace nilgraph {

namespace {

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    err << "error: cannot open '" << path << "' for writing\n";
    return false;
  }
  out << content;
  return true;
}

std::string opt_str(const std::optional<std::int64_t>& value) {
  return value ? std::to_string(*value) : "skipped";
}

void print_verdicts(std::ostream& out, const std::vector<TheoremVerdict>& verdicts) {
  out << "verdicts:\n";
  for (const auto& v : verdicts) {
    out << "  " << std::left << std::setw(24) << theorem_name(v.id) << std::setw(15)
        << status_name(v.status) << " predicted " << v.predicted << " | computed " << v.computed;
    if (!v.note.empty()) out << "  (" << v.note << ")";
    out << "\n";
  }
}

}  // namespace

int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    RingContext ctx(config.ring_text, config.caps);
    const RingAnalysis analysis = analyze_ring(ctx);
    out << "ring " << analysis.ring << "  order " << analysis.order << "  |Nil| "
        << analysis.nil_size << "\n";
    out << "graph: " << analysis.vertex_count << " vertices, " << analysis.edge_count
        << " edges\n";
    out << "decomposition: " << analysis.decomposition << "\n";
    const auto& inv = analysis.invariants;
    out << "invariants: girth " << inv.girth_value.str() << ", delta " << inv.delta << ", omega "
        << opt_str(inv.omega) << ", gamma " << opt_str(inv.gamma) << ", chi " << opt_str(inv.chi)
        << ", chi' " << opt_str(inv.chi_prime);
    if (inv.vizing_class) out << " (class " << *inv.vizing_class << ")";
    out << "\n";
    if (analysis.spectra.within_cap) {
      out << "spectra (component route): A "
          << (analysis.spectra.a_ok ? "certified" : "FAILED") << ", L "
          << (analysis.spectra.l_ok ? "certified" : "FAILED") << ", Q "
          << (analysis.spectra.q_ok ? "certified" : "FAILED") << "\n";
    } else {
      out << "spectra: skipped (dimension above cap)\n";
    }
    print_verdicts(out, analysis.verdicts);
    if (config.json_path &&
        !write_file(*config.json_path, analysis_json(analysis, ctx).dump(2) + "\n", err)) {
      return kExitUsage;
    }
    if (config.csv_path &&
        !write_file(*config.csv_path,
                    verdict_csv(analysis.ring, analysis.order, analysis.nil_size,
                                analysis.verdicts),
                    err)) {
      return kExitUsage;
    }
    if (config.dot_path && !write_file(*config.dot_path, to_dot(ctx.graph()), err)) {
      return kExitUsage;
    }
    return analysis.any_mismatch ? kExitMismatch : kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!config.zn && !config.products) {
      err << "error: sweep needs --zn and/or --products\n";
      return kExitUsage;
    }
    if (config.max < 2) {
      err << "error: sweep needs --max of at least 2\n";
      return kExitUsage;
    }
    std::vector<RingSpec> family;
    if (config.zn) family = enumerate_zn(config.max);
    if (config.products) {
      for (RingSpec& spec : enumerate_two_factor_products(config.max)) {
        family.push_back(std::move(spec));
      }
    }
    const SweepResult result = sweep_verify(family, config.caps, config.workers);
    out << family.size() << " rings processed, " << result.rows.size() << " verdict rows\n";
    for (const auto& [id, by_status] : result.counts) {
      out << "  " << std::left << std::setw(24) << theorem_name(id);
      bool first = true;
      for (const auto& [status, count] : by_status) {
        if (!first) out << ", ";
        out << status_name(status) << " " << count;
        first = false;
      }
      out << "\n";
    }
    if (!result.mismatches.empty()) {
      out << "mismatches:\n";
      for (const auto& row : result.mismatches) {
        out << "  " << row.ring << " " << theorem_name(row.verdict.id) << ": predicted "
            << row.verdict.predicted << ", computed " << row.verdict.computed;
        if (!row.verdict.note.empty()) out << " (" << row.verdict.note << ")";
        out << "\n";
      }
    }
    if (config.csv_path && !write_file(*config.csv_path, sweep_csv(result), err)) {
      return kExitUsage;
    }
    if (config.json_path &&
        !write_file(*config.json_path, sweep_json(result).dump(2) + "\n", err)) {
      return kExitUsage;
    }
    return result.mismatches.empty() ? kExitOk : kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.max != 0 && config.max < 2) {
      err << "error: verify needs --max of at least 2\n";
      return kExitUsage;
    }
    AcceptanceOptions options;
    options.max_n = config.max;
    options.caps = config.caps;
    options.workers = config.workers;
    const std::vector<CriterionResult> results = run_acceptance(options, &out);
    const bool pass = all_passed(results);
    out << (pass ? "all criteria passed" : "some criteria FAILED") << "\n";
    if (config.json_path) {
      nlohmann::json criteria = nlohmann::json::array();
      for (const auto& r : results) {
        criteria.push_back(nlohmann::json{
            {"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      }
      nlohmann::json doc{{"criteria", criteria}, {"pass", pass}};
      if (!write_file(*config.json_path, doc.dump(2) + "\n", err)) return kExitUsage;
    }
    return pass ? kExitOk : kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case RunConfig::Command::Analyze: return run_analyze(config, out, err);
    case RunConfig::Command::Sweep: return run_sweep(config, out, err);
    case RunConfig::Command::Verify: return run_verify(config, out, err);
  }
  return kExitUsage;
}

}  // namespace nilgraph
