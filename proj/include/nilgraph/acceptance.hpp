#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nilgraph/invariants.hpp"

namespace nilgraph {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AcceptanceOptions {
  // 0 keeps every criterion at its stated bound; otherwise each family is
  // capped at min(stated bound, max_n)
  std::int64_t max_n = 0;
  Caps caps;
  int workers = 0;
};

// Runs the whole acceptance suite. `log`, when non-null, receives one
// progress line per criterion as it finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream* log);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace nilgraph
