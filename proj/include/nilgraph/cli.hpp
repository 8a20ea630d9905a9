#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "nilgraph/invariants.hpp"

namespace nilgraph {

// Exit codes: 0 = clean, 2 = at least one Mismatch verdict (or a failed
// acceptance criterion), 1 = usage or internal error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

struct RunConfig {
  enum class Command { Analyze, Sweep, Verify };
  Command command = Command::Analyze;

  std::string ring_text;  // analyze
  bool zn = false;        // sweep families
  bool products = false;
  std::int64_t max = 0;   // sweep bound; verify bound (0 = stated bounds)

  Caps caps;
  int workers = 0;  // 0 = NILGRAPH_WORKERS env or hardware default

  std::optional<std::string> json_path;
  std::optional<std::string> csv_path;
  std::optional<std::string> dot_path;
};

int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace nilgraph
