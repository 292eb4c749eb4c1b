#pragma once

#include <string>

#include "prodint/analyzer.hpp"
#include "prodint/concrete.hpp"

namespace prodint {

struct report_input {
  std::string program_path;
  const run_config *config = nullptr;
  const cfg *graph = nullptr;
  const analysis_result *result = nullptr;
  const soundness_report *soundness = nullptr; // present when --oracle ran
};

// Human-readable report: per-point states, obligation verdicts, counters.
std::string render_text(const report_input &in);

// Machine-readable report; fields program, config, points, obligations,
// counters (and oracle when present). Key order is fixed, so the output
// is byte-stable for golden diffs.
std::string render_json(const report_input &in);

} // namespace prodint
