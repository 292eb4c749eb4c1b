#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prodint/cfg.hpp"
#include "prodint/config.hpp"
#include "prodint/counters.hpp"
#include "prodint/state.hpp"

namespace prodint {

// Disjunctive state keyed by the pivot variable's exponent atoms. Entering
// an atom refines the table entry with pivot-in-atom; statements that
// assign the pivot redistribute mass across atoms.
struct power_state {
  bool defined = false; // distinguishes "not yet computed" in tables
  std::vector<exp_atom> atoms;
  std::vector<abstract_state> table;

  bool is_bottom() const {
    for (const abstract_state &s : table)
      if (!s.is_bottom())
        return false;
    return true;
  }

  bool leq(const power_state &o) const;
  power_state join(const power_state &o) const;
  power_state widen(const power_state &o) const;
  std::string str() const;

  friend bool operator==(const power_state &a, const power_state &b) {
    return a.atoms == b.atoms && a.table == b.table;
  }
};

struct obligation_verdict {
  obligation_site site;
  bool proved = false;

  std::string verdict_str() const { return proved ? "PROVED" : "UNKNOWN"; }
};

struct analysis_result {
  bool power_mode = false;
  // Per CFG node; entries for unreached nodes stay bottom/undefined.
  std::vector<abstract_state> states;
  std::vector<power_state> power_states;
  std::vector<bool> reached;
  std::vector<obligation_verdict> obligations;
  std::uint64_t node_visits = 0;
  op_counters counters;

  bool all_proved() const {
    for (const obligation_verdict &o : obligations)
      if (!o.proved)
        return false;
    return true;
  }
  std::string state_str(int node) const;
};

// Worklist fixpoint over the CFG under the given configuration. The
// worklist is ordered by reverse post-order with ties on node index, so a
// run is deterministic. Widening applies at loop heads from the
// (delay+1)-th update on; the stored widening iterate is never reduced.
analysis_result analyze(const cfg &g, const program &p, const run_config &cfg);

// Array-content analysis (value- or index-parity cells) on top of the
// scalar configuration.
analysis_result analyze_array_power(const cfg &g, const program &p,
                                    array_power_mode mode, run_config cfg);

// One extra pass after convergence: per edge, transferring the source
// state must land below the stored target state. Returns human-readable
// violations (empty on success).
std::vector<std::string> verify_post_fixpoint(const cfg &g,
                                              const analysis_result &r,
                                              const run_config &cfg);

} // namespace prodint
