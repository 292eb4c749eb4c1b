#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "prodint/analyzer.hpp"
#include "prodint/cfg.hpp"

namespace prodint {

// Desk-scale collecting semantics: exact execution over every declared
// input tuple, recording the set of concrete stores per program point.

struct concrete_array {
  std::int64_t length = 0;
  std::map<std::int64_t, std::int64_t> written; // index -> value

  friend auto operator<=>(const concrete_array &,
                          const concrete_array &) = default;
};

struct concrete_store {
  std::map<std::string, std::int64_t> scalars; // Booleans as 0/1
  std::map<std::string, concrete_array> arrays;

  friend auto operator<=>(const concrete_store &,
                          const concrete_store &) = default;
};

struct collect_result {
  std::vector<std::set<concrete_store>> per_node;
  bool partial = false; // step bound hit; tests must not rely on the data
  std::uint64_t runs = 0;
  std::uint64_t steps = 0;
  std::vector<std::string> runtime_errors; // e.g. out-of-bounds stores
};

collect_result collect_concrete(const program &p, const cfg &g,
                                std::int64_t step_bound = 10000);

struct soundness_report {
  std::vector<std::string> violations;
  std::uint64_t checks = 0;

  bool ok() const { return violations.empty(); }
};

// Every collected store must lie in the concretization of its node's
// abstract state, and every PROVED obligation must hold in every store
// reaching its node.
soundness_report check_soundness(const analysis_result &r,
                                 const collect_result &c, const cfg &g,
                                 const run_config &cfg);

} // namespace prodint
