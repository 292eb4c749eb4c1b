#pragma once

#include <map>
#include <optional>
#include <string>

#include "prodint/ast.hpp"
#include "prodint/bool_abs.hpp"
#include "prodint/config.hpp"
#include "prodint/congruence.hpp"
#include "prodint/diff_store.hpp"
#include "prodint/interval.hpp"
#include "prodint/num_transfer.hpp"
#include "prodint/parity.hpp"
#include "prodint/power.hpp"
#include "prodint/sign.hpp"
#include "prodint/var_env.hpp"

namespace prodint {

struct analysis_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Array content abstraction: a cardinal power over the two parity atoms,
// with interval entries. Which parity (value or index) selects the cell is
// a run-configuration matter.
using array_cells = power_value<parity, interval>;

// Composite per-point state: one environment per configured non-relational
// domain, the relational store when configured, and array cells in the
// array-power modes. Bottom in any configured component collapses the
// whole state (after reduction, where installed).
struct abstract_state {
  bool bot = false;
  std::optional<var_env<interval>> ivals;
  std::optional<var_env<parity>> pars;
  std::optional<var_env<sign>> sgns;
  std::optional<var_env<congruence>> cngs;
  std::optional<var_env<bool_abs>> bools;
  std::optional<diff_store> rel;
  std::optional<std::map<std::string, array_cells>> cells;

  // Empty state with the components the configuration asks for.
  static abstract_state top_for(const run_config &cfg);
  static abstract_state bottom_like(const abstract_state &proto);

  bool is_bottom() const { return bot; }
  // Sets the bottom flag if any engaged component is bottom.
  void normalize();

  bool leq(const abstract_state &o) const;
  abstract_state join(const abstract_state &o) const;
  abstract_state widen(const abstract_state &o) const;

  std::string str() const;

  friend bool operator==(const abstract_state &a, const abstract_state &b);
};

// Statement/guard semantics and reduction, parameterized by the run
// configuration. Operation counts go to the active counter scope.
abstract_state transfer(const stmt &s, const abstract_state &in,
                        const run_config &cfg);
abstract_state assume_state(const cond &c, const abstract_state &in,
                            const run_config &cfg);
// Applies the configured reduction rules: once for the reduced product,
// iterated to a fixpoint (capped) for the granger product.
abstract_state reduce_state(const abstract_state &in, const run_config &cfg);

// Disjunctive entailment: any configured component may prove the
// condition.
bool state_entails(const abstract_state &s, const cond &c);

} // namespace prodint
