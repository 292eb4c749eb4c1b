#pragma once

#include <optional>

#include "prodint/ast.hpp"
#include "prodint/bool_abs.hpp"
#include "prodint/congruence.hpp"
#include "prodint/interval.hpp"
#include "prodint/parity.hpp"
#include "prodint/sign.hpp"
#include "prodint/var_env.hpp"

namespace prodint {

// Expression evaluation and guard refinement for the non-relational
// domains. Evaluation of an unbound variable throws unbound_variable;
// every assume is reductive (result <= env) and sound
// (gamma(result) >= gamma(env) /\ [[c]]).

interval interval_eval(const expr &e, const var_env<interval> &env);
var_env<interval> interval_assume(const cond &c, const var_env<interval> &env);

parity parity_eval(const expr &e, const var_env<parity> &env);
var_env<parity> parity_assume(const cond &c, const var_env<parity> &env);

sign sign_eval(const expr &e, const var_env<sign> &env);
var_env<sign> sign_assume(const cond &c, const var_env<sign> &env);

congruence congruence_eval(const expr &e, const var_env<congruence> &env);
var_env<congruence> congruence_assume(const cond &c,
                                      const var_env<congruence> &env);

// Entailment of a condition by a single non-relational environment;
// unbound variables count as unconstrained, never as errors.
bool interval_entails(const cond &c, const var_env<interval> &env);
bool sign_entails(const cond &c, const var_env<sign> &env);

// The numeric abstractions a condition can be evaluated against.
struct numeric_view {
  const var_env<interval> *intervals = nullptr;
  const var_env<sign> *signs = nullptr;
};

// tt if the condition is entailed, ff if its negation is, top otherwise,
// bottom if the underlying environment is bottom.
bool_abs bool_eval_cond(const cond &c, const numeric_view &nv);

// e as (variable + constant) when it has that shape.
std::optional<std::pair<std::string, std::int64_t>> decompose_var_offset(
    const expr &e);

} // namespace prodint
