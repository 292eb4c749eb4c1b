#pragma once

#include "prodint/congruence.hpp"
#include "prodint/diff_store.hpp"
#include "prodint/interval.hpp"
#include "prodint/parity.hpp"
#include "prodint/product.hpp"
#include "prodint/var_env.hpp"

namespace prodint {

// Interval x Parity: a finite bound whose parity contradicts the parity
// value moves inward by one; a singleton interval pins the parity.
reduction_rule<interval, parity> rho_interval_parity();

// Interval x Congruence: the interval shrinks to the outermost members of
// mZ it contains; a singleton interval pins the modulus.
reduction_rule<interval, congruence> rho_interval_congruence();

// Environment-level reduction feeding interval bounds into the relational
// store: x -> [a..b], y -> [c..d] with finite b, c implies x < y + (b-c+1).
diff_store rho_intervals_to_diff(const var_env<interval> &ienv,
                                 const diff_store &s);

// Back-flow from constraints to interval bounds. Provided for completeness;
// the engine leaves it off by default.
var_env<interval> rho_diff_to_intervals(const diff_store &s,
                                        const var_env<interval> &ienv);

} // namespace prodint
