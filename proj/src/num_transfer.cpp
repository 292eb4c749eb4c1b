#include "prodint/num_transfer.hpp"

#include <algorithm>

namespace prodint {

namespace {

// "a op b" read from b's side: b flip(op) a.
cond::rel_op flip_op(cond::rel_op op) {
  switch (op) {
  case cond::rel_op::lt:
    return cond::rel_op::gt;
  case cond::rel_op::le:
    return cond::rel_op::ge;
  case cond::rel_op::gt:
    return cond::rel_op::lt;
  case cond::rel_op::ge:
    return cond::rel_op::le;
  default:
    return op; // eq, ne are symmetric
  }
}

} // namespace

std::optional<std::pair<std::string, std::int64_t>>
decompose_var_offset(const expr &e) {
  switch (e.k()) {
  case expr::kind::variable:
    return std::make_pair(e.var(), std::int64_t{0});
  case expr::kind::add:
    if (e.lhs().is_variable() && e.rhs().is_constant())
      return std::make_pair(e.lhs().var(), e.rhs().value());
    if (e.lhs().is_constant() && e.rhs().is_variable())
      return std::make_pair(e.rhs().var(), e.lhs().value());
    return std::nullopt;
  case expr::kind::sub:
    if (e.lhs().is_variable() && e.rhs().is_constant())
      return std::make_pair(e.lhs().var(), -e.rhs().value());
    return std::nullopt;
  default:
    return std::nullopt;
  }
}

// ---------------------------------------------------------------- interval

interval interval_eval(const expr &e, const var_env<interval> &env) {
  if (env.is_bottom())
    return interval::bottom();
  switch (e.k()) {
  case expr::kind::constant:
    return interval::constant(e.value());
  case expr::kind::variable:
    return env.get(e.var());
  case expr::kind::add:
    return interval_eval(e.lhs(), env).add(interval_eval(e.rhs(), env));
  case expr::kind::sub:
    return interval_eval(e.lhs(), env).sub(interval_eval(e.rhs(), env));
  }
  return interval::top();
}

namespace {

// Tolerant evaluation for refinement and entailment: unbound is top.
interval ieval_top(const expr &e, const var_env<interval> &env) {
  switch (e.k()) {
  case expr::kind::constant:
    return interval::constant(e.value());
  case expr::kind::variable:
    return env.get_or_top(e.var());
  case expr::kind::add:
    return ieval_top(e.lhs(), env).add(ieval_top(e.rhs(), env));
  case expr::kind::sub:
    return ieval_top(e.lhs(), env).sub(ieval_top(e.rhs(), env));
  }
  return interval::top();
}

interval shift(const interval &iv, std::int64_t k) {
  return iv.add(interval::constant(k));
}

// Refine env so that (x + k) `op` rhs_range can still hold.
var_env<interval> refine_left(const std::string &x, std::int64_t k,
                              cond::rel_op op, const interval &rhs,
                              const var_env<interval> &env) {
  if (env.is_bottom() || rhs.is_bottom())
    return var_env<interval>::bottom();
  const interval cur = env.get_or_top(x);
  const interval r = shift(rhs, -k); // x op r
  interval lim = interval::top();
  switch (op) {
  case cond::rel_op::lt:
    if (!r.hi().is_plus_inf())
      lim = interval::make(ext_int::minus_inf(), r.hi() - ext_int(1));
    break;
  case cond::rel_op::le:
    lim = interval::make(ext_int::minus_inf(), r.hi());
    break;
  case cond::rel_op::gt:
    if (!r.lo().is_minus_inf())
      lim = interval::make(r.lo() + ext_int(1), ext_int::plus_inf());
    break;
  case cond::rel_op::ge:
    lim = interval::make(r.lo(), ext_int::plus_inf());
    break;
  case cond::rel_op::eq:
    lim = r;
    break;
  case cond::rel_op::ne:
    if (auto s = r.singleton()) {
      interval trimmed = cur;
      if (cur.is_singleton() && cur.singleton() == s)
        trimmed = interval::bottom();
      else if (cur.lo() == ext_int(*s))
        trimmed = interval::make(ext_int(*s + 1), cur.hi());
      else if (cur.hi() == ext_int(*s))
        trimmed = interval::make(cur.lo(), ext_int(*s - 1));
      return env.with(x, trimmed);
    }
    return env;
  }
  return env.with(x, cur.meet(lim));
}

} // namespace

var_env<interval> interval_assume(const cond &c,
                                  const var_env<interval> &env) {
  if (env.is_bottom())
    return env;
  switch (c.k()) {
  case cond::kind::truth:
    return c.truth_value() ? env : var_env<interval>::bottom();
  case cond::kind::bool_var:
    return env; // tracked elsewhere
  case cond::kind::relation:
    break;
  }

  var_env<interval> out = env;
  // Left side: (x + k) op rhs.
  if (auto lv = decompose_var_offset(c.lhs()))
    out = refine_left(lv->first, lv->second, c.op(), ieval_top(c.rhs(), out),
                      out);
  if (out.is_bottom())
    return out;
  if (auto rv = decompose_var_offset(c.rhs()))
    out = refine_left(rv->first, rv->second, flip_op(c.op()),
                      ieval_top(c.lhs(), out), out);
  return out;
}

bool interval_entails(const cond &c, const var_env<interval> &env) {
  if (env.is_bottom())
    return true;
  switch (c.k()) {
  case cond::kind::truth:
    return c.truth_value();
  case cond::kind::bool_var:
    return false;
  case cond::kind::relation:
    break;
  }
  const interval a = ieval_top(c.lhs(), env);
  const interval b = ieval_top(c.rhs(), env);
  if (a.is_bottom() || b.is_bottom())
    return true; // unreachable evaluation
  switch (c.op()) {
  case cond::rel_op::lt:
    return a.hi() < b.lo();
  case cond::rel_op::le:
    return a.hi() <= b.lo();
  case cond::rel_op::gt:
    return b.hi() < a.lo();
  case cond::rel_op::ge:
    return b.hi() <= a.lo();
  case cond::rel_op::eq:
    return a.is_singleton() && a == b;
  case cond::rel_op::ne:
    return a.meet(b).is_bottom();
  }
  return false;
}

// ------------------------------------------------------------------ parity

parity parity_eval(const expr &e, const var_env<parity> &env) {
  if (env.is_bottom())
    return parity::bottom();
  switch (e.k()) {
  case expr::kind::constant:
    return parity::of(e.value());
  case expr::kind::variable:
    return env.get(e.var());
  case expr::kind::add:
  case expr::kind::sub: {
    const parity l = parity_eval(e.lhs(), env);
    const parity r = parity_eval(e.rhs(), env);
    if (l.is_bottom() || r.is_bottom())
      return parity::bottom();
    // e + e and e - e are even regardless of e's parity.
    if (e.lhs().same(e.rhs()))
      return parity::even();
    return e.k() == expr::kind::add ? l.add(r) : l.sub(r);
  }
  }
  return parity::top();
}

namespace {

parity peval_top(const expr &e, const var_env<parity> &env) {
  switch (e.k()) {
  case expr::kind::constant:
    return parity::of(e.value());
  case expr::kind::variable:
    return env.get_or_top(e.var());
  case expr::kind::add:
  case expr::kind::sub: {
    if (e.lhs().same(e.rhs()))
      return parity::even();
    const parity l = peval_top(e.lhs(), env);
    const parity r = peval_top(e.rhs(), env);
    return e.k() == expr::kind::add ? l.add(r) : l.sub(r);
  }
  }
  return parity::top();
}

} // namespace

var_env<parity> parity_assume(const cond &c, const var_env<parity> &env) {
  if (env.is_bottom())
    return env;
  switch (c.k()) {
  case cond::kind::truth:
    return c.truth_value() ? env : var_env<parity>::bottom();
  case cond::kind::bool_var:
    return env;
  case cond::kind::relation:
    break;
  }
  if (c.op() != cond::rel_op::eq)
    return env; // parity carries no order information
  var_env<parity> out = env;
  if (auto lv = decompose_var_offset(c.lhs())) {
    const parity p =
        peval_top(c.rhs(), out).sub(parity::of(lv->second)); // x = rhs - k
    out = out.with(lv->first, out.get_or_top(lv->first).meet(p));
  }
  if (out.is_bottom())
    return out;
  if (auto rv = decompose_var_offset(c.rhs())) {
    const parity p = peval_top(c.lhs(), out).sub(parity::of(rv->second));
    out = out.with(rv->first, out.get_or_top(rv->first).meet(p));
  }
  return out;
}

// -------------------------------------------------------------------- sign

namespace {

// Expressions over sign values are evaluated as small unions of integer
// intervals; constants stay exact that way (x - 1 from + lands on 0+).
using region_list = std::vector<interval>;

region_list normalize_regions(region_list rs) {
  rs.erase(std::remove_if(rs.begin(), rs.end(),
                          [](const interval &r) { return r.is_bottom(); }),
           rs.end());
  std::sort(rs.begin(), rs.end(), [](const interval &a, const interval &b) {
    return a.lo() < b.lo();
  });
  region_list out;
  for (const interval &r : rs) {
    if (!out.empty()) {
      interval &last = out.back();
      // Adjacent integer ranges merge: [a..b] ++ [b+1..c].
      if (r.lo() <= last.hi() + ext_int(1)) {
        last = interval::make(last.lo(), max(last.hi(), r.hi()));
        continue;
      }
    }
    out.push_back(r);
  }
  return out;
}

region_list combine_regions(const region_list &a, const region_list &b,
                            bool is_add) {
  region_list out;
  for (const interval &x : a)
    for (const interval &y : b)
      out.push_back(is_add ? x.add(y) : x.sub(y));
  return normalize_regions(std::move(out));
}

region_list sign_regions(const expr &e, const var_env<sign> &env,
                         bool tolerant) {
  switch (e.k()) {
  case expr::kind::constant:
    return {interval::constant(e.value())};
  case expr::kind::variable: {
    const sign s = tolerant ? env.get_or_top(e.var()) : env.get(e.var());
    return s.regions();
  }
  case expr::kind::add:
  case expr::kind::sub:
    return combine_regions(sign_regions(e.lhs(), env, tolerant),
                           sign_regions(e.rhs(), env, tolerant),
                           e.k() == expr::kind::add);
  }
  return {interval::top()};
}

interval region_hull(const region_list &rs) {
  interval h = interval::bottom();
  for (const interval &r : rs)
    h = h.join(r);
  return h;
}

bool regions_disjoint(const region_list &a, const region_list &b) {
  for (const interval &x : a)
    for (const interval &y : b)
      if (!x.meet(y).is_bottom())
        return false;
  return true;
}

} // namespace

sign sign_eval(const expr &e, const var_env<sign> &env) {
  if (env.is_bottom())
    return sign::bottom();
  sign out = sign::bottom();
  for (const interval &r : sign_regions(e, env, /*tolerant=*/false))
    out = out.join(sign::from_interval(r));
  return out;
}

var_env<sign> sign_assume(const cond &c, const var_env<sign> &env) {
  if (env.is_bottom())
    return env;
  switch (c.k()) {
  case cond::kind::truth:
    return c.truth_value() ? env : var_env<sign>::bottom();
  case cond::kind::bool_var:
    return env;
  case cond::kind::relation:
    break;
  }

  var_env<sign> out = env;
  auto refine = [&](const std::string &x, std::int64_t k, cond::rel_op op,
                    const region_list &other) {
    if (out.is_bottom())
      return;
    const interval h = region_hull(other).sub(interval::constant(k));
    if (h.is_bottom()) {
      out = var_env<sign>::bottom();
      return;
    }
    sign lim = sign::top();
    switch (op) {
    case cond::rel_op::lt:
      if (!h.hi().is_plus_inf())
        lim = sign::from_interval(
            interval::make(ext_int::minus_inf(), h.hi() - ext_int(1)));
      break;
    case cond::rel_op::le:
      lim = sign::from_interval(
          interval::make(ext_int::minus_inf(), h.hi()));
      break;
    case cond::rel_op::gt:
      if (!h.lo().is_minus_inf())
        lim = sign::from_interval(
            interval::make(h.lo() + ext_int(1), ext_int::plus_inf()));
      break;
    case cond::rel_op::ge:
      lim = sign::from_interval(
          interval::make(h.lo(), ext_int::plus_inf()));
      break;
    case cond::rel_op::eq:
      lim = sign::from_interval(h);
      break;
    case cond::rel_op::ne:
      if (h == interval::constant(0))
        lim = sign::nonzero();
      break;
    }
    out = out.with(x, out.get_or_top(x).meet(lim));
  };

  if (auto lv = decompose_var_offset(c.lhs()))
    refine(lv->first, lv->second, c.op(), sign_regions(c.rhs(), out, true));
  if (auto rv = decompose_var_offset(c.rhs()))
    refine(rv->first, rv->second, flip_op(c.op()),
           sign_regions(c.lhs(), out, true));
  return out;
}

bool sign_entails(const cond &c, const var_env<sign> &env) {
  if (env.is_bottom())
    return true;
  switch (c.k()) {
  case cond::kind::truth:
    return c.truth_value();
  case cond::kind::bool_var:
    return false;
  case cond::kind::relation:
    break;
  }
  const region_list a = sign_regions(c.lhs(), env, true);
  const region_list b = sign_regions(c.rhs(), env, true);
  if (a.empty() || b.empty())
    return true;
  const interval ha = region_hull(a), hb = region_hull(b);
  switch (c.op()) {
  case cond::rel_op::lt:
    return ha.hi() < hb.lo();
  case cond::rel_op::le:
    return ha.hi() <= hb.lo();
  case cond::rel_op::gt:
    return hb.hi() < ha.lo();
  case cond::rel_op::ge:
    return hb.hi() <= ha.lo();
  case cond::rel_op::eq:
    return ha.is_singleton() && ha == hb;
  case cond::rel_op::ne:
    return regions_disjoint(a, b);
  }
  return false;
}

// -------------------------------------------------------------- congruence

congruence congruence_eval(const expr &e, const var_env<congruence> &env) {
  if (env.is_bottom())
    return congruence::bottom();
  switch (e.k()) {
  case expr::kind::constant:
    return congruence::of(e.value());
  case expr::kind::variable:
    return env.get(e.var());
  case expr::kind::add:
  case expr::kind::sub: {
    const congruence l = congruence_eval(e.lhs(), env);
    const congruence r = congruence_eval(e.rhs(), env);
    if (e.k() == expr::kind::sub && e.lhs().same(e.rhs()) &&
        !l.is_bottom())
      return congruence::of(0);
    return e.k() == expr::kind::add ? l.add(r) : l.sub(r);
  }
  }
  return congruence::top();
}

namespace {

congruence ceval_top(const expr &e, const var_env<congruence> &env) {
  switch (e.k()) {
  case expr::kind::constant:
    return congruence::of(e.value());
  case expr::kind::variable:
    return env.get_or_top(e.var());
  case expr::kind::add:
  case expr::kind::sub: {
    const congruence l = ceval_top(e.lhs(), env);
    const congruence r = ceval_top(e.rhs(), env);
    if (e.k() == expr::kind::sub && e.lhs().same(e.rhs()) && !l.is_bottom())
      return congruence::of(0);
    return e.k() == expr::kind::add ? l.add(r) : l.sub(r);
  }
  }
  return congruence::top();
}

} // namespace

var_env<congruence> congruence_assume(const cond &c,
                                      const var_env<congruence> &env) {
  if (env.is_bottom())
    return env;
  switch (c.k()) {
  case cond::kind::truth:
    return c.truth_value() ? env : var_env<congruence>::bottom();
  case cond::kind::bool_var:
    return env;
  case cond::kind::relation:
    break;
  }
  if (c.op() != cond::rel_op::eq)
    return env;
  var_env<congruence> out = env;
  if (auto lv = decompose_var_offset(c.lhs())) {
    const congruence m =
        ceval_top(c.rhs(), out).sub(congruence::of(lv->second));
    out = out.with(lv->first, out.get_or_top(lv->first).meet(m));
  }
  if (out.is_bottom())
    return out;
  if (auto rv = decompose_var_offset(c.rhs())) {
    const congruence m =
        ceval_top(c.lhs(), out).sub(congruence::of(rv->second));
    out = out.with(rv->first, out.get_or_top(rv->first).meet(m));
  }
  return out;
}

// ------------------------------------------------------------------- bools

bool_abs bool_eval_cond(const cond &c, const numeric_view &nv) {
  const bool bot = (nv.intervals && nv.intervals->is_bottom()) ||
                   (nv.signs && nv.signs->is_bottom());
  if (bot)
    return bool_abs::bottom();
  if (c.k() == cond::kind::truth)
    return bool_abs::of(c.truth_value());

  auto entails = [&](const cond &q) {
    if (nv.intervals && interval_entails(q, *nv.intervals))
      return true;
    if (nv.signs && sign_entails(q, *nv.signs))
      return true;
    return false;
  };
  if (entails(c))
    return bool_abs::tt();
  if (entails(c.negate()))
    return bool_abs::ff();
  return bool_abs::top();
}

} // namespace prodint
