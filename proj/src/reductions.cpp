#include "prodint/reductions.hpp"

namespace prodint {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

} // namespace

reduction_rule<interval, parity> rho_interval_parity() {
  reduction_rule<interval, parity> r;
  r.rho1 = [](const interval &iv, const parity &p) -> interval {
    if (p.is_bottom())
      return interval::bottom();
    if (iv.is_bottom() || p.is_top())
      return iv;
    ext_int lo = iv.lo(), hi = iv.hi();
    if (lo.is_finite() && !p.contains(lo.value()))
      lo = lo + ext_int(1);
    if (hi.is_finite() && !p.contains(hi.value()))
      hi = hi - ext_int(1);
    return interval::make(lo, hi);
  };
  r.rho2 = [](const interval &iv, const parity &p) -> parity {
    if (iv.is_bottom())
      return parity::bottom();
    if (auto v = iv.singleton())
      return p.meet(parity::of(*v));
    return p;
  };
  return r;
}

reduction_rule<interval, congruence> rho_interval_congruence() {
  reduction_rule<interval, congruence> r;
  r.rho1 = [](const interval &iv, const congruence &c) -> interval {
    if (c.is_bottom())
      return interval::bottom();
    if (iv.is_bottom() || c.is_top())
      return iv;
    if (c.mod() == 0) // gamma = {0}
      return iv.meet(interval::constant(0));
    const std::int64_t m = static_cast<std::int64_t>(c.mod());
    ext_int lo = iv.lo(), hi = iv.hi();
    if (lo.is_finite())
      lo = ext_int(ceil_div(lo.value(), m) * m);
    if (hi.is_finite())
      hi = ext_int(floor_div(hi.value(), m) * m);
    return interval::make(lo, hi);
  };
  r.rho2 = [](const interval &iv, const congruence &c) -> congruence {
    if (iv.is_bottom())
      return congruence::bottom();
    if (auto v = iv.singleton())
      return c.meet(congruence::of(*v));
    return c;
  };
  return r;
}

diff_store rho_intervals_to_diff(const var_env<interval> &ienv,
                                 const diff_store &s) {
  if (s.is_bottom() || ienv.is_bottom())
    return diff_store::bottom();
  std::vector<diff_store::constraint> cs;
  for (auto &[x, ix] : ienv.entries()) {
    if (!ix.hi().is_finite())
      continue;
    for (auto &[y, iy] : ienv.entries()) {
      if (x == y || !iy.lo().is_finite())
        continue;
      cs.push_back({x, y, ix.hi().value() - iy.lo().value() + 1});
    }
  }
  if (cs.empty())
    return s;
  diff_store out = s;
  for (auto &[p, c] : s.constraints())
    cs.push_back({p.first, p.second, c});
  return diff_store::from_constraints(cs);
}

var_env<interval> rho_diff_to_intervals(const diff_store &s,
                                        const var_env<interval> &ienv) {
  if (s.is_bottom() || ienv.is_bottom())
    return var_env<interval>::bottom();
  var_env<interval> out = ienv;
  for (auto &[p, c] : s.constraints()) {
    // x < y + c: x <= hi(y) + c - 1 and y >= lo(x) - c + 1.
    if (out.is_bottom())
      break;
    const interval ix = out.get_or_top(p.first);
    const interval iy = out.get_or_top(p.second);
    if (iy.hi().is_finite())
      out = out.with(p.first,
                     ix.meet(interval::at_most(iy.hi().value() + c - 1)));
    if (out.is_bottom())
      break;
    const interval ix2 = out.get_or_top(p.first);
    if (ix2.lo().is_finite())
      out = out.with(p.second,
                     iy.meet(interval::at_least(ix2.lo().value() - c + 1)));
  }
  return out;
}

} // namespace prodint
