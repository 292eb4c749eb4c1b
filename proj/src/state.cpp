#include "prodint/state.hpp"

#include <sstream>

#include "prodint/counters.hpp"
#include "prodint/product.hpp"
#include "prodint/reductions.hpp"

namespace prodint {

abstract_state abstract_state::top_for(const run_config &cfg) {
  abstract_state s;
  if (cfg.has(num_domain_kind::interval))
    s.ivals.emplace();
  if (cfg.has(num_domain_kind::parity))
    s.pars.emplace();
  if (cfg.has(num_domain_kind::sign))
    s.sgns.emplace();
  if (cfg.has(num_domain_kind::congruence))
    s.cngs.emplace();
  if (cfg.has(num_domain_kind::boolean))
    s.bools.emplace();
  if (cfg.use_diff)
    s.rel.emplace(diff_store::top());
  if (cfg.array_power != array_power_mode::off)
    s.cells.emplace();
  return s;
}

abstract_state abstract_state::bottom_like(const abstract_state &proto) {
  abstract_state s = proto;
  s.bot = true;
  return s;
}

void abstract_state::normalize() {
  if (bot)
    return;
  if ((ivals && ivals->is_bottom()) || (pars && pars->is_bottom()) ||
      (sgns && sgns->is_bottom()) || (cngs && cngs->is_bottom()) ||
      (bools && bools->is_bottom()) || (rel && rel->is_bottom()))
    bot = true;
}

namespace {

template <class T>
bool opt_leq(const std::optional<T> &a, const std::optional<T> &b) {
  if (!a != !b)
    throw analysis_error("state component mismatch");
  return !a || a->leq(*b);
}

bool cells_leq(const std::optional<std::map<std::string, array_cells>> &a,
               const std::optional<std::map<std::string, array_cells>> &b) {
  if (!a != !b)
    throw analysis_error("state component mismatch");
  if (!a)
    return true;
  // Arrays missing on the other side are unconstrained there.
  for (auto &[name, cell] : *a) {
    auto it = b->find(name);
    if (it != b->end() && !cell.leq(it->second))
      return false;
  }
  return true;
}

std::optional<std::map<std::string, array_cells>>
cells_merge(const std::optional<std::map<std::string, array_cells>> &a,
            const std::optional<std::map<std::string, array_cells>> &b,
            bool widen) {
  if (!a != !b)
    throw analysis_error("state component mismatch");
  if (!a)
    return std::nullopt;
  std::map<std::string, array_cells> out;
  for (auto &[name, cell] : *a) {
    auto it = b->find(name);
    if (it == b->end())
      out.emplace(name, cell);
    else
      out.emplace(name, widen ? cell.widen(it->second) : cell.join(it->second));
  }
  for (auto &[name, cell] : *b)
    if (!a->count(name))
      out.emplace(name, cell);
  return out;
}

} // namespace

bool abstract_state::leq(const abstract_state &o) const {
  if (bot)
    return true;
  if (o.bot)
    return false;
  return opt_leq(ivals, o.ivals) && opt_leq(pars, o.pars) &&
         opt_leq(sgns, o.sgns) && opt_leq(cngs, o.cngs) &&
         opt_leq(bools, o.bools) && opt_leq(rel, o.rel) &&
         cells_leq(cells, o.cells);
}

abstract_state abstract_state::join(const abstract_state &o) const {
  if (bot)
    return o;
  if (o.bot)
    return *this;
  abstract_state s = *this;
  if (ivals)
    s.ivals = ivals->join(*o.ivals);
  if (pars)
    s.pars = pars->join(*o.pars);
  if (sgns)
    s.sgns = sgns->join(*o.sgns);
  if (cngs)
    s.cngs = cngs->join(*o.cngs);
  if (bools)
    s.bools = bools->join(*o.bools);
  if (rel)
    s.rel = rel->join(*o.rel);
  if (cells)
    s.cells = cells_merge(cells, o.cells, /*widen=*/false);
  s.normalize();
  return s;
}

abstract_state abstract_state::widen(const abstract_state &o) const {
  if (bot)
    return o;
  if (o.bot)
    return *this;
  abstract_state s = *this;
  if (ivals)
    s.ivals = ivals->widen(*o.ivals);
  if (pars)
    s.pars = pars->widen(*o.pars);
  if (sgns)
    s.sgns = sgns->widen(*o.sgns);
  if (cngs)
    s.cngs = cngs->widen(*o.cngs);
  if (bools)
    s.bools = bools->widen(*o.bools);
  if (rel)
    s.rel = rel->widen(*o.rel);
  if (cells)
    s.cells = cells_merge(cells, o.cells, /*widen=*/true);
  s.normalize();
  return s;
}

bool operator==(const abstract_state &a, const abstract_state &b) {
  if (a.bot || b.bot)
    return a.bot == b.bot;
  return a.ivals == b.ivals && a.pars == b.pars && a.sgns == b.sgns &&
         a.cngs == b.cngs && a.bools == b.bools && a.rel == b.rel &&
         a.cells == b.cells;
}

std::string abstract_state::str() const {
  if (bot)
    return "bot";
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() {
    if (!first)
      os << " ";
    first = false;
  };
  if (ivals) {
    sep();
    os << "intervals=" << ivals->str();
  }
  if (pars) {
    sep();
    os << "parity=" << pars->str();
  }
  if (sgns) {
    sep();
    os << "sign=" << sgns->str();
  }
  if (cngs) {
    sep();
    os << "congruence=" << cngs->str();
  }
  if (bools) {
    sep();
    os << "bool=" << bools->str();
  }
  if (rel) {
    sep();
    os << "rel=" << rel->str();
  }
  if (cells) {
    sep();
    os << "arrays={";
    bool f2 = true;
    for (auto &[name, cell] : *cells) {
      if (!f2)
        os << ", ";
      f2 = false;
      os << name << ": " << cell.str();
    }
    os << "}";
  }
  if (first)
    os << "top";
  return os.str();
}

// ------------------------------------------------------------- semantics

namespace {

numeric_view view_of(const abstract_state &s) {
  numeric_view nv;
  if (s.ivals)
    nv.intervals = &*s.ivals;
  if (s.sgns)
    nv.signs = &*s.sgns;
  return nv;
}

// Evaluate a condition to an abstract Boolean against the full state.
bool_abs eval_cond_in_state(const cond &c, const abstract_state &s) {
  if (s.bot)
    return bool_abs::bottom();
  if (c.k() == cond::kind::bool_var) {
    bool_abs v = s.bools ? s.bools->get_or_top(c.var()) : bool_abs::top();
    return c.negated() ? v.negate() : v;
  }
  bool_abs v = bool_eval_cond(c, view_of(s));
  if (v.is_top() && s.rel) {
    if (s.rel->entails(c))
      return bool_abs::tt();
    if (s.rel->entails(c.negate()))
      return bool_abs::ff();
  }
  return v;
}

// Scalar assignment across every configured component.
void assign_scalar(abstract_state &out, const std::string &target,
                   const expr &e, const abstract_state &in) {
  if (out.ivals) {
    count_op("interval", "transfer");
    out.ivals = out.ivals->with(target, interval_eval(e, *in.ivals));
  }
  if (out.pars) {
    count_op("parity", "transfer");
    out.pars = out.pars->with(target, parity_eval(e, *in.pars));
  }
  if (out.sgns) {
    count_op("sign", "transfer");
    out.sgns = out.sgns->with(target, sign_eval(e, *in.sgns));
  }
  if (out.cngs) {
    count_op("congruence", "transfer");
    out.cngs = out.cngs->with(target, congruence_eval(e, *in.cngs));
  }
  if (out.bools) {
    count_op("bool", "transfer");
    out.bools = out.bools->without(target); // now numeric
  }
  if (out.rel) {
    count_op("diff", "transfer");
    out.rel = out.rel->assign(target, e);
  }
}

} // namespace

abstract_state transfer(const stmt &s, const abstract_state &in,
                        const run_config &cfg) {
  if (in.bot)
    return in;
  abstract_state out = in;
  switch (s.k) {
  case stmt::kind::assign:
    assign_scalar(out, s.target, s.e0(), in);
    break;

  case stmt::kind::bool_assign: {
    const bool_abs v = eval_cond_in_state(s.c0(), in);
    if (out.bools) {
      count_op("bool", "transfer");
      out.bools = out.bools->with(s.target, v);
    }
    // The target is a Boolean; stale numeric facts about it die.
    if (out.ivals)
      out.ivals = out.ivals->without(s.target);
    if (out.pars)
      out.pars = out.pars->without(s.target);
    if (out.sgns)
      out.sgns = out.sgns->without(s.target);
    if (out.cngs)
      out.cngs = out.cngs->without(s.target);
    if (out.rel) {
      count_op("diff", "transfer");
      out.rel = out.rel->assign(s.target, s.e0()); // kill only
    }
    break;
  }

  case stmt::kind::array_alloc: {
    assign_scalar(out, length_var(s.target), s.e0(), in);
    if (out.cells) {
      static const std::vector<parity> kAtoms = {parity::odd(),
                                                 parity::even()};
      out.cells->insert_or_assign(s.target, array_cells::bottom_of(kAtoms));
    }
    break;
  }

  case stmt::kind::array_store: {
    if (out.cells) {
      auto it = out.cells->find(s.target);
      if (it == out.cells->end())
        throw analysis_error("store into unallocated array " + s.target);
      // Select cells by the parity of the stored value or of the index.
      const expr &selector =
          cfg.array_power == array_power_mode::value_parity ? s.e1() : s.e0();
      const parity sel = parity_eval(selector, *in.pars);
      const interval val = interval_eval(s.e1(), *in.ivals);
      array_cells cell = it->second;
      for (std::size_t i = 0; i < cell.atoms().size(); ++i) {
        count_op("power-cell", "transfer");
        if (!cell.atoms()[i].meet(sel).is_bottom())
          cell = cell.with_entry(i, cell.entry(i).join(val));
      }
      out.cells->insert_or_assign(s.target, std::move(cell));
    }
    break;
  }

  case stmt::kind::assert_check:
    break; // checked as an obligation, no state effect

  case stmt::kind::if_else:
  case stmt::kind::while_loop:
  case stmt::kind::for_loop:
    throw analysis_error("transfer: non-atomic statement reached the engine");
  }
  out.normalize();
  return out;
}

abstract_state assume_state(const cond &c, const abstract_state &in,
                            const run_config &cfg) {
  (void)cfg;
  if (in.bot)
    return in;
  abstract_state out = in;
  if (out.ivals) {
    count_op("interval", "assume");
    out.ivals = interval_assume(c, *out.ivals);
  }
  if (out.pars) {
    count_op("parity", "assume");
    out.pars = parity_assume(c, *out.pars);
  }
  if (out.sgns) {
    count_op("sign", "assume");
    out.sgns = sign_assume(c, *out.sgns);
  }
  if (out.cngs) {
    count_op("congruence", "assume");
    out.cngs = congruence_assume(c, *out.cngs);
  }
  if (out.bools) {
    count_op("bool", "assume");
    if (c.k() == cond::kind::bool_var) {
      const bool_abs want = c.negated() ? bool_abs::ff() : bool_abs::tt();
      out.bools =
          out.bools->with(c.var(), out.bools->get_or_top(c.var()).meet(want));
    } else if (c.k() == cond::kind::truth && !c.truth_value()) {
      out.bools = var_env<bool_abs>::bottom();
    }
  }
  if (out.rel) {
    count_op("diff", "assume");
    out.rel = out.rel->assume(c);
  }
  out.normalize();
  return out;
}

abstract_state reduce_state(const abstract_state &in, const run_config &cfg) {
  if (in.bot || cfg.reductions.empty())
    return in;
  const bool iterate = cfg.product == product_kind::granger;
  abstract_state cur = in;
  const int cap = iterate ? 100 : 1;
  for (int round = 0; round < cap; ++round) {
    abstract_state next = cur;
    for (reduction_kind r : cfg.reductions) {
      if (next.bot)
        break;
      switch (r) {
      case reduction_kind::interval_parity: {
        count_op("reduce", "interval-parity");
        static const auto rule = rho_interval_parity();
        std::vector<std::string> vars;
        for (auto &[v, iv] : next.ivals->entries())
          if (next.pars->binds(v))
            vars.push_back(v);
        for (const std::string &v : vars) {
          const auto red = reduce_fixpoint(
              rule,
              product<interval, parity>(next.ivals->get(v), next.pars->get(v)));
          next.ivals = next.ivals->with(v, red.left());
          next.pars = next.pars->with(v, red.right());
          if (next.ivals->is_bottom() || next.pars->is_bottom())
            break;
        }
        break;
      }
      case reduction_kind::interval_congruence: {
        count_op("reduce", "interval-congruence");
        static const auto rule = rho_interval_congruence();
        std::vector<std::string> vars;
        for (auto &[v, iv] : next.ivals->entries())
          if (next.cngs->binds(v))
            vars.push_back(v);
        for (const std::string &v : vars) {
          const auto red = reduce_fixpoint(
              rule, product<interval, congruence>(next.ivals->get(v),
                                                  next.cngs->get(v)));
          next.ivals = next.ivals->with(v, red.left());
          next.cngs = next.cngs->with(v, red.right());
          if (next.ivals->is_bottom() || next.cngs->is_bottom())
            break;
        }
        break;
      }
      case reduction_kind::intervals_to_diff:
        count_op("reduce", "intervals-to-diff");
        next.rel = rho_intervals_to_diff(*next.ivals, *next.rel);
        if (cfg.diff_backflow)
          next.ivals = rho_diff_to_intervals(*next.rel, *next.ivals);
        break;
      }
      next.normalize();
    }
    if (next == cur)
      break;
    cur = std::move(next);
    if (cur.bot)
      break;
  }
  return cur;
}

bool state_entails(const abstract_state &s, const cond &c) {
  if (s.bot)
    return true;
  if (c.k() == cond::kind::truth)
    return c.truth_value();
  if (c.k() == cond::kind::bool_var) {
    if (!s.bools)
      return false;
    const bool_abs v = s.bools->get_or_top(c.var());
    return c.negated() ? v == bool_abs::ff() : v == bool_abs::tt();
  }
  if (s.ivals && interval_entails(c, *s.ivals))
    return true;
  if (s.sgns && sign_entails(c, *s.sgns))
    return true;
  if (s.rel && s.rel->entails(c))
    return true;
  return false;
}

} // namespace prodint
