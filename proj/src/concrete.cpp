#include "prodint/concrete.hpp"

#include <functional>
#include <sstream>

namespace prodint {

namespace {

std::int64_t eval_expr(const expr &e, const concrete_store &st) {
  switch (e.k()) {
  case expr::kind::constant:
    return e.value();
  case expr::kind::variable: {
    auto it = st.scalars.find(e.var());
    if (it == st.scalars.end())
      throw analysis_error("concrete read of undefined variable " + e.var());
    return it->second;
  }
  case expr::kind::add:
    return eval_expr(e.lhs(), st) + eval_expr(e.rhs(), st);
  case expr::kind::sub:
    return eval_expr(e.lhs(), st) - eval_expr(e.rhs(), st);
  }
  return 0;
}

bool eval_cond(const cond &c, const concrete_store &st) {
  switch (c.k()) {
  case cond::kind::truth:
    return c.truth_value();
  case cond::kind::bool_var: {
    auto it = st.scalars.find(c.var());
    if (it == st.scalars.end())
      throw analysis_error("concrete read of undefined variable " + c.var());
    const bool v = it->second != 0;
    return c.negated() ? !v : v;
  }
  case cond::kind::relation:
    break;
  }
  const std::int64_t a = eval_expr(c.lhs(), st);
  const std::int64_t b = eval_expr(c.rhs(), st);
  switch (c.op()) {
  case cond::rel_op::lt:
    return a < b;
  case cond::rel_op::le:
    return a <= b;
  case cond::rel_op::gt:
    return a > b;
  case cond::rel_op::ge:
    return a >= b;
  case cond::rel_op::eq:
    return a == b;
  case cond::rel_op::ne:
    return a != b;
  }
  return false;
}

struct interp {
  const cfg &g;
  std::int64_t step_bound;
  collect_result &out;

  // Executes one input valuation to completion (or the step bound).
  void run(concrete_store st) {
    ++out.runs;
    int node = g.entry;
    std::int64_t steps = 0;
    while (true) {
      out.per_node[static_cast<std::size_t>(node)].insert(st);
      if (node == g.exit)
        return;
      if (++steps > step_bound) {
        out.partial = true;
        return;
      }
      ++out.steps;

      const auto &outs = g.out_edges[static_cast<std::size_t>(node)];
      int next = -1;
      for (int ei : outs) {
        const cfg_edge &e = g.edges[static_cast<std::size_t>(ei)];
        if (e.k == cfg_edge::kind::statement) {
          exec(*e.st, st);
          next = e.to;
          break;
        }
        if (eval_cond(*e.g, st)) {
          next = e.to;
          break;
        }
      }
      if (next < 0)
        throw analysis_error("concrete execution stuck at node " +
                             std::to_string(node));
      node = next;
    }
  }

  void exec(const stmt &s, concrete_store &st) {
    switch (s.k) {
    case stmt::kind::assign:
      st.scalars[s.target] = eval_expr(s.e0(), st);
      break;
    case stmt::kind::bool_assign:
      st.scalars[s.target] = eval_cond(s.c0(), st) ? 1 : 0;
      break;
    case stmt::kind::array_alloc: {
      const std::int64_t len = eval_expr(s.e0(), st);
      st.scalars[length_var(s.target)] = len;
      st.arrays[s.target] = concrete_array{len, {}};
      break;
    }
    case stmt::kind::array_store: {
      const std::int64_t idx = eval_expr(s.e0(), st);
      const std::int64_t val = eval_expr(s.e1(), st);
      auto it = st.arrays.find(s.target);
      if (it == st.arrays.end())
        throw analysis_error("concrete store into unallocated array " +
                             s.target);
      if (idx < 0 || idx >= it->second.length) {
        std::ostringstream os;
        os << "out-of-bounds store " << s.target << "[" << idx << "] at line "
           << s.pos.line;
        out.runtime_errors.push_back(os.str());
      } else {
        it->second.written[idx] = val;
      }
      break;
    }
    case stmt::kind::assert_check:
      break;
    default:
      throw analysis_error("concrete exec: non-atomic statement");
    }
  }
};

} // namespace

collect_result collect_concrete(const program &p, const cfg &g,
                                std::int64_t step_bound) {
  collect_result out;
  out.per_node.assign(static_cast<std::size_t>(g.num_nodes), {});
  interp in{g, step_bound, out};

  // Enumerate the full input space, depth first.
  std::function<void(std::size_t, concrete_store &)> enumerate =
      [&](std::size_t i, concrete_store &st) {
        if (i == p.decls.size()) {
          in.run(st);
          return;
        }
        const input_decl &d = p.decls[i];
        for (std::int64_t v = d.lo; v <= d.hi; ++v) {
          st.scalars[d.name] = v;
          enumerate(i + 1, st);
        }
        st.scalars.erase(d.name);
      };
  concrete_store st;
  enumerate(0, st);
  return out;
}

// ------------------------------------------------------------- soundness

namespace {

bool value_in(const std::int64_t v, const interval &iv) {
  return iv.contains(v);
}

// Membership of a concrete store in the concretization of a composite
// state. Variables the store has not defined yet are unconstrained.
bool store_in_state(const concrete_store &st, const abstract_state &s,
                    const run_config &cfg) {
  if (s.is_bottom())
    return false;
  auto check_env = [&](const auto &env_opt) {
    if (!env_opt)
      return true;
    for (auto &[v, val] : env_opt->entries()) {
      auto it = st.scalars.find(v);
      if (it == st.scalars.end())
        continue;
      if (!val.contains(it->second))
        return false;
    }
    return true;
  };
  if (!check_env(s.ivals) || !check_env(s.pars) || !check_env(s.sgns) ||
      !check_env(s.cngs) || !check_env(s.bools))
    return false;
  if (s.rel && !s.rel->admits(st.scalars))
    return false;
  if (s.cells) {
    for (auto &[name, cell] : *s.cells) {
      auto it = st.arrays.find(name);
      if (it == st.arrays.end())
        continue;
      for (auto &[idx, val] : it->second.written) {
        // The written cell is constrained by the atom its key (value or
        // index parity) falls into; atoms are disjoint, so at most one.
        const std::int64_t key =
            cfg.array_power == array_power_mode::value_parity ? val : idx;
        bool admitted = false;
        for (std::size_t i = 0; i < cell.atoms().size(); ++i)
          if (cell.atoms()[i].contains(key) && value_in(val, cell.entry(i)))
            admitted = true;
        if (!admitted)
          return false;
      }
    }
  }
  return true;
}

bool pivot_matches_atom(const concrete_store &st, const std::string &pivot,
                        const exp_atom &atom, bool &pivot_defined) {
  auto it = st.scalars.find(pivot);
  if (it == st.scalars.end()) {
    pivot_defined = false;
    return true;
  }
  pivot_defined = true;
  return std::visit([&](const auto &a) { return a.contains(it->second); },
                    atom);
}

} // namespace

soundness_report check_soundness(const analysis_result &r,
                                 const collect_result &c, const cfg &g,
                                 const run_config &cfg) {
  soundness_report rep;
  for (int node = 0; node < g.num_nodes; ++node) {
    const std::size_t n = static_cast<std::size_t>(node);
    for (const concrete_store &st : c.per_node[n]) {
      ++rep.checks;
      if (!r.reached[n]) {
        rep.violations.push_back("node " + std::to_string(node) +
                                 ": concrete store reaches an abstractly "
                                 "unreachable point");
        continue;
      }
      if (r.power_mode) {
        // A store with a defined pivot must satisfy the unique atom that
        // covers the pivot's value; before the pivot is defined, any atom
        // will do (all atoms carry the unrestricted state then).
        const power_state &ps = r.power_states[n];
        const auto pv = st.scalars.find(cfg.power_pivot);
        bool ok = false;
        bool covered = false;
        for (std::size_t i = 0; i < ps.atoms.size(); ++i) {
          bool pivot_defined = false;
          if (!pivot_matches_atom(st, cfg.power_pivot, ps.atoms[i],
                                  pivot_defined))
            continue;
          covered = true;
          if (store_in_state(st, ps.table[i], cfg))
            ok = true;
        }
        if (pv != st.scalars.end() && !covered)
          rep.violations.push_back(
              "node " + std::to_string(node) +
              ": pivot value not covered by any exponent atom");
        else if (!ok)
          rep.violations.push_back("node " + std::to_string(node) +
                                   ": store escapes the power state");
      } else {
        if (!store_in_state(st, r.states[n], cfg))
          rep.violations.push_back("node " + std::to_string(node) +
                                   ": store escapes the abstract state");
      }
    }
  }

  for (const obligation_verdict &o : r.obligations) {
    if (!o.proved)
      continue;
    const std::size_t n = static_cast<std::size_t>(o.site.node);
    for (const concrete_store &st : c.per_node[n]) {
      ++rep.checks;
      if (!eval_cond(o.site.c, st)) {
        std::ostringstream os;
        os << "obligation at line " << o.site.pos.line << " ("
           << o.site.kind_str() << ") marked PROVED but fails concretely";
        rep.violations.push_back(os.str());
      }
    }
  }
  return rep;
}

} // namespace prodint
