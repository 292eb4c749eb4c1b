#include "prodint/analyzer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace prodint {

// ------------------------------------------------------------ power_state

namespace {

void require_same_atoms(const power_state &a, const power_state &b) {
  if (!(a.atoms == b.atoms))
    throw analysis_error("power states with different atom lists");
}

} // namespace

bool power_state::leq(const power_state &o) const {
  require_same_atoms(*this, o);
  for (std::size_t i = 0; i < table.size(); ++i) {
    count_op("power-base", "leq");
    if (!table[i].leq(o.table[i]))
      return false;
  }
  return true;
}

power_state power_state::join(const power_state &o) const {
  require_same_atoms(*this, o);
  power_state out = *this;
  for (std::size_t i = 0; i < table.size(); ++i) {
    count_op("power-base", "join");
    out.table[i] = table[i].join(o.table[i]);
  }
  return out;
}

power_state power_state::widen(const power_state &o) const {
  require_same_atoms(*this, o);
  power_state out = *this;
  for (std::size_t i = 0; i < table.size(); ++i) {
    count_op("power-base", "widen");
    out.table[i] = table[i].widen(o.table[i]);
  }
  return out;
}

std::string power_state::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i)
      os << ", ";
    os << exp_atom_str(atoms[i]) << " => " << table[i].str();
  }
  os << "}";
  return os.str();
}

// -------------------------------------------------------------- semantics

namespace {

// Meets the pivot's value with an exponent atom in whichever environments
// track it; unbound pivots stay unconstrained.
abstract_state constrain_pivot(const std::string &pivot, const exp_atom &atom,
                               const abstract_state &in) {
  if (in.bot)
    return in;
  abstract_state out = in;
  if (const interval *iv = std::get_if<interval>(&atom)) {
    if (out.ivals && out.ivals->binds(pivot))
      out.ivals = out.ivals->with(pivot, out.ivals->get(pivot).meet(*iv));
  } else if (const parity *pv = std::get_if<parity>(&atom)) {
    if (out.pars && out.pars->binds(pivot))
      out.pars = out.pars->with(pivot, out.pars->get(pivot).meet(*pv));
  } else if (const bool_abs *bv = std::get_if<bool_abs>(&atom)) {
    if (out.bools && out.bools->binds(pivot))
      out.bools = out.bools->with(pivot, out.bools->get(pivot).meet(*bv));
  }
  out.normalize();
  return out;
}

bool assigns_var(const stmt &s, const std::string &v) {
  switch (s.k) {
  case stmt::kind::assign:
  case stmt::kind::bool_assign:
    return s.target == v;
  case stmt::kind::array_alloc:
    return length_var(s.target) == v;
  default:
    return false;
  }
}

struct composite_sem {
  const run_config &cfg;

  abstract_state apply_edge(const cfg_edge &e, const abstract_state &s) const {
    if (e.k == cfg_edge::kind::statement)
      return reduce_state(transfer(*e.st, s, cfg), cfg);
    return reduce_state(assume_state(*e.g, s, cfg), cfg);
  }
  bool leq(const abstract_state &a, const abstract_state &b) const {
    return a.leq(b);
  }
  abstract_state join(const abstract_state &a, const abstract_state &b) const {
    return reduce_state(a.join(b), cfg);
  }
  abstract_state widen(const abstract_state &a,
                       const abstract_state &b) const {
    return a.widen(b); // stored un-reduced
  }
  bool is_bottom(const abstract_state &s) const { return s.is_bottom(); }
};

struct power_sem {
  const run_config &cfg;
  std::string pivot;

  abstract_state base_edge(const cfg_edge &e, const abstract_state &s) const {
    if (e.k == cfg_edge::kind::statement)
      return reduce_state(transfer(*e.st, s, cfg), cfg);
    return reduce_state(assume_state(*e.g, s, cfg), cfg);
  }

  power_state apply_edge(const cfg_edge &e, const power_state &ps) const {
    power_state out = ps;
    out.defined = true;

    if (e.k == cfg_edge::kind::statement && assigns_var(*e.st, pivot)) {
      // Redistribution: run the statement per atom, then re-dispatch every
      // post-state onto the atom list via pivot-in-atom assumption.
      std::vector<abstract_state> post;
      post.reserve(ps.table.size());
      for (const abstract_state &s : ps.table) {
        count_op("power-base", "transfer");
        post.push_back(reduce_state(transfer(*e.st, s, cfg), cfg));
      }
      const bool is_bool_def = e.st->k == stmt::kind::bool_assign;
      for (std::size_t j = 0; j < ps.atoms.size(); ++j) {
        abstract_state acc = abstract_state::bottom_like(ps.table[j]);
        for (const abstract_state &s : post) {
          if (s.is_bottom())
            continue;
          abstract_state routed;
          if (is_bool_def) {
            // b := (c): the tt atom keeps states where c holds, the ff
            // atom those where it cannot.
            const bool_abs *atom = std::get_if<bool_abs>(&ps.atoms[j]);
            if (!atom)
              throw analysis_error("bool pivot with non-bool atoms");
            const cond &c = e.st->c0();
            routed = assume_state(*atom == bool_abs::tt() ? c : c.negate(), s,
                                  cfg);
            if (routed.bools)
              routed.bools = routed.bools->with(pivot, *atom);
          } else {
            routed = constrain_pivot(pivot, ps.atoms[j], s);
          }
          acc = acc.join(reduce_state(routed, cfg));
        }
        out.table[j] = acc;
      }
      return out;
    }

    // Guards over the pivot as a Boolean variable dispatch on the atom.
    const cond *guard = e.k == cfg_edge::kind::guard ? &*e.g : nullptr;
    for (std::size_t j = 0; j < ps.atoms.size(); ++j) {
      count_op("power-base",
               e.k == cfg_edge::kind::statement ? "transfer" : "assume");
      if (guard && guard->k() == cond::kind::bool_var &&
          guard->var() == pivot) {
        if (const bool_abs *atom = std::get_if<bool_abs>(&ps.atoms[j])) {
          const bool want_true = !guard->negated();
          const bool atom_true = *atom == bool_abs::tt();
          if (want_true != atom_true) {
            out.table[j] = abstract_state::bottom_like(ps.table[j]);
            continue;
          }
        }
      }
      out.table[j] = base_edge(e, ps.table[j]);
    }
    return out;
  }

  bool leq(const power_state &a, const power_state &b) const {
    return a.leq(b);
  }
  power_state join(const power_state &a, const power_state &b) const {
    power_state j = a.join(b);
    for (abstract_state &s : j.table)
      s = reduce_state(s, cfg);
    return j;
  }
  power_state widen(const power_state &a, const power_state &b) const {
    return a.widen(b); // stored un-reduced
  }
  bool is_bottom(const power_state &s) const { return s.is_bottom(); }
};

// Deterministic worklist iteration shared by both state shapes.
template <class S, class Sem>
std::uint64_t run_fixpoint(const cfg &g, const run_config &cfg_run,
                           const Sem &sem, const S &init, std::vector<S> &out,
                           std::vector<bool> &defined) {
  const std::vector<int> rpo = g.reverse_post_order();
  std::vector<int> rpo_index(static_cast<std::size_t>(g.num_nodes), 0);
  for (std::size_t i = 0; i < rpo.size(); ++i)
    rpo_index[static_cast<std::size_t>(rpo[i])] = static_cast<int>(i);

  out.assign(static_cast<std::size_t>(g.num_nodes), init);
  defined.assign(static_cast<std::size_t>(g.num_nodes), false);
  std::vector<int> update_count(static_cast<std::size_t>(g.num_nodes), 0);

  std::set<std::pair<int, int>> wl; // (rpo index, node)
  auto push = [&](int n) { wl.insert({rpo_index[static_cast<std::size_t>(n)], n}); };

  out[static_cast<std::size_t>(g.entry)] = init;
  defined[static_cast<std::size_t>(g.entry)] = true;
  update_count[static_cast<std::size_t>(g.entry)] = 1;
  push(g.entry);

  std::uint64_t visits = 0;
  while (!wl.empty()) {
    const int n = wl.begin()->second;
    wl.erase(wl.begin());
    if (++visits > static_cast<std::uint64_t>(cfg_run.visit_cap))
      throw analysis_error("node visit cap exceeded (" +
                           std::to_string(cfg_run.visit_cap) + ")");
    const S cur = out[static_cast<std::size_t>(n)];
    for (int ei : g.out_edges[static_cast<std::size_t>(n)]) {
      const cfg_edge &e = g.edges[static_cast<std::size_t>(ei)];
      const S contrib = sem.apply_edge(e, cur);
      if (sem.is_bottom(contrib))
        continue; // unreachable contribution
      const std::size_t to = static_cast<std::size_t>(e.to);
      if (!defined[to]) {
        out[to] = contrib;
        defined[to] = true;
        update_count[to] = 1;
        push(e.to);
        continue;
      }
      if (sem.leq(contrib, out[to]))
        continue;
      const S cand = sem.join(out[to], contrib);
      const int updates = ++update_count[to];
      if (g.loop_heads.count(e.to) && updates > cfg_run.widening_delay)
        out[to] = sem.widen(out[to], cand);
      else
        out[to] = cand;
      push(e.to);
    }
  }
  return visits;
}

abstract_state initial_state(const program &p, const run_config &cfg) {
  abstract_state s = abstract_state::top_for(cfg);
  // Declared inputs are unconstrained for the analyzer; their ranges only
  // drive the concrete oracle.
  for (const input_decl &d : p.decls) {
    if (s.ivals)
      s.ivals = s.ivals->with(d.name, interval::top());
    if (s.pars)
      s.pars = s.pars->with(d.name, parity::top());
    if (s.sgns)
      s.sgns = s.sgns->with(d.name, sign::top());
    if (s.cngs)
      s.cngs = s.cngs->with(d.name, congruence::top());
  }
  return s;
}

} // namespace

analysis_result analyze(const cfg &g, const program &p,
                        const run_config &cfg) {
  cfg.validate();
  analysis_result r;
  counter_scope scope(r.counters);

  if (cfg.product == product_kind::power) {
    r.power_mode = true;
    power_sem sem{cfg, cfg.power_pivot};
    power_state init;
    init.defined = true;
    init.atoms = cfg.power_atoms;
    const abstract_state base = initial_state(p, cfg);
    for (const exp_atom &a : cfg.power_atoms)
      init.table.push_back(
          reduce_state(constrain_pivot(cfg.power_pivot, a, base), cfg));
    r.node_visits =
        run_fixpoint(g, cfg, sem, init, r.power_states, r.reached);
  } else {
    composite_sem sem{cfg};
    const abstract_state init = reduce_state(initial_state(p, cfg), cfg);
    r.node_visits = run_fixpoint(g, cfg, sem, init, r.states, r.reached);
  }

  // A node never reached is unreachable: its obligations hold vacuously.
  for (const obligation_site &site : g.obligations) {
    obligation_verdict v;
    v.site = site;
    const std::size_t n = static_cast<std::size_t>(site.node);
    if (!r.reached[n]) {
      v.proved = true;
    } else if (r.power_mode) {
      const power_state &ps = r.power_states[n];
      v.proved = true;
      for (const abstract_state &s : ps.table)
        if (!s.is_bottom() && !state_entails(s, site.c))
          v.proved = false;
    } else {
      v.proved = state_entails(r.states[n], site.c);
    }
    r.obligations.push_back(std::move(v));
  }
  return r;
}

analysis_result analyze_array_power(const cfg &g, const program &p,
                                    array_power_mode mode, run_config cfg) {
  cfg.array_power = mode;
  return analyze(g, p, cfg);
}

std::string analysis_result::state_str(int node) const {
  const std::size_t n = static_cast<std::size_t>(node);
  if (!reached[n])
    return "unreachable";
  return power_mode ? power_states[n].str() : states[n].str();
}

std::vector<std::string> verify_post_fixpoint(const cfg &g,
                                              const analysis_result &r,
                                              const run_config &cfg) {
  std::vector<std::string> bad;
  auto check = [&](auto &states, auto &sem) {
    for (const cfg_edge &e : g.edges) {
      const std::size_t from = static_cast<std::size_t>(e.from);
      const std::size_t to = static_cast<std::size_t>(e.to);
      if (!r.reached[from])
        continue;
      const auto post = sem.apply_edge(e, states[from]);
      if (sem.is_bottom(post))
        continue;
      if (!r.reached[to] || !sem.leq(post, states[to]))
        bad.push_back("edge " + std::to_string(e.from) + " -> " +
                      std::to_string(e.to) + " (" + e.label() +
                      "): post-state not below stored state");
    }
  };
  op_counters scratch;
  counter_scope scope(scratch);
  if (r.power_mode) {
    power_sem sem{cfg, cfg.power_pivot};
    check(r.power_states, sem);
  } else {
    composite_sem sem{cfg};
    check(r.states, sem);
  }
  return bad;
}

} // namespace prodint
