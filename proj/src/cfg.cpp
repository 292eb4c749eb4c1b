#include "prodint/cfg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "prodint/parser.hpp"

namespace prodint {

std::string cfg_edge::label() const {
  if (k == kind::guard)
    return "guard(" + g->str() + ")";
  switch (st->k) {
  case stmt::kind::assign:
    return st->target + " := " + st->e0().str();
  case stmt::kind::bool_assign:
    return st->target + " := (" + st->c0().str() + ")";
  case stmt::kind::array_alloc:
    return st->target + " := new Int[" + st->e0().str() + "]";
  case stmt::kind::array_store:
    return st->target + "[" + st->e0().str() + "] := " + st->e1().str();
  case stmt::kind::assert_check:
    return "assert(" + st->c0().str() + ")";
  default:
    return "?";
  }
}

namespace {

class builder {
public:
  explicit builder(const program &p) : m_prog(p) {}

  cfg run() {
    m_cfg.entry = new_node({});
    int cur = m_cfg.entry;
    cur = build_block(m_prog.body, cur);
    m_cfg.exit = cur;
    m_cfg.out_edges.assign(static_cast<std::size_t>(m_cfg.num_nodes), {});
    for (std::size_t i = 0; i < m_cfg.edges.size(); ++i)
      m_cfg.out_edges[static_cast<std::size_t>(m_cfg.edges[i].from)]
          .push_back(static_cast<int>(i));
    return std::move(m_cfg);
  }

private:
  int new_node(source_pos pos) {
    const int id = m_cfg.num_nodes++;
    m_cfg.node_pos[id] = pos;
    return id;
  }

  void add_stmt_edge(int from, int to, const stmt &s) {
    cfg_edge e;
    e.from = from;
    e.to = to;
    e.k = cfg_edge::kind::statement;
    e.st = s;
    m_cfg.edges.push_back(std::move(e));
  }

  void add_guard_edge(int from, int to, const cond &c) {
    cfg_edge e;
    e.from = from;
    e.to = to;
    e.k = cfg_edge::kind::guard;
    e.g = c;
    m_cfg.edges.push_back(std::move(e));
  }

  int build_block(const block &b, int cur) {
    for (const stmt &s : b)
      cur = build_stmt(s, cur);
    return cur;
  }

  int build_stmt(const stmt &s, int cur) {
    switch (s.k) {
    case stmt::kind::assign:
    case stmt::kind::bool_assign:
    case stmt::kind::array_alloc: {
      const int nxt = new_node(s.pos);
      add_stmt_edge(cur, nxt, s);
      return nxt;
    }
    case stmt::kind::array_store: {
      // index >= 0 and index < length, checked against the incoming state.
      add_obligation(cur, s.pos, obligation_site::kind::lower,
                     cond::relation(cond::rel_op::ge, s.e0(),
                                    expr::constant(0), s.pos));
      add_obligation(cur, s.pos, obligation_site::kind::upper,
                     cond::relation(cond::rel_op::lt, s.e0(),
                                    expr::variable(length_var(s.target)),
                                    s.pos));
      const int nxt = new_node(s.pos);
      add_stmt_edge(cur, nxt, s);
      return nxt;
    }
    case stmt::kind::assert_check: {
      add_obligation(cur, s.pos, obligation_site::kind::assertion, s.c0());
      const int nxt = new_node(s.pos);
      add_stmt_edge(cur, nxt, s);
      return nxt;
    }
    case stmt::kind::if_else: {
      const int then_start = new_node(s.pos);
      add_guard_edge(cur, then_start, s.c0());
      const int then_end = build_block(s.then_block, then_start);
      const int join = new_node(s.pos);
      if (s.else_block.empty()) {
        add_guard_edge(cur, join, s.c0().negate());
      } else {
        const int else_start = new_node(s.pos);
        add_guard_edge(cur, else_start, s.c0().negate());
        const int else_end = build_block(s.else_block, else_start);
        add_skip(else_end, join);
      }
      add_skip(then_end, join);
      return join;
    }
    case stmt::kind::while_loop: {
      // cur is the loop head: guard-true into the body, body loops back,
      // guard-false exits.
      m_cfg.loop_heads.insert(cur);
      m_cfg.node_pos[cur] = s.pos;
      const int body_start = new_node(s.pos);
      add_guard_edge(cur, body_start, s.c0());
      const int body_end = build_block(s.then_block, body_start);
      add_skip(body_end, cur);
      const int after = new_node(s.pos);
      add_guard_edge(cur, after, s.c0().negate());
      return after;
    }
    case stmt::kind::for_loop:
      throw std::logic_error("build_cfg: for-loop not desugared");
    }
    return cur;
  }

  // Structural no-op connection, encoded as a guard on an always-true
  // condition so the engine needs no third edge flavor.
  void add_skip(int from, int to) {
    add_guard_edge(from, to, cond::truth(true));
  }

  void add_obligation(int node, source_pos pos, obligation_site::kind k,
                      cond c) {
    obligation_site o;
    o.node = node;
    o.pos = pos;
    o.k = k;
    o.c = std::move(c);
    m_cfg.obligations.push_back(std::move(o));
  }

  const program &m_prog;
  cfg m_cfg;
};

} // namespace

cfg build_cfg(const program &p) {
  return builder(desugar(p)).run();
}

std::vector<int> cfg::reverse_post_order() const {
  std::vector<int> order;
  std::vector<bool> visited(static_cast<std::size_t>(num_nodes), false);
  std::function<void(int)> dfs = [&](int n) {
    visited[static_cast<std::size_t>(n)] = true;
    for (int ei : out_edges[static_cast<std::size_t>(n)]) {
      const int m = edges[static_cast<std::size_t>(ei)].to;
      if (!visited[static_cast<std::size_t>(m)])
        dfs(m);
    }
    order.push_back(n);
  };
  dfs(entry);
  // Unreachable nodes come last, in index order.
  for (int n = 0; n < num_nodes; ++n)
    if (!visited[static_cast<std::size_t>(n)])
      order.push_back(n);
  std::reverse(order.begin(), order.end());
  return order;
}

std::string cfg::signature() const {
  std::ostringstream os;
  os << "entry=" << entry << " exit=" << exit << " nodes=" << num_nodes
     << "\n";
  os << "heads=";
  for (int h : loop_heads)
    os << h << ",";
  os << "\n";
  for (const cfg_edge &e : edges)
    os << e.from << " -> " << e.to << " : " << e.label() << "\n";
  for (const obligation_site &o : obligations)
    os << "obligation@" << o.node << " " << o.kind_str() << " " << o.c.str()
       << "\n";
  return os.str();
}

} // namespace prodint
