#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace prodint {

struct source_pos {
  int line = 0;
  int col = 0;
};

// Expressions over integers: constants, variables (including the derived
// length variable of an array, spelled "a.length"), and +/-. Value
// semantics with shared immutable nodes.
class expr {
public:
  enum class kind { constant, variable, add, sub };

  static expr constant(std::int64_t v, source_pos p = {});
  static expr variable(std::string name, source_pos p = {});
  static expr add(expr l, expr r, source_pos p = {});
  static expr sub(expr l, expr r, source_pos p = {});

  kind k() const { return m_n->k; }
  std::int64_t value() const { return m_n->value; }
  const std::string &var() const { return m_n->var; }
  const expr &lhs() const { return *m_n->lhs; }
  const expr &rhs() const { return *m_n->rhs; }
  source_pos pos() const { return m_n->pos; }

  bool is_constant() const { return k() == kind::constant; }
  bool is_variable() const { return k() == kind::variable; }

  void collect_vars(std::vector<std::string> &out) const;
  std::string str() const;

  // Structural equality (positions ignored).
  bool same(const expr &o) const;

private:
  struct node {
    kind k;
    std::int64_t value = 0;
    std::string var;
    std::shared_ptr<const expr> lhs, rhs;
    source_pos pos;
  };
  explicit expr(std::shared_ptr<const node> n) : m_n(std::move(n)) {}
  std::shared_ptr<const node> m_n;
};

// Conditions: a single comparison between expressions, a (possibly
// negated) Boolean variable, or a Boolean literal. Negation is resolved
// structurally, so the set of condition shapes is closed under it.
class cond {
public:
  enum class rel_op { lt, le, gt, ge, eq, ne };
  enum class kind { relation, bool_var, truth };

  static cond relation(rel_op op, expr l, expr r, source_pos p = {});
  static cond bool_var(std::string name, bool negated = false,
                       source_pos p = {});
  static cond truth(bool value, source_pos p = {});

  kind k() const { return m_n->k; }
  rel_op op() const { return m_n->op; }
  const expr &lhs() const { return *m_n->lhs; }
  const expr &rhs() const { return *m_n->rhs; }
  const std::string &var() const { return m_n->var; }
  bool negated() const { return m_n->negated; }
  bool truth_value() const { return m_n->truth_value; }
  source_pos pos() const { return m_n->pos; }

  cond negate() const;
  void collect_vars(std::vector<std::string> &out) const;
  std::string str() const;
  bool same(const cond &o) const;

  static rel_op negate_op(rel_op op);
  static const char *op_str(rel_op op);

private:
  struct node {
    kind k;
    rel_op op = rel_op::lt;
    std::shared_ptr<const expr> lhs, rhs;
    std::string var;
    bool negated = false;
    bool truth_value = false;
    source_pos pos;
  };
  explicit cond(std::shared_ptr<const node> n) : m_n(std::move(n)) {}
  std::shared_ptr<const node> m_n;
};

struct stmt;
using block = std::vector<stmt>;

// One statement of the tiny language. for-loops exist only between parse
// and desugaring; the CFG builder never sees them.
struct stmt {
  enum class kind {
    assign,      // target := e
    bool_assign, // target := (cond) | true | false
    array_alloc, // target := new Int[e]
    array_store, // target[index] := e
    if_else,
    while_loop,
    for_loop,
    assert_check
  };

  kind k;
  source_pos pos;

  std::string target;
  std::vector<expr> exprs; // assign: {e}; store: {index, value}; alloc: {len}
  std::vector<cond> conds; // guard or asserted / assigned condition
  block then_block;        // loop/if body
  block else_block;
  block aux; // for-loop only: {init, step}

  static stmt assign(std::string target, expr e, source_pos p = {});
  static stmt bool_assign(std::string target, cond c, source_pos p = {});
  static stmt array_alloc(std::string target, expr len, source_pos p = {});
  static stmt array_store(std::string target, expr index, expr value,
                          source_pos p = {});
  static stmt if_else(cond c, block then_b, block else_b, source_pos p = {});
  static stmt while_loop(cond c, block body, source_pos p = {});
  static stmt for_loop(stmt init, cond c, stmt step, block body,
                       source_pos p = {});
  static stmt assert_check(cond c, source_pos p = {});

  const expr &e0() const { return exprs.at(0); }
  const expr &e1() const { return exprs.at(1); }
  const cond &c0() const { return conds.at(0); }
};

struct input_decl {
  std::string name;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  source_pos pos;
};

struct program {
  std::vector<input_decl> decls;
  block body;
};

// Name of the derived length variable the analysis tracks for an array.
inline std::string length_var(const std::string &array_name) {
  return array_name + ".length";
}

std::string render(const program &p);

} // namespace prodint
