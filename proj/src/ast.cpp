#include "prodint/ast.hpp"

#include <sstream>

namespace prodint {

expr expr::constant(std::int64_t v, source_pos p) {
  auto n = std::make_shared<node>();
  n->k = kind::constant;
  n->value = v;
  n->pos = p;
  return expr(std::move(n));
}

expr expr::variable(std::string name, source_pos p) {
  auto n = std::make_shared<node>();
  n->k = kind::variable;
  n->var = std::move(name);
  n->pos = p;
  return expr(std::move(n));
}

expr expr::add(expr l, expr r, source_pos p) {
  auto n = std::make_shared<node>();
  n->k = kind::add;
  n->lhs = std::make_shared<expr>(std::move(l));
  n->rhs = std::make_shared<expr>(std::move(r));
  n->pos = p;
  return expr(std::move(n));
}

expr expr::sub(expr l, expr r, source_pos p) {
  auto n = std::make_shared<node>();
  n->k = kind::sub;
  n->lhs = std::make_shared<expr>(std::move(l));
  n->rhs = std::make_shared<expr>(std::move(r));
  n->pos = p;
  return expr(std::move(n));
}

void expr::collect_vars(std::vector<std::string> &out) const {
  switch (k()) {
  case kind::constant:
    return;
  case kind::variable:
    out.push_back(var());
    return;
  default:
    lhs().collect_vars(out);
    rhs().collect_vars(out);
  }
}

std::string expr::str() const {
  switch (k()) {
  case kind::constant:
    return std::to_string(value());
  case kind::variable:
    return var();
  case kind::add:
    return lhs().str() + " + " + rhs().str();
  case kind::sub:
    return lhs().str() + " - " + rhs().str();
  }
  return "?";
}

bool expr::same(const expr &o) const {
  if (k() != o.k())
    return false;
  switch (k()) {
  case kind::constant:
    return value() == o.value();
  case kind::variable:
    return var() == o.var();
  default:
    return lhs().same(o.lhs()) && rhs().same(o.rhs());
  }
}

cond cond::relation(rel_op op, expr l, expr r, source_pos p) {
  auto n = std::make_shared<node>();
  n->k = kind::relation;
  n->op = op;
  n->lhs = std::make_shared<expr>(std::move(l));
  n->rhs = std::make_shared<expr>(std::move(r));
  n->pos = p;
  return cond(std::move(n));
}

cond cond::bool_var(std::string name, bool negated, source_pos p) {
  auto n = std::make_shared<node>();
  n->k = kind::bool_var;
  n->var = std::move(name);
  n->negated = negated;
  n->pos = p;
  return cond(std::move(n));
}

cond cond::truth(bool value, source_pos p) {
  auto n = std::make_shared<node>();
  n->k = kind::truth;
  n->truth_value = value;
  n->pos = p;
  return cond(std::move(n));
}

cond::rel_op cond::negate_op(rel_op op) {
  switch (op) {
  case rel_op::lt:
    return rel_op::ge;
  case rel_op::le:
    return rel_op::gt;
  case rel_op::gt:
    return rel_op::le;
  case rel_op::ge:
    return rel_op::lt;
  case rel_op::eq:
    return rel_op::ne;
  case rel_op::ne:
    return rel_op::eq;
  }
  return rel_op::lt;
}

const char *cond::op_str(rel_op op) {
  switch (op) {
  case rel_op::lt:
    return "<";
  case rel_op::le:
    return "<=";
  case rel_op::gt:
    return ">";
  case rel_op::ge:
    return ">=";
  case rel_op::eq:
    return "=";
  case rel_op::ne:
    return "!=";
  }
  return "?";
}

cond cond::negate() const {
  switch (k()) {
  case kind::bool_var:
    return bool_var(var(), !negated(), pos());
  case kind::truth:
    return truth(!truth_value(), pos());
  default:
    return relation(negate_op(op()), lhs(), rhs(), pos());
  }
}

void cond::collect_vars(std::vector<std::string> &out) const {
  switch (k()) {
  case kind::bool_var:
    out.push_back(var());
    return;
  case kind::truth:
    return;
  default:
    lhs().collect_vars(out);
    rhs().collect_vars(out);
  }
}

std::string cond::str() const {
  switch (k()) {
  case kind::bool_var:
    return (negated() ? "!" : "") + var();
  case kind::truth:
    return truth_value() ? "true" : "false";
  default:
    return lhs().str() + " " + op_str(op()) + " " + rhs().str();
  }
}

bool cond::same(const cond &o) const {
  if (k() != o.k())
    return false;
  switch (k()) {
  case kind::bool_var:
    return var() == o.var() && negated() == o.negated();
  case kind::truth:
    return truth_value() == o.truth_value();
  default:
    return op() == o.op() && lhs().same(o.lhs()) && rhs().same(o.rhs());
  }
}

stmt stmt::assign(std::string target, expr e, source_pos p) {
  stmt s;
  s.k = kind::assign;
  s.target = std::move(target);
  s.exprs.push_back(std::move(e));
  s.pos = p;
  return s;
}

stmt stmt::bool_assign(std::string target, cond c, source_pos p) {
  stmt s;
  s.k = kind::bool_assign;
  s.target = std::move(target);
  s.conds.push_back(std::move(c));
  s.pos = p;
  return s;
}

stmt stmt::array_alloc(std::string target, expr len, source_pos p) {
  stmt s;
  s.k = kind::array_alloc;
  s.target = std::move(target);
  s.exprs.push_back(std::move(len));
  s.pos = p;
  return s;
}

stmt stmt::array_store(std::string target, expr index, expr value,
                       source_pos p) {
  stmt s;
  s.k = kind::array_store;
  s.target = std::move(target);
  s.exprs.push_back(std::move(index));
  s.exprs.push_back(std::move(value));
  s.pos = p;
  return s;
}

stmt stmt::if_else(cond c, block then_b, block else_b, source_pos p) {
  stmt s;
  s.k = kind::if_else;
  s.conds.push_back(std::move(c));
  s.then_block = std::move(then_b);
  s.else_block = std::move(else_b);
  s.pos = p;
  return s;
}

stmt stmt::while_loop(cond c, block body, source_pos p) {
  stmt s;
  s.k = kind::while_loop;
  s.conds.push_back(std::move(c));
  s.then_block = std::move(body);
  s.pos = p;
  return s;
}

stmt stmt::for_loop(stmt init, cond c, stmt step, block body, source_pos p) {
  stmt s;
  s.k = kind::for_loop;
  s.conds.push_back(std::move(c));
  s.then_block = std::move(body);
  s.aux.push_back(std::move(init));
  s.aux.push_back(std::move(step));
  s.pos = p;
  return s;
}

stmt stmt::assert_check(cond c, source_pos p) {
  stmt s;
  s.k = kind::assert_check;
  s.conds.push_back(std::move(c));
  s.pos = p;
  return s;
}

namespace {

void render_block(std::ostringstream &os, const block &b, int indent);

void render_stmt(std::ostringstream &os, const stmt &s, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  switch (s.k) {
  case stmt::kind::assign:
    os << pad << s.target << " := " << s.e0().str() << ";\n";
    break;
  case stmt::kind::bool_assign: {
    const cond &c = s.c0();
    if (c.k() == cond::kind::truth)
      os << pad << s.target << " := " << c.str() << ";\n";
    else
      os << pad << s.target << " := (" << c.str() << ");\n";
    break;
  }
  case stmt::kind::array_alloc:
    os << pad << s.target << " := new Int[" << s.e0().str() << "];\n";
    break;
  case stmt::kind::array_store:
    os << pad << s.target << "[" << s.e0().str() << "] := " << s.e1().str()
       << ";\n";
    break;
  case stmt::kind::if_else:
    os << pad << "if (" << s.c0().str() << ") {\n";
    render_block(os, s.then_block, indent + 1);
    os << pad << "}";
    if (!s.else_block.empty()) {
      os << " else {\n";
      render_block(os, s.else_block, indent + 1);
      os << pad << "}";
    }
    os << "\n";
    break;
  case stmt::kind::while_loop:
    os << pad << "while (" << s.c0().str() << ") {\n";
    render_block(os, s.then_block, indent + 1);
    os << pad << "}\n";
    break;
  case stmt::kind::for_loop: {
    const stmt &init = s.aux.at(0);
    const stmt &step = s.aux.at(1);
    os << pad << "for (" << init.target << " := " << init.e0().str() << "; "
       << s.c0().str() << "; " << step.target << " := " << step.e0().str()
       << ") {\n";
    render_block(os, s.then_block, indent + 1);
    os << pad << "}\n";
    break;
  }
  case stmt::kind::assert_check:
    os << pad << "assert (" << s.c0().str() << ");\n";
    break;
  }
}

void render_block(std::ostringstream &os, const block &b, int indent) {
  for (const stmt &s : b)
    render_stmt(os, s, indent);
}

} // namespace

std::string render(const program &p) {
  std::ostringstream os;
  for (const input_decl &d : p.decls)
    os << "input " << d.name << " in [" << d.lo << ", " << d.hi << "];\n";
  render_block(os, p.body, 0);
  return os.str();
}

} // namespace prodint
