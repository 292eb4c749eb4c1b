#pragma once

#include <functional>
#include <string>
#include <variant>

#include "prodint/counters.hpp"
#include "prodint/domain.hpp"

namespace prodint {

enum class lattice_op { leq, join, meet, widen };

// Cartesian product of two value domains: component-wise operators, order
// as conjunction of the component orders, concretization as intersection.
// Raw pairs are not normalized, so (bot, b) and (bot, bot) are distinct
// elements with the same (empty) concretization; reductions remove that
// redundancy where installed.
template <AbstractValue A, AbstractValue B> class product {
public:
  product() : m_l(A::top()), m_r(B::top()) {}
  product(A l, B r) : m_l(std::move(l)), m_r(std::move(r)) {}

  static product bottom() { return product(A::bottom(), B::bottom()); }
  static product top() { return product(A::top(), B::top()); }
  static std::string name() { return A::name() + "x" + B::name(); }

  const A &left() const { return m_l; }
  const B &right() const { return m_r; }

  // Empty concretization, not necessarily the structural bottom pair.
  bool is_bottom() const { return m_l.is_bottom() || m_r.is_bottom(); }

  bool leq(const product &o) const {
    count_op(A::name(), "leq");
    count_op(B::name(), "leq");
    return m_l.leq(o.m_l) && m_r.leq(o.m_r);
  }
  product join(const product &o) const {
    count_op(A::name(), "join");
    count_op(B::name(), "join");
    return product(m_l.join(o.m_l), m_r.join(o.m_r));
  }
  product meet(const product &o) const {
    count_op(A::name(), "meet");
    count_op(B::name(), "meet");
    return product(m_l.meet(o.m_l), m_r.meet(o.m_r));
  }
  product widen(const product &o) const {
    count_op(A::name(), "widen");
    count_op(B::name(), "widen");
    return product(m_l.widen(o.m_l), m_r.widen(o.m_r));
  }

  bool contains(std::int64_t v) const {
    return m_l.contains(v) && m_r.contains(v);
  }

  std::string str() const { return "(" + m_l.str() + ", " + m_r.str() + ")"; }

  friend bool operator==(const product &a, const product &b) {
    return a.m_l == b.m_l && a.m_r == b.m_r;
  }

private:
  A m_l;
  B m_r;
};

// Kind-dispatched application of the component-wise operators.
template <AbstractValue A, AbstractValue B>
std::variant<product<A, B>, bool>
cartesian_apply(lattice_op op, const product<A, B> &p, const product<A, B> &q) {
  switch (op) {
  case lattice_op::leq:
    return p.leq(q);
  case lattice_op::join:
    return p.join(q);
  case lattice_op::meet:
    return p.meet(q);
  case lattice_op::widen:
    return p.widen(q);
  }
  return false;
}

// gamma of a pair over a finite universe: intersection of the components.
template <AbstractValue A, AbstractValue B>
std::set<std::int64_t> pair_gamma(const product<A, B> &p,
                                  const finite_universe &u) {
  return gamma_enum(p, u);
}

// One-directional refinement steps in the style of Granger: rho1 shrinks
// the left component using the right one, rho2 the converse. Both must be
// reductive and preserve the pair's concretization.
template <AbstractValue A, AbstractValue B> struct reduction_rule {
  std::function<A(const A &, const B &)> rho1;
  std::function<B(const A &, const B &)> rho2;
};

// Fixpoint of the decreasing iteration sequence
// (a', b') = (rho1(a, b), rho2(a, b)), capped. Stopping early is sound:
// every iterate is itself a valid reduction. A pair that empties on either
// side collapses to the structural bottom pair.
template <AbstractValue A, AbstractValue B>
product<A, B> reduce_fixpoint(const reduction_rule<A, B> &rule,
                              product<A, B> p, int cap = 100,
                              int *iterations = nullptr) {
  if (cap < 1)
    throw std::invalid_argument("reduce_fixpoint: cap must be >= 1");
  int used = 0;
  for (; used < cap; ++used) {
    product<A, B> q(rule.rho1(p.left(), p.right()),
                    rule.rho2(p.left(), p.right()));
    if (q == p)
      break;
    p = q;
  }
  if (iterations)
    *iterations = used;
  if (p.is_bottom())
    return product<A, B>::bottom();
  return p;
}

} // namespace prodint
