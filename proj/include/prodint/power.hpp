#pragma once

#include <set>
#include <sstream>
#include <stdexcept>
#include <variant>
#include <vector>

#include "prodint/counters.hpp"
#include "prodint/domain.hpp"
#include "prodint/product.hpp"

namespace prodint {

// Finite restriction of the reduced cardinal power B^A: a fixed list of
// pairwise-disjoint exponent atoms, each mapped to a base value. The
// induced total map on the exponent lattice (bottom to bottom, joins of
// atoms to joins of entries) is isotone by construction.
template <AbstractValue A, AbstractValue B> class power_value {
public:
  power_value(std::vector<A> atoms, std::vector<B> table)
      : m_atoms(std::move(atoms)), m_table(std::move(table)) {
    if (m_atoms.empty())
      throw std::invalid_argument("power_value: no atoms");
    if (m_atoms.size() != m_table.size())
      throw std::invalid_argument("power_value: table/atom size mismatch");
    for (std::size_t i = 0; i < m_atoms.size(); ++i) {
      if (m_atoms[i].is_bottom())
        throw std::invalid_argument("power_value: bottom atom");
      for (std::size_t j = i + 1; j < m_atoms.size(); ++j)
        if (!m_atoms[i].meet(m_atoms[j]).is_bottom())
          throw std::invalid_argument("power_value: atoms overlap: " +
                                      m_atoms[i].str() + " and " +
                                      m_atoms[j].str());
    }
  }

  static power_value bottom_of(std::vector<A> atoms) {
    std::vector<B> table(atoms.size(), B::bottom());
    return power_value(std::move(atoms), std::move(table));
  }
  static power_value top_of(std::vector<A> atoms) {
    std::vector<B> table(atoms.size(), B::top());
    return power_value(std::move(atoms), std::move(table));
  }

  static std::string name() { return B::name() + "^" + A::name(); }

  const std::vector<A> &atoms() const { return m_atoms; }
  const std::vector<B> &table() const { return m_table; }
  std::size_t size() const { return m_atoms.size(); }
  const B &entry(std::size_t i) const { return m_table.at(i); }

  power_value with_entry(std::size_t i, B v) const {
    power_value p = *this;
    p.m_table.at(i) = std::move(v);
    return p;
  }

  bool is_bottom() const {
    for (const B &b : m_table)
      if (!b.is_bottom())
        return false;
    return true;
  }

  bool leq(const power_value &o) const {
    require_same_atoms(o);
    for (std::size_t i = 0; i < size(); ++i) {
      count_op(B::name(), "leq");
      if (!m_table[i].leq(o.m_table[i]))
        return false;
    }
    return true;
  }
  power_value join(const power_value &o) const { return zip(o, "join"); }
  power_value meet(const power_value &o) const { return zip(o, "meet"); }
  // Pointwise base widening; finitely many atoms make it effective.
  power_value widen(const power_value &o) const { return zip(o, "widen"); }

  // The induced total map evaluated at an arbitrary exponent value.
  B induced(const A &x) const {
    B out = B::bottom();
    for (std::size_t i = 0; i < size(); ++i)
      if (m_atoms[i].leq(x))
        out = out.join(m_table[i]);
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i)
        os << ", ";
      os << m_atoms[i].str() << " -> " << m_table[i].str();
    }
    os << "}";
    return os.str();
  }

  friend bool operator==(const power_value &a, const power_value &b) {
    return a.m_atoms == b.m_atoms && a.m_table == b.m_table;
  }

private:
  void require_same_atoms(const power_value &o) const {
    if (!(m_atoms == o.m_atoms))
      throw std::invalid_argument("power_value: atom lists differ");
  }
  power_value zip(const power_value &o, const char *op) const {
    require_same_atoms(o);
    std::vector<B> table;
    table.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      count_op(B::name(), op);
      if (op[0] == 'j')
        table.push_back(m_table[i].join(o.m_table[i]));
      else if (op[0] == 'm')
        table.push_back(m_table[i].meet(o.m_table[i]));
      else
        table.push_back(m_table[i].widen(o.m_table[i]));
    }
    return power_value(m_atoms, std::move(table));
  }

  std::vector<A> m_atoms;
  std::vector<B> m_table;
};

// Kind-dispatched pointwise application.
template <AbstractValue A, AbstractValue B>
std::variant<power_value<A, B>, bool>
power_pointwise(lattice_op op, const power_value<A, B> &f,
                const power_value<A, B> &g) {
  switch (op) {
  case lattice_op::leq:
    return f.leq(g);
  case lattice_op::join:
    return f.join(g);
  case lattice_op::meet:
    return f.meet(g);
  case lattice_op::widen:
    return f.widen(g);
  }
  return false;
}

// Test-only abstraction into the power: each atom maps to the base
// abstraction of the concrete set restricted to the atom's concretization.
template <AbstractValue A, AbstractValue B>
power_value<A, B> power_abstract(const std::set<std::int64_t> &c,
                                 const std::vector<A> &atoms,
                                 const finite_universe &u) {
  std::vector<B> table;
  table.reserve(atoms.size());
  for (const A &atom : atoms) {
    std::set<std::int64_t> slice;
    for (std::int64_t v : c)
      if (v >= u.lo && v <= u.hi && atom.contains(v))
        slice.insert(v);
    table.push_back(B::from_set(slice));
  }
  return power_value<A, B>(atoms, std::move(table));
}

} // namespace prodint
