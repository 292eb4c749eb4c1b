#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prodint/ast.hpp"

namespace prodint {

// Conjunctions of strict difference constraints x < y + c, kept in
// transitively closed form with at most one (the tightest) constraint per
// ordered variable pair. Integer semantics: x < y + c iff x <= y + c - 1,
// so chaining x < y + c1 and y < z + c2 yields x < z + (c1 + c2 - 1).
// An infeasible cycle collapses to the unique bottom.
class diff_store {
public:
  using var_pair = std::pair<std::string, std::string>;
  struct constraint {
    std::string lhs, rhs;
    std::int64_t c;
  };

  diff_store() : m_bot(false) {}

  static diff_store top() { return diff_store(); }
  static diff_store bottom() {
    diff_store s;
    s.m_bot = true;
    return s;
  }
  // Builds the closed store entailed by the given constraints.
  static diff_store from_constraints(const std::vector<constraint> &cs);

  static std::string name() { return "diff"; }

  bool is_bottom() const { return m_bot; }
  bool is_top() const { return !m_bot && m_cons.empty(); }
  const std::map<var_pair, std::int64_t> &constraints() const {
    return m_cons;
  }

  // Re-derives the transitive closure; idempotent on closed stores and the
  // identity on bottom. Public for the closure property tests.
  diff_store close() const;

  bool leq(const diff_store &o) const;
  diff_store join(const diff_store &o) const;
  diff_store meet(const diff_store &o) const;
  // Keeps only the constraints of *this that the new iterate still entails;
  // never introduces constraints, so iteration terminates.
  diff_store widen(const diff_store &o) const;

  // Guard refinement: conjoins the constraint a condition of the shape
  // x (+k) < / <= / > / >= / = y (+k) induces; other shapes are ignored.
  diff_store assume(const cond &c) const;
  // Kill/gen transfer for x := e.
  diff_store assign(const std::string &x, const expr &e) const;

  bool entails(const std::string &x, const std::string &y,
               std::int64_t c) const;
  bool entails(const cond &c) const;

  // All variables mentioned by some constraint.
  std::vector<std::string> vars() const;

  // Test-only concretization: does the given store satisfy all constraints
  // (variables missing from the valuation are unconstrained)?
  bool admits(const std::map<std::string, std::int64_t> &valuation) const;

  std::string str() const;

  friend bool operator==(const diff_store &a, const diff_store &b) {
    if (a.m_bot || b.m_bot)
      return a.m_bot == b.m_bot;
    return a.m_cons == b.m_cons;
  }

private:
  diff_store with_constraint(const std::string &x, const std::string &y,
                             std::int64_t c) const; // no closure
  diff_store drop_var(const std::string &x) const;

  bool m_bot;
  std::map<var_pair, std::int64_t> m_cons;
};

} // namespace prodint
