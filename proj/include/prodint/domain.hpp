#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "prodint/universe.hpp"

namespace prodint {

// Contract every abstract value type satisfies: a lattice with widening,
// a membership test realizing the concretization over integers, and a
// stable rendering. Values are immutable; all operations return new values.
template <class T>
concept AbstractValue = requires(const T &a, const T &b, std::int64_t v) {
  { T::bottom() } -> std::same_as<T>;
  { T::top() } -> std::same_as<T>;
  { T::name() } -> std::convertible_to<std::string>;
  { a.is_bottom() } -> std::convertible_to<bool>;
  { a.leq(b) } -> std::convertible_to<bool>;
  { a.join(b) } -> std::same_as<T>;
  { a.meet(b) } -> std::same_as<T>;
  { a.widen(b) } -> std::same_as<T>;
  { a.contains(v) } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
  { a == b } -> std::convertible_to<bool>;
};

// Test-only realization of the concretization function over a finite
// universe: the set of universe members the value admits.
template <AbstractValue T>
std::set<std::int64_t> gamma_enum(const T &a, const finite_universe &u) {
  std::set<std::int64_t> out;
  for (std::int64_t v = u.lo; v <= u.hi; ++v)
    if (a.contains(v))
      out.insert(v);
  return out;
}

struct domain_descriptor {
  std::string name;
  bool has_finite_height = false;
  bool widening_is_join = false; // finite domains where widen == join
};

// Registry of known domains; names must be unique.
class domain_registry {
public:
  void add(const domain_descriptor &d) {
    if (m_domains.count(d.name))
      throw std::invalid_argument("duplicate domain name: " + d.name);
    m_domains[d.name] = d;
  }
  const domain_descriptor &get(const std::string &name) const {
    auto it = m_domains.find(name);
    if (it == m_domains.end())
      throw std::out_of_range("unknown domain: " + name);
    return it->second;
  }
  bool has(const std::string &name) const { return m_domains.count(name); }
  std::size_t size() const { return m_domains.size(); }

  // All five non-relational domains plus the relational one.
  static domain_registry builtin();

private:
  std::map<std::string, domain_descriptor> m_domains;
};

} // namespace prodint
