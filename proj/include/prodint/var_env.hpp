#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "prodint/domain.hpp"

namespace prodint {

struct unbound_variable : std::runtime_error {
  explicit unbound_variable(const std::string &name)
      : std::runtime_error("unbound variable: " + name), var(name) {}
  std::string var;
};

// Pointwise lifting of a value domain to environments var -> value.
// A variable with no entry is unbound; for the lattice operators that is
// the same as top, but evaluation of an unbound variable is a contract
// violation and throws. An environment with any bottom entry normalizes
// to the bottom environment.
template <AbstractValue T> class var_env {
public:
  var_env() : m_bot(false) {}

  static var_env bottom() {
    var_env e;
    e.m_bot = true;
    return e;
  }

  bool is_bottom() const { return m_bot; }
  bool binds(const std::string &v) const { return m_vals.count(v) != 0; }
  const std::map<std::string, T> &entries() const { return m_vals; }

  const T &get(const std::string &v) const {
    auto it = m_vals.find(v);
    if (it == m_vals.end())
      throw unbound_variable(v);
    return it->second;
  }
  T get_or_top(const std::string &v) const {
    auto it = m_vals.find(v);
    return it == m_vals.end() ? T::top() : it->second;
  }

  // Binding a bottom value makes the whole environment bottom.
  var_env with(const std::string &v, T val) const {
    if (m_bot)
      return *this;
    if (val.is_bottom())
      return bottom();
    var_env e = *this;
    e.m_vals[v] = std::move(val);
    return e;
  }
  var_env without(const std::string &v) const {
    var_env e = *this;
    e.m_vals.erase(v);
    return e;
  }

  bool leq(const var_env &o) const {
    if (m_bot)
      return true;
    if (o.m_bot)
      return false;
    for (auto &[v, val] : o.m_vals)
      if (!get_or_top(v).leq(val))
        return false;
    return true;
  }

  var_env join(const var_env &o) const {
    if (m_bot)
      return o;
    if (o.m_bot)
      return *this;
    var_env e;
    for (auto &[v, val] : m_vals)
      e.m_vals.emplace(v, val.join(o.get_or_top(v)));
    for (auto &[v, val] : o.m_vals)
      if (!m_vals.count(v))
        e.m_vals.emplace(v, T::top()); // unbound on the other side
    return e;
  }

  var_env meet(const var_env &o) const {
    if (m_bot || o.m_bot)
      return bottom();
    var_env e = *this;
    for (auto &[v, val] : o.m_vals) {
      auto it = e.m_vals.find(v);
      T m = it == e.m_vals.end() ? val : it->second.meet(val);
      if (m.is_bottom())
        return bottom();
      e.m_vals[v] = m;
    }
    return e;
  }

  var_env widen(const var_env &o) const {
    if (m_bot)
      return o;
    if (o.m_bot)
      return *this;
    var_env e;
    for (auto &[v, val] : m_vals)
      e.m_vals.emplace(v, val.widen(o.get_or_top(v)));
    for (auto &[v, val] : o.m_vals)
      if (!m_vals.count(v))
        e.m_vals.emplace(v, T::top());
    return e;
  }

  std::string str() const {
    if (m_bot)
      return "bot";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto &[v, val] : m_vals) {
      if (!first)
        os << ", ";
      first = false;
      os << v << ": " << val.str();
    }
    os << "}";
    return os.str();
  }

  friend bool operator==(const var_env &a, const var_env &b) {
    if (a.m_bot || b.m_bot)
      return a.m_bot == b.m_bot;
    return a.m_vals == b.m_vals;
  }

private:
  bool m_bot;
  std::map<std::string, T> m_vals;
};

} // namespace prodint
