#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>

#include "prodint/ints.hpp"

namespace prodint {

// The four-element parity lattice: bot < {odd, even} < top.
class parity {
public:
  enum class v : std::uint8_t { bot, odd, even, top };

  parity() : m_v(v::top) {}
  explicit parity(v x) : m_v(x) {}

  static parity bottom() { return parity(v::bot); }
  static parity top() { return parity(v::top); }
  static parity odd() { return parity(v::odd); }
  static parity even() { return parity(v::even); }
  static parity of(std::int64_t k) { return is_even(k) ? even() : odd(); }

  static std::string name() { return "parity"; }

  v val() const { return m_v; }
  bool is_bottom() const { return m_v == v::bot; }
  bool is_top() const { return m_v == v::top; }

  bool leq(const parity &o) const {
    if (m_v == v::bot || o.m_v == v::top)
      return true;
    return m_v == o.m_v;
  }
  parity join(const parity &o) const {
    if (m_v == v::bot)
      return o;
    if (o.m_v == v::bot)
      return *this;
    if (m_v == o.m_v)
      return *this;
    return top();
  }
  parity meet(const parity &o) const {
    if (m_v == v::top)
      return o;
    if (o.m_v == v::top)
      return *this;
    if (m_v == o.m_v)
      return *this;
    return bottom();
  }
  // Finite domain: widening is join.
  parity widen(const parity &o) const { return join(o); }

  bool contains(std::int64_t x) const {
    switch (m_v) {
    case v::bot:
      return false;
    case v::odd:
      return !is_even(x);
    case v::even:
      return is_even(x);
    default:
      return true;
    }
  }

  parity add(const parity &o) const {
    if (is_bottom() || o.is_bottom())
      return bottom();
    if (is_top() || o.is_top())
      return top();
    // E+E = O+O = E, E+O = O.
    return m_v == o.m_v ? even() : odd();
  }
  // Parity of a difference equals parity of a sum.
  parity sub(const parity &o) const { return add(o); }

  static parity from_set(const std::set<std::int64_t> &s) {
    parity r = bottom();
    for (auto x : s)
      r = r.join(of(x));
    return r;
  }

  static const std::array<parity, 4> &all() {
    static const std::array<parity, 4> k = {bottom(), odd(), even(), top()};
    return k;
  }

  std::string str() const {
    switch (m_v) {
    case v::bot:
      return "bot";
    case v::odd:
      return "o";
    case v::even:
      return "e";
    default:
      return "top";
    }
  }

  friend bool operator==(const parity &a, const parity &b) = default;

private:
  v m_v;
};

} // namespace prodint
