#pragma once

#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>

#include "prodint/ints.hpp"

namespace prodint {

// Modulus-only congruences: an element m denotes the set mZ. m = 0 denotes
// {0}, m = 1 denotes Z (top). Ordering is divisibility: mZ <= nZ iff n
// divides m, so join is gcd and meet is lcm.
class congruence {
public:
  congruence() : m_bot(false), m_mod(1) {}
  explicit congruence(std::uint64_t m) : m_bot(false), m_mod(m) {}

  static congruence bottom() {
    congruence c;
    c.m_bot = true;
    c.m_mod = 0;
    return c;
  }
  static congruence top() { return congruence(1); }
  static congruence modulus(std::uint64_t m) { return congruence(m); }
  static congruence of(std::int64_t k) {
    return congruence(static_cast<std::uint64_t>(k < 0 ? -k : k));
  }

  static std::string name() { return "congruence"; }

  bool is_bottom() const { return m_bot; }
  bool is_top() const { return !m_bot && m_mod == 1; }
  std::uint64_t mod() const { return m_mod; }

  bool leq(const congruence &o) const {
    if (m_bot)
      return true;
    if (o.m_bot)
      return false;
    // nZ contains mZ iff n divides m; everything divides 0's members.
    if (o.m_mod == 0)
      return m_mod == 0;
    return m_mod % o.m_mod == 0;
  }
  congruence join(const congruence &o) const {
    if (m_bot)
      return o;
    if (o.m_bot)
      return *this;
    return congruence(gcd_u64(m_mod, o.m_mod));
  }
  congruence meet(const congruence &o) const {
    if (m_bot || o.m_bot)
      return bottom();
    return congruence(lcm_u64(m_mod, o.m_mod));
  }
  // Ascending chains are finite (each strict step removes a prime factor
  // once the gcd is nonzero), so join is a widening.
  congruence widen(const congruence &o) const { return join(o); }

  bool contains(std::int64_t v) const {
    if (m_bot)
      return false;
    if (m_mod == 0)
      return v == 0;
    const std::int64_t m = static_cast<std::int64_t>(m_mod);
    return v % m == 0;
  }

  congruence add(const congruence &o) const {
    if (m_bot || o.m_bot)
      return bottom();
    return congruence(gcd_u64(m_mod, o.m_mod));
  }
  congruence sub(const congruence &o) const { return add(o); }

  static congruence from_set(const std::set<std::int64_t> &s) {
    congruence r = bottom();
    for (auto v : s)
      r = r.join(of(v));
    return r;
  }

  std::string str() const {
    if (m_bot)
      return "bot";
    return std::to_string(m_mod) + "Z";
  }

  friend bool operator==(const congruence &a, const congruence &b) {
    if (a.m_bot || b.m_bot)
      return a.m_bot == b.m_bot;
    return a.m_mod == b.m_mod;
  }

private:
  bool m_bot;
  std::uint64_t m_mod;
};

} // namespace prodint
