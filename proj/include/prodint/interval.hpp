#pragma once

#include <optional>
#include <set>
#include <string>

#include "prodint/ints.hpp"

namespace prodint {

// Classic integer intervals [lo..hi] with lo in {-oo} u Z and hi in
// Z u {+oo}. The empty interval is the unique bottom; an [a..b] with
// a > b can never be constructed.
class interval {
public:
  interval() : m_bot(false), m_lo(ext_int::minus_inf()), m_hi(ext_int::plus_inf()) {}

  static interval bottom() {
    interval r;
    r.m_bot = true;
    return r;
  }
  static interval top() { return interval(); }
  static interval constant(std::int64_t v) { return make(ext_int(v), ext_int(v)); }
  static interval range(std::int64_t lo, std::int64_t hi) {
    return make(ext_int(lo), ext_int(hi));
  }
  static interval at_least(std::int64_t lo) {
    return make(ext_int(lo), ext_int::plus_inf());
  }
  static interval at_most(std::int64_t hi) {
    return make(ext_int::minus_inf(), ext_int(hi));
  }
  // Normalizing constructor: empty bounds collapse to bottom.
  static interval make(const ext_int &lo, const ext_int &hi) {
    if (hi < lo)
      return bottom();
    interval r;
    r.m_lo = lo;
    r.m_hi = hi;
    return r;
  }

  static std::string name() { return "interval"; }

  bool is_bottom() const { return m_bot; }
  bool is_top() const {
    return !m_bot && m_lo.is_minus_inf() && m_hi.is_plus_inf();
  }
  const ext_int &lo() const { return m_lo; }
  const ext_int &hi() const { return m_hi; }
  bool is_singleton() const {
    return !m_bot && m_lo.is_finite() && m_lo == m_hi;
  }
  std::optional<std::int64_t> singleton() const {
    if (is_singleton())
      return m_lo.value();
    return std::nullopt;
  }

  bool leq(const interval &o) const {
    if (m_bot)
      return true;
    if (o.m_bot)
      return false;
    return o.m_lo <= m_lo && m_hi <= o.m_hi;
  }
  interval join(const interval &o) const {
    if (m_bot)
      return o;
    if (o.m_bot)
      return *this;
    return make(min(m_lo, o.m_lo), max(m_hi, o.m_hi));
  }
  interval meet(const interval &o) const {
    if (m_bot || o.m_bot)
      return bottom();
    return make(max(m_lo, o.m_lo), min(m_hi, o.m_hi));
  }
  // Unstable bounds escalate to infinity.
  interval widen(const interval &o) const {
    if (m_bot)
      return o;
    if (o.m_bot)
      return *this;
    ext_int lo = o.m_lo < m_lo ? ext_int::minus_inf() : m_lo;
    ext_int hi = m_hi < o.m_hi ? ext_int::plus_inf() : m_hi;
    return make(lo, hi);
  }

  bool contains(std::int64_t v) const {
    return !m_bot && m_lo <= ext_int(v) && ext_int(v) <= m_hi;
  }

  interval add(const interval &o) const {
    if (m_bot || o.m_bot)
      return bottom();
    return make(m_lo + o.m_lo, m_hi + o.m_hi);
  }
  interval sub(const interval &o) const {
    if (m_bot || o.m_bot)
      return bottom();
    return make(m_lo - o.m_hi, m_hi - o.m_lo);
  }

  // Best abstraction of a finite concrete set (test support).
  static interval from_set(const std::set<std::int64_t> &s) {
    if (s.empty())
      return bottom();
    return range(*s.begin(), *s.rbegin());
  }

  std::string str() const {
    if (m_bot)
      return "bot";
    return "[" + m_lo.str() + ".." + m_hi.str() + "]";
  }

  friend bool operator==(const interval &a, const interval &b) {
    if (a.m_bot || b.m_bot)
      return a.m_bot == b.m_bot;
    return a.m_lo == b.m_lo && a.m_hi == b.m_hi;
  }

private:
  bool m_bot;
  ext_int m_lo, m_hi;
};

} // namespace prodint
