#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace prodint {

// Flat abstract Booleans: bot < {tt, ff} < top. Concrete Booleans are
// encoded as 0/1 where an integer view is needed (gamma over {0..1}).
class bool_abs {
public:
  enum class v : std::uint8_t { bot, tt, ff, top };

  bool_abs() : m_v(v::top) {}
  explicit bool_abs(v x) : m_v(x) {}

  static bool_abs bottom() { return bool_abs(v::bot); }
  static bool_abs top() { return bool_abs(v::top); }
  static bool_abs tt() { return bool_abs(v::tt); }
  static bool_abs ff() { return bool_abs(v::ff); }
  static bool_abs of(bool b) { return b ? tt() : ff(); }

  static std::string name() { return "bool"; }

  v val() const { return m_v; }
  bool is_bottom() const { return m_v == v::bot; }
  bool is_top() const { return m_v == v::top; }

  bool leq(const bool_abs &o) const {
    if (m_v == v::bot || o.m_v == v::top)
      return true;
    return m_v == o.m_v;
  }
  bool_abs join(const bool_abs &o) const {
    if (m_v == v::bot)
      return o;
    if (o.m_v == v::bot)
      return *this;
    return m_v == o.m_v ? *this : top();
  }
  bool_abs meet(const bool_abs &o) const {
    if (m_v == v::top)
      return o;
    if (o.m_v == v::top)
      return *this;
    return m_v == o.m_v ? *this : bottom();
  }
  bool_abs widen(const bool_abs &o) const { return join(o); }

  bool_abs negate() const {
    switch (m_v) {
    case v::tt:
      return ff();
    case v::ff:
      return tt();
    default:
      return *this;
    }
  }

  bool contains(std::int64_t x) const {
    switch (m_v) {
    case v::bot:
      return false;
    case v::tt:
      return x == 1;
    case v::ff:
      return x == 0;
    default:
      return x == 0 || x == 1;
    }
  }

  static const std::array<bool_abs, 4> &all() {
    static const std::array<bool_abs, 4> k = {bottom(), tt(), ff(), top()};
    return k;
  }

  std::string str() const {
    switch (m_v) {
    case v::bot:
      return "bot";
    case v::tt:
      return "true";
    case v::ff:
      return "false";
    default:
      return "top";
    }
  }

  friend bool operator==(const bool_abs &a, const bool_abs &b) = default;

private:
  v m_v;
};

} // namespace prodint
