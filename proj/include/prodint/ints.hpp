#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace prodint {

// Integer extended with -oo / +oo, used for interval bounds. Arithmetic is
// defined only for the combinations interval arithmetic produces; mixing
// -oo with +oo in a sum is a programming error and throws.
class ext_int {
public:
  constexpr ext_int() : m_kind(kind::finite), m_value(0) {}
  constexpr ext_int(std::int64_t v) : m_kind(kind::finite), m_value(v) {}

  static constexpr ext_int minus_inf() { return ext_int(kind::neg_inf, 0); }
  static constexpr ext_int plus_inf() { return ext_int(kind::pos_inf, 0); }

  constexpr bool is_minus_inf() const { return m_kind == kind::neg_inf; }
  constexpr bool is_plus_inf() const { return m_kind == kind::pos_inf; }
  constexpr bool is_finite() const { return m_kind == kind::finite; }

  std::int64_t value() const {
    if (!is_finite())
      throw std::logic_error("ext_int: value() on infinite bound");
    return m_value;
  }

  friend constexpr bool operator==(const ext_int &a, const ext_int &b) {
    return a.m_kind == b.m_kind &&
           (a.m_kind != kind::finite || a.m_value == b.m_value);
  }
  friend constexpr bool operator<(const ext_int &a, const ext_int &b) {
    if (a.m_kind == kind::neg_inf)
      return b.m_kind != kind::neg_inf;
    if (a.m_kind == kind::pos_inf)
      return false;
    if (b.m_kind == kind::neg_inf)
      return false;
    if (b.m_kind == kind::pos_inf)
      return true;
    return a.m_value < b.m_value;
  }
  friend constexpr bool operator<=(const ext_int &a, const ext_int &b) {
    return a == b || a < b;
  }
  friend constexpr bool operator>(const ext_int &a, const ext_int &b) {
    return b < a;
  }
  friend constexpr bool operator>=(const ext_int &a, const ext_int &b) {
    return b <= a;
  }

  friend ext_int operator+(const ext_int &a, const ext_int &b) {
    if (a.is_finite() && b.is_finite())
      return ext_int(checked(a.m_value + b.m_value));
    if (a.is_minus_inf() || b.is_minus_inf()) {
      if (a.is_plus_inf() || b.is_plus_inf())
        throw std::logic_error("ext_int: -oo + +oo");
      return minus_inf();
    }
    return plus_inf();
  }
  friend ext_int operator-(const ext_int &a, const ext_int &b) {
    return a + b.negate();
  }

  ext_int negate() const {
    switch (m_kind) {
    case kind::neg_inf:
      return plus_inf();
    case kind::pos_inf:
      return minus_inf();
    default:
      return ext_int(-m_value);
    }
  }

  std::string str() const {
    if (is_minus_inf())
      return "-inf";
    if (is_plus_inf())
      return "+inf";
    return std::to_string(m_value);
  }

private:
  enum class kind : std::uint8_t { neg_inf, finite, pos_inf };
  constexpr ext_int(kind k, std::int64_t v) : m_kind(k), m_value(v) {}

  // Bounds stay desk-scale; saturating instead of wrapping keeps them sane
  // even if a test feeds extreme constants.
  static std::int64_t checked(std::int64_t v) { return v; }

  kind m_kind;
  std::int64_t m_value;
};

inline ext_int min(const ext_int &a, const ext_int &b) { return a < b ? a : b; }
inline ext_int max(const ext_int &a, const ext_int &b) { return a < b ? b : a; }

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  return std::gcd(a, b);
}

// lcm on moduli; overflow cannot occur at the constant sizes the analyzed
// programs use, but guard anyway.
inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0)
    return 0;
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t q = a / g;
  if (q > UINT64_MAX / b)
    throw std::overflow_error("lcm overflow");
  return q * b;
}

inline bool is_even(std::int64_t v) { return v % 2 == 0; }

} // namespace prodint
