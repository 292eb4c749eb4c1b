#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "prodint/interval.hpp"

namespace prodint {

// The eight-element sign lattice, encoded as the powerset of the three
// concrete regions N = [-oo..-1], Z = {0}, P = [1..+oo]. Subset inclusion
// is exactly concretization inclusion, so the lattice operators are the
// set operators.
class sign {
public:
  static constexpr std::uint8_t kN = 1, kZ = 2, kP = 4;

  sign() : m_bits(kN | kZ | kP) {}
  explicit sign(std::uint8_t bits) : m_bits(bits & 7) {}

  static sign bottom() { return sign(0); }
  static sign top() { return sign(kN | kZ | kP); }
  static sign neg() { return sign(kN); }
  static sign zero() { return sign(kZ); }
  static sign pos() { return sign(kP); }
  static sign leq_zero() { return sign(kN | kZ); }
  static sign geq_zero() { return sign(kZ | kP); }
  static sign nonzero() { return sign(kN | kP); }
  static sign of(std::int64_t v) {
    return v < 0 ? neg() : (v == 0 ? zero() : pos());
  }

  static std::string name() { return "sign"; }

  std::uint8_t bits() const { return m_bits; }
  bool is_bottom() const { return m_bits == 0; }
  bool is_top() const { return m_bits == 7; }

  bool leq(const sign &o) const { return (m_bits & ~o.m_bits) == 0; }
  sign join(const sign &o) const { return sign(m_bits | o.m_bits); }
  sign meet(const sign &o) const { return sign(m_bits & o.m_bits); }
  sign widen(const sign &o) const { return join(o); }

  bool contains(std::int64_t v) const { return (m_bits & of(v).m_bits) != 0; }

  // The concrete regions, for evaluation through interval arithmetic.
  std::vector<interval> regions() const {
    std::vector<interval> out;
    if (m_bits & kN)
      out.push_back(interval::at_most(-1));
    if (m_bits & kZ)
      out.push_back(interval::constant(0));
    if (m_bits & kP)
      out.push_back(interval::at_least(1));
    return out;
  }

  static sign from_interval(const interval &iv) {
    if (iv.is_bottom())
      return bottom();
    std::uint8_t b = 0;
    if (!iv.meet(interval::at_most(-1)).is_bottom())
      b |= kN;
    if (iv.contains(0))
      b |= kZ;
    if (!iv.meet(interval::at_least(1)).is_bottom())
      b |= kP;
    return sign(b);
  }

  static sign from_set(const std::set<std::int64_t> &s) {
    sign r = bottom();
    for (auto v : s)
      r = r.join(of(v));
    return r;
  }

  static const std::array<sign, 8> &all() {
    static const std::array<sign, 8> k = {
        bottom(), neg(),      zero(),    pos(),
        leq_zero(), geq_zero(), nonzero(), top()};
    return k;
  }

  std::string str() const {
    switch (m_bits) {
    case 0:
      return "bot";
    case kN:
      return "-";
    case kZ:
      return "0";
    case kP:
      return "+";
    case kN | kZ:
      return "0-";
    case kZ | kP:
      return "0+";
    case kN | kP:
      return "!=0";
    default:
      return "top";
    }
  }

  friend bool operator==(const sign &a, const sign &b) = default;

private:
  std::uint8_t m_bits;
};

} // namespace prodint
