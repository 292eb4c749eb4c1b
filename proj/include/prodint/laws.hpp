#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "prodint/domain.hpp"

namespace prodint {

struct law_violation {
  std::uint64_t index = 0; // position in the check schedule, for stable order
  std::string law;
  std::string counterexample;

  friend bool operator==(const law_violation &a, const law_violation &b) {
    return a.index == b.index && a.law == b.law &&
           a.counterexample == b.counterexample;
  }
};

struct law_report {
  std::uint64_t checked = 0;
  std::vector<law_violation> violations;

  bool ok() const { return violations.empty(); }

  friend bool operator==(const law_report &a, const law_report &b) {
    return a.checked == b.checked && a.violations == b.violations;
  }
};

enum class exec_mode { serial, parallel };

struct law_options {
  exec_mode mode = exec_mode::serial;
  // Gamma-based laws cost |universe| per pair; cap the pairs they run on.
  std::size_t max_gamma_pairs = 4096;
  std::size_t max_violations = 64;
  int widening_budget = 64; // max escalations before a chain must stabilize
};

namespace detail {

// Worker shared by the serial reference implementation and the OpenMP
// path. Both iterate the same flat schedule, so their reports are
// identical by construction; the test suite asserts exactly that.
template <class T, class PairFn, class TripleFn>
void run_schedule(std::size_t n, bool parallel, PairFn &&on_pair,
                  TripleFn &&on_triple,
                  std::vector<law_violation> &out_violations,
                  std::uint64_t &out_checked);

} // namespace detail

// Lattice-law and Galois-soundness checker. `gamma` maps (value, point
// index) to membership of the point in the value's concretization; the
// n_points indexes enumerate a finite concrete universe.
template <class T>
law_report
check_laws_with_gamma(const domain_descriptor &d, const std::vector<T> &samples,
                      std::size_t n_points,
                      const std::function<bool(const T &, std::size_t)> &gamma,
                      law_options opt = {});

// Convenience entry for integer-valued domains: gamma is the value's own
// membership test over the universe.
template <AbstractValue T>
law_report check_laws(const domain_descriptor &d, const std::vector<T> &samples,
                      const finite_universe &u, law_options opt = {}) {
  std::function<bool(const T &, std::size_t)> g =
      [&u](const T &a, std::size_t i) {
        return a.contains(u.lo + static_cast<std::int64_t>(i));
      };
  return check_laws_with_gamma<T>(d, samples, u.size(), g, opt);
}

// Length (in elements) of the longest strictly increasing chain among the
// given elements. Used to measure product/power lattice heights, which are
// frozen empirically rather than taken from a formula.
template <class T>
std::size_t longest_chain(const std::vector<T> &elems) {
  const std::size_t n = elems.size();
  std::vector<std::size_t> memo(n, 0);
  std::function<std::size_t(std::size_t)> best = [&](std::size_t i) {
    if (memo[i])
      return memo[i];
    std::size_t r = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      if (elems[i].leq(elems[j]) && !(elems[i] == elems[j]))
        r = std::max(r, 1 + best(j));
    }
    return memo[i] = r;
  };
  std::size_t out = 0;
  for (std::size_t i = 0; i < n; ++i)
    out = std::max(out, best(i));
  return out;
}

} // namespace prodint

#include "prodint/laws_impl.hpp"
