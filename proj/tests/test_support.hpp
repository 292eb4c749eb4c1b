#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "prodint/congruence.hpp"
#include "prodint/diff_store.hpp"
#include "prodint/interval.hpp"

namespace prodint::test {

inline std::string corpus_path(const std::string &name) {
  return std::string(PRODINT_CORPUS_DIR) + "/" + name;
}

inline std::string read_corpus(const std::string &name) {
  std::ifstream f(corpus_path(name));
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// Deterministic sample pools for the randomized law suites.
inline std::vector<interval> random_intervals(std::size_t n,
                                              std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> bound(-20, 20);
  std::uniform_int_distribution<int> shape(0, 9);
  std::vector<interval> out = {interval::bottom(), interval::top()};
  while (out.size() < n) {
    const int s = shape(rng);
    const int a = bound(rng), b = bound(rng);
    if (s == 0)
      out.push_back(interval::at_most(a));
    else if (s == 1)
      out.push_back(interval::at_least(a));
    else if (s == 2)
      out.push_back(interval::constant(a));
    else
      out.push_back(interval::range(std::min(a, b), std::max(a, b)));
  }
  return out;
}

inline std::vector<congruence> random_congruences(std::size_t n,
                                                  std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> mod(0, 64);
  std::vector<congruence> out = {congruence::bottom(), congruence::top()};
  while (out.size() < n)
    out.push_back(congruence::modulus(static_cast<std::uint64_t>(mod(rng))));
  return out;
}

inline std::vector<diff_store> random_diff_stores(std::size_t n,
                                                  std::uint32_t seed) {
  std::mt19937 rng(seed);
  const std::vector<std::string> vars = {"x", "y", "z"};
  std::uniform_int_distribution<int> c_dist(-4, 4);
  std::uniform_int_distribution<std::size_t> v_dist(0, vars.size() - 1);
  std::uniform_int_distribution<int> k_dist(0, 3);
  std::vector<diff_store> out = {diff_store::top(), diff_store::bottom()};
  while (out.size() < n) {
    std::vector<diff_store::constraint> cs;
    const int k = k_dist(rng);
    for (int i = 0; i < k; ++i) {
      const std::string a = vars[v_dist(rng)];
      const std::string b = vars[v_dist(rng)];
      if (a == b)
        continue;
      cs.push_back({a, b, c_dist(rng)});
    }
    out.push_back(diff_store::from_constraints(cs));
  }
  return out;
}

} // namespace prodint::test
