#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace prodint {

// Per-run operation counters. Product combinators and the engine report
// every component-domain operation they delegate to, which lets tests
// assert the cost model (one op per component for pairs, one base op per
// atom for powers) instead of timing anything.
struct op_counters {
  std::map<std::string, std::uint64_t> counts;

  void bump(const std::string &key, std::uint64_t n = 1) { counts[key] += n; }
  std::uint64_t get(const std::string &key) const {
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
  }
  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto &[k, v] : counts)
      t += v;
    return t;
  }
  void clear() { counts.clear(); }
};

// Installs a counter as the current thread's active sink. Counting is
// per-run local state: nothing is shared across concurrent runs.
class counter_scope {
public:
  explicit counter_scope(op_counters &c);
  ~counter_scope();
  counter_scope(const counter_scope &) = delete;
  counter_scope &operator=(const counter_scope &) = delete;

  static op_counters *active();

private:
  op_counters *m_prev;
};

// No-op when no scope is active.
void count_op(const std::string &domain, const char *op);

} // namespace prodint
