#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace prodint {

// Enumerable concrete test universe {lo..hi} per variable. The analyzer never
// enumerates; only law checks and the collecting oracle do.
struct finite_universe {
  std::int64_t lo;
  std::int64_t hi;

  finite_universe(std::int64_t l, std::int64_t h) : lo(l), hi(h) {
    if (lo > hi)
      throw std::invalid_argument("finite_universe: lo > hi");
    if (hi - lo > 256)
      throw std::invalid_argument("finite_universe: wider than 256");
  }

  std::size_t size() const { return static_cast<std::size_t>(hi - lo + 1); }

  std::vector<std::int64_t> values() const {
    std::vector<std::int64_t> out;
    out.reserve(size());
    for (std::int64_t v = lo; v <= hi; ++v)
      out.push_back(v);
    return out;
  }
};

} // namespace prodint
