#include "prodint/diff_store.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "prodint/num_transfer.hpp"

namespace prodint {

namespace {
constexpr std::int64_t kNoEdge = std::numeric_limits<std::int64_t>::max() / 4;
}

diff_store diff_store::from_constraints(const std::vector<constraint> &cs) {
  diff_store s;
  for (const constraint &c : cs)
    s = s.with_constraint(c.lhs, c.rhs, c.c);
  return s.close();
}

diff_store diff_store::with_constraint(const std::string &x,
                                       const std::string &y,
                                       std::int64_t c) const {
  if (m_bot)
    return *this;
  if (x == y)
    return c <= 0 ? bottom() : *this; // x < x + c
  diff_store s = *this;
  auto it = s.m_cons.find({x, y});
  if (it == s.m_cons.end() || c < it->second)
    s.m_cons[{x, y}] = c;
  return s;
}

std::vector<std::string> diff_store::vars() const {
  std::set<std::string> seen;
  for (auto &[p, c] : m_cons) {
    seen.insert(p.first);
    seen.insert(p.second);
  }
  return {seen.begin(), seen.end()};
}

diff_store diff_store::close() const {
  if (m_bot)
    return *this;
  const std::vector<std::string> vs = vars();
  const std::size_t n = vs.size();
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    idx[vs[i]] = i;

  // Shortest paths on d = c - 1 (the <=-form slack).
  std::vector<std::vector<std::int64_t>> d(n,
                                           std::vector<std::int64_t>(n,
                                                                     kNoEdge));
  for (std::size_t i = 0; i < n; ++i)
    d[i][i] = 0;
  for (auto &[p, c] : m_cons) {
    const std::size_t i = idx[p.first], j = idx[p.second];
    d[i][j] = std::min(d[i][j], c - 1);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kNoEdge)
        continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d[k][j] == kNoEdge)
          continue;
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    if (d[i][i] < 0)
      return bottom();

  diff_store out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && d[i][j] != kNoEdge)
        out.m_cons[{vs[i], vs[j]}] = d[i][j] + 1;
  return out;
}

bool diff_store::leq(const diff_store &o) const {
  if (m_bot)
    return true;
  if (o.m_bot)
    return false;
  for (auto &[p, c] : o.m_cons)
    if (!entails(p.first, p.second, c))
      return false;
  return true;
}

diff_store diff_store::join(const diff_store &o) const {
  if (m_bot)
    return o;
  if (o.m_bot)
    return *this;
  diff_store out;
  for (auto &[p, c] : m_cons) {
    auto it = o.m_cons.find(p);
    if (it != o.m_cons.end())
      out.m_cons[p] = std::max(c, it->second);
  }
  // Per-pair max of two closed stores is closed.
  return out;
}

diff_store diff_store::meet(const diff_store &o) const {
  if (m_bot || o.m_bot)
    return bottom();
  diff_store out = *this;
  for (auto &[p, c] : o.m_cons) {
    auto it = out.m_cons.find(p);
    if (it == out.m_cons.end() || c < it->second)
      out.m_cons[p] = c;
  }
  return out.close();
}

diff_store diff_store::widen(const diff_store &o) const {
  if (m_bot)
    return o;
  if (o.m_bot)
    return *this;
  diff_store out;
  for (auto &[p, c] : m_cons)
    if (o.entails(p.first, p.second, c))
      out.m_cons[p] = c;
  return out;
}

diff_store diff_store::assume(const cond &c) const {
  if (m_bot)
    return *this;
  switch (c.k()) {
  case cond::kind::truth:
    return c.truth_value() ? *this : bottom();
  case cond::kind::bool_var:
    return *this;
  case cond::kind::relation:
    break;
  }
  const auto l = decompose_var_offset(c.lhs());
  const auto r = decompose_var_offset(c.rhs());
  if (!l || !r)
    return *this; // not a variable difference; never unsound to skip
  const std::string &x = l->first, &y = r->first;
  const std::int64_t k = r->second - l->second; // x+kl op y+kr => x op y+k
  diff_store s = *this;
  switch (c.op()) {
  case cond::rel_op::lt:
    s = s.with_constraint(x, y, k);
    break;
  case cond::rel_op::le:
    s = s.with_constraint(x, y, k + 1);
    break;
  case cond::rel_op::gt:
    s = s.with_constraint(y, x, -k);
    break;
  case cond::rel_op::ge:
    s = s.with_constraint(y, x, -k + 1);
    break;
  case cond::rel_op::eq:
    s = s.with_constraint(x, y, k + 1).with_constraint(y, x, -k + 1);
    break;
  case cond::rel_op::ne:
    return *this;
  }
  return s.close();
}

diff_store diff_store::drop_var(const std::string &x) const {
  diff_store s;
  s.m_bot = m_bot;
  for (auto &[p, c] : m_cons)
    if (p.first != x && p.second != x)
      s.m_cons[p] = c;
  return s;
}

diff_store diff_store::assign(const std::string &x, const expr &e) const {
  if (m_bot)
    return *this;
  const auto rhs = decompose_var_offset(e);

  if (rhs && rhs->first == x) {
    // x := x + k shifts every constraint mentioning x.
    const std::int64_t k = rhs->second;
    diff_store s;
    for (auto &[p, c] : m_cons) {
      if (p.first == x)
        s.m_cons[p] = c + k;
      else if (p.second == x)
        s.m_cons[p] = c - k;
      else
        s.m_cons[p] = c;
    }
    return s.close();
  }

  // Closure has already materialized consequences through x, so dropping
  // its constraints loses nothing derivable from the others.
  diff_store s = drop_var(x);
  if (rhs) {
    // x = y + k, encoded as the two strict constraints.
    const std::string &y = rhs->first;
    const std::int64_t k = rhs->second;
    s = s.with_constraint(x, y, k + 1).with_constraint(y, x, 1 - k);
    return s.close();
  }
  return s;
}

bool diff_store::entails(const std::string &x, const std::string &y,
                         std::int64_t c) const {
  if (m_bot)
    return true;
  if (x == y)
    return c >= 1;
  auto it = m_cons.find({x, y});
  return it != m_cons.end() && it->second <= c;
}

bool diff_store::entails(const cond &c) const {
  if (m_bot)
    return true;
  switch (c.k()) {
  case cond::kind::truth:
    return c.truth_value();
  case cond::kind::bool_var:
    return false;
  case cond::kind::relation:
    break;
  }
  const auto l = decompose_var_offset(c.lhs());
  const auto r = decompose_var_offset(c.rhs());
  if (!l || !r)
    return false;
  const std::string &x = l->first, &y = r->first;
  const std::int64_t k = r->second - l->second;
  switch (c.op()) {
  case cond::rel_op::lt:
    return entails(x, y, k);
  case cond::rel_op::le:
    return entails(x, y, k + 1);
  case cond::rel_op::gt:
    return entails(y, x, -k);
  case cond::rel_op::ge:
    return entails(y, x, -k + 1);
  case cond::rel_op::eq:
    return entails(x, y, k + 1) && entails(y, x, -k + 1);
  case cond::rel_op::ne:
    return entails(x, y, k) || entails(y, x, -k);
  }
  return false;
}

bool diff_store::admits(
    const std::map<std::string, std::int64_t> &valuation) const {
  if (m_bot)
    return false;
  for (auto &[p, c] : m_cons) {
    auto xi = valuation.find(p.first);
    auto yi = valuation.find(p.second);
    if (xi == valuation.end() || yi == valuation.end())
      continue;
    if (!(xi->second < yi->second + c))
      return false;
  }
  return true;
}

std::string diff_store::str() const {
  if (m_bot)
    return "bot";
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto &[p, c] : m_cons) {
    if (!first)
      os << ", ";
    first = false;
    os << p.first << " < " << p.second;
    if (c >= 0)
      os << " + " << c;
    else
      os << " - " << -c;
  }
  os << "}";
  return os.str();
}

} // namespace prodint
