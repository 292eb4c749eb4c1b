#pragma once

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace prodint {
namespace detail {

template <class T>
std::string cex2(const char *what, const T &a, const T &b) {
  std::ostringstream os;
  os << what << " a=" << a.str() << " b=" << b.str();
  return os.str();
}

template <class T>
std::string cex3(const char *what, const T &a, const T &b, const T &c) {
  std::ostringstream os;
  os << what << " a=" << a.str() << " b=" << b.str() << " c=" << c.str();
  return os.str();
}

template <class T> struct law_ctx {
  const std::vector<T> &samples;
  std::size_t n_points;
  const std::function<bool(const T &, std::size_t)> &gamma;
  const law_options &opt;

  bool gamma_subset(const T &a, const T &b) const {
    for (std::size_t p = 0; p < n_points; ++p)
      if (gamma(a, p) && !gamma(b, p))
        return false;
    return true;
  }
};

// One sample's worth of unary laws; violations are tagged with `base` plus
// a per-law offset so serial and parallel schedules order identically.
template <class T>
std::uint64_t check_unary(const law_ctx<T> &ctx, std::size_t i,
                          std::uint64_t base,
                          std::vector<law_violation> &out) {
  const T &a = ctx.samples[i];
  std::uint64_t checked = 0;
  auto bad = [&](const char *law, const std::string &cex) {
    out.push_back({base + checked, law, cex});
  };
  ++checked;
  if (!(a.join(a) == a))
    bad("join-idempotent", "a=" + a.str());
  ++checked;
  if (!(a.meet(a) == a))
    bad("meet-idempotent", "a=" + a.str());
  ++checked;
  if (!a.leq(a))
    bad("leq-reflexive", "a=" + a.str());
  return checked;
}

template <class T>
std::uint64_t check_pair(const law_ctx<T> &ctx, std::size_t i, std::size_t j,
                         std::uint64_t base,
                         std::vector<law_violation> &out) {
  const T &a = ctx.samples[i];
  const T &b = ctx.samples[j];
  std::uint64_t checked = 0;
  auto bad = [&](const char *law, const std::string &cex) {
    out.push_back({base + checked, law, cex});
  };

  const T ab = a.join(b);
  ++checked;
  if (!(ab == b.join(a)))
    bad("join-commutative", cex2("join(a,b) != join(b,a)", a, b));

  const T m_ab = a.meet(b);
  ++checked;
  if (!(m_ab == b.meet(a)))
    bad("meet-commutative", cex2("meet(a,b) != meet(b,a)", a, b));

  ++checked;
  if (!(a.join(m_ab) == a))
    bad("absorption", cex2("a join (a meet b) != a", a, b));
  ++checked;
  if (!(a.meet(ab) == a))
    bad("absorption", cex2("a meet (a join b) != a", a, b));

  ++checked;
  if (a.leq(b) != (ab == b))
    bad("leq-join-consistency", cex2("leq(a,b) <=> join(a,b)=b", a, b));

  ++checked;
  if (a.leq(b) && b.leq(a) && !(a == b))
    bad("leq-antisymmetric", cex2("a<=b, b<=a, a!=b", a, b));

  const T w = a.widen(b);
  ++checked;
  if (!ab.leq(w))
    bad("widening-covers-join", cex2("join(a,b) not <= widen(a,b)", a, b));

  const std::size_t pair_index = i * ctx.samples.size() + j;
  if (pair_index < ctx.opt.max_gamma_pairs) {
    ++checked;
    if (a.leq(b) && !ctx.gamma_subset(a, b))
      bad("gamma-monotone", cex2("a<=b but gamma(a) !<= gamma(b)", a, b));
    ++checked;
    bool sound = true;
    for (std::size_t p = 0; p < ctx.n_points && sound; ++p)
      if ((ctx.gamma(a, p) || ctx.gamma(b, p)) && !ctx.gamma(ab, p))
        sound = false;
    if (!sound)
      bad("gamma-join-sound",
          cex2("gamma(a) u gamma(b) !<= gamma(join)", a, b));
  }
  return checked;
}

template <class T>
std::uint64_t check_triple(const law_ctx<T> &ctx, std::size_t i, std::size_t j,
                           std::size_t k, std::uint64_t base,
                           std::vector<law_violation> &out) {
  const T &a = ctx.samples[i];
  const T &b = ctx.samples[j];
  const T &c = ctx.samples[k];
  std::uint64_t checked = 0;
  auto bad = [&](const char *law, const std::string &cex) {
    out.push_back({base + checked, law, cex});
  };

  ++checked;
  if (!(a.join(b).join(c) == a.join(b.join(c))))
    bad("join-associative", cex3("(a|b)|c != a|(b|c)", a, b, c));
  ++checked;
  if (!(a.meet(b).meet(c) == a.meet(b.meet(c))))
    bad("meet-associative", cex3("(a&b)&c != a&(b&c)", a, b, c));
  ++checked;
  if (a.leq(b) && b.leq(c) && !a.leq(c))
    bad("leq-transitive", cex3("a<=b<=c but a!<=c", a, b, c));
  return checked;
}

// Widening termination on ascending chains built from the sample pool:
// x <- widen(x, x join y) must stop changing within the budget.
template <class T>
std::uint64_t check_widening_chains(const law_ctx<T> &ctx, std::uint64_t base,
                                    std::vector<law_violation> &out) {
  const std::size_t n = ctx.samples.size();
  std::uint64_t checked = 0;
  const std::size_t steps = std::max<std::size_t>(4 * n, 256);
  for (std::size_t start = 0; start < n; ++start) {
    ++checked;
    T x = ctx.samples[start];
    int escalations = 0;
    for (std::size_t s = 0; s < steps; ++s) {
      const T &y = ctx.samples[(start + 1 + s) % n];
      T next = x.widen(x.join(y));
      if (!(next == x)) {
        if (++escalations > ctx.opt.widening_budget) {
          out.push_back({base + start, "widening-terminates",
                         "chain from a=" + ctx.samples[start].str() +
                             " exceeded " +
                             std::to_string(ctx.opt.widening_budget) +
                             " escalations"});
          break;
        }
        x = next;
      }
    }
  }
  return checked;
}

struct law_bases {
  std::uint64_t pair_base, triple_base, chain_base;
  static law_bases for_n(std::size_t n) {
    const std::uint64_t u = kUnaryStride * n;
    const std::uint64_t p = u + kPairStride * n * n;
    const std::uint64_t t =
        p + kTripleStride * static_cast<std::uint64_t>(n) * n * n;
    return {u, p, t};
  }
  static constexpr std::uint64_t kUnaryStride = 8, kPairStride = 16,
                                 kTripleStride = 8;
};

// Serial reference implementation: plain loops, kept for testing against
// the OpenMP kernel below.
template <class T>
void run_laws_serial(const law_ctx<T> &ctx,
                     std::vector<law_violation> &violations,
                     std::uint64_t &checked) {
  const std::size_t n = ctx.samples.size();
  const auto bases = law_bases::for_n(n);
  for (std::size_t u = 0; u < n; ++u)
    checked +=
        check_unary(ctx, u, u * law_bases::kUnaryStride, violations);
  for (std::size_t p = 0; p < n * n; ++p)
    checked += check_pair(ctx, p / n, p % n,
                          bases.pair_base + p * law_bases::kPairStride,
                          violations);
  for (std::size_t t = 0; t < n * n * n; ++t) {
    const std::size_t i = t / (n * n), j = (t / n) % n, k = t % n;
    checked += check_triple(ctx, i, j, k,
                            bases.triple_base + t * law_bases::kTripleStride,
                            violations);
  }
}

// OpenMP kernel over the same flat schedule. Violations carry schedule
// indexes, so after the final sort the report is bit-identical to the
// serial one. Falls back to the serial loops when built without OpenMP.
template <class T>
void run_laws_parallel(const law_ctx<T> &ctx,
                       std::vector<law_violation> &violations,
                       std::uint64_t &checked) {
#ifdef _OPENMP
  const std::size_t n = ctx.samples.size();
  const auto bases = law_bases::for_n(n);
  const long long nn = static_cast<long long>(n);

#pragma omp parallel
  {
    std::vector<law_violation> local;
    std::uint64_t local_checked = 0;

#pragma omp for schedule(static) nowait
    for (long long u = 0; u < nn; ++u)
      local_checked +=
          check_unary(ctx, u, u * law_bases::kUnaryStride, local);

#pragma omp for schedule(static) nowait
    for (long long p = 0; p < nn * nn; ++p)
      local_checked += check_pair(ctx, p / n, p % n,
                                  bases.pair_base +
                                      p * law_bases::kPairStride,
                                  local);

#pragma omp for schedule(static) nowait
    for (long long t = 0; t < nn * nn * nn; ++t) {
      const std::size_t i = t / (n * n), j = (t / n) % n, k = t % n;
      local_checked += check_triple(
          ctx, i, j, k, bases.triple_base + t * law_bases::kTripleStride,
          local);
    }

#pragma omp critical
    {
      checked += local_checked;
      violations.insert(violations.end(), local.begin(), local.end());
    }
  }
#else
  run_laws_serial(ctx, violations, checked);
#endif
}

} // namespace detail

template <class T>
law_report
check_laws_with_gamma(const domain_descriptor &d, const std::vector<T> &samples,
                      std::size_t n_points,
                      const std::function<bool(const T &, std::size_t)> &gamma,
                      law_options opt) {
  (void)d;
  if (samples.empty())
    throw std::invalid_argument("check_laws: samples must be non-empty");

  detail::law_ctx<T> ctx{samples, n_points, gamma, opt};

  law_report report;
  std::vector<law_violation> violations;
  std::uint64_t checked = 0;

  if (opt.mode == exec_mode::parallel)
    detail::run_laws_parallel(ctx, violations, checked);
  else
    detail::run_laws_serial(ctx, violations, checked);

  const auto bases = detail::law_bases::for_n(samples.size());
  checked += detail::check_widening_chains(ctx, bases.chain_base, violations);

  std::sort(violations.begin(), violations.end(),
            [](const law_violation &a, const law_violation &b) {
              return a.index < b.index ||
                     (a.index == b.index && a.law < b.law);
            });
  if (violations.size() > opt.max_violations)
    violations.resize(opt.max_violations);

  report.checked = checked;
  report.violations = std::move(violations);
  return report;
}

} // namespace prodint
