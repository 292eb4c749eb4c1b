#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>

#include "prodint/num_transfer.hpp"

#include "test_support.hpp"

using namespace prodint;

namespace {

const expr X = expr::variable("x");
const expr Y = expr::variable("y");

expr k(std::int64_t v) { return expr::constant(v); }

// The expression shapes the soundness sweep runs (depth <= 2 over x, y and
// small constants).
std::vector<expr> sweep_exprs() {
  return {
      X,
      Y,
      k(0),
      k(4),
      k(-3),
      expr::add(X, k(1)),
      expr::sub(X, k(1)),
      expr::add(X, Y),
      expr::sub(X, Y),
      expr::add(Y, k(5)),
      expr::sub(k(2), X),
      expr::add(X, X),
      expr::sub(X, X),
      expr::add(expr::add(X, Y), k(1)),
      expr::sub(expr::add(X, X), Y),
      expr::add(expr::sub(X, k(1)), expr::sub(Y, k(1))),
      expr::sub(expr::add(X, k(3)), expr::add(Y, Y)),
  };
}

std::vector<cond> sweep_conds() {
  using op = cond::rel_op;
  return {
      cond::relation(op::lt, X, Y),
      cond::relation(op::le, X, k(2)),
      cond::relation(op::gt, X, k(0)),
      cond::relation(op::ge, X, Y),
      cond::relation(op::eq, X, k(4)),
      cond::relation(op::eq, X, Y),
      cond::relation(op::ne, X, k(0)),
      cond::relation(op::lt, X, expr::add(Y, k(1))),
      cond::relation(op::le, expr::add(X, k(1)), Y),
      cond::relation(op::ge, X, X),
      cond::relation(op::lt, expr::add(X, Y), k(3)),
  };
}

const finite_universe kSweepU(-16, 16);

std::int64_t concrete_eval(const expr &e,
                           const std::map<std::string, std::int64_t> &st) {
  switch (e.k()) {
  case expr::kind::constant:
    return e.value();
  case expr::kind::variable:
    return st.at(e.var());
  case expr::kind::add:
    return concrete_eval(e.lhs(), st) + concrete_eval(e.rhs(), st);
  case expr::kind::sub:
    return concrete_eval(e.lhs(), st) - concrete_eval(e.rhs(), st);
  }
  return 0;
}

bool concrete_cond(const cond &c,
                   const std::map<std::string, std::int64_t> &st) {
  const std::int64_t a = concrete_eval(c.lhs(), st);
  const std::int64_t b = concrete_eval(c.rhs(), st);
  switch (c.op()) {
  case cond::rel_op::lt:
    return a < b;
  case cond::rel_op::le:
    return a <= b;
  case cond::rel_op::gt:
    return a > b;
  case cond::rel_op::ge:
    return a >= b;
  case cond::rel_op::eq:
    return a == b;
  case cond::rel_op::ne:
    return a != b;
  }
  return false;
}

// Exhaustive soundness of eval and assume against enumerated stores.
template <class T, class EvalFn, class AssumeFn>
void sweep_domain(const std::vector<T> &samples, EvalFn eval_fn,
                  AssumeFn assume_fn) {
  for (const T &vx : samples)
    for (const T &vy : samples) {
      var_env<T> env;
      env = env.with("x", vx).with("y", vy);
      if (env.is_bottom())
        continue;
      const auto gx = gamma_enum(vx, kSweepU);
      const auto gy = gamma_enum(vy, kSweepU);

      for (const expr &e : sweep_exprs()) {
        const T out = eval_fn(e, env);
        for (std::int64_t cx : gx)
          for (std::int64_t cy : gy) {
            const std::int64_t v = concrete_eval(e, {{"x", cx}, {"y", cy}});
            if (!out.contains(v)) {
              CAPTURE(e.str());
              CAPTURE(vx.str());
              CAPTURE(vy.str());
              CAPTURE(v);
              REQUIRE(out.contains(v));
            }
          }
      }

      for (const cond &c : sweep_conds()) {
        const var_env<T> refined = assume_fn(c, env);
        REQUIRE(refined.leq(env)); // reductive
        for (std::int64_t cx : gx)
          for (std::int64_t cy : gy) {
            if (!concrete_cond(c, {{"x", cx}, {"y", cy}}))
              continue;
            if (refined.is_bottom() || !refined.get_or_top("x").contains(cx) ||
                !refined.get_or_top("y").contains(cy)) {
              CAPTURE(c.str());
              CAPTURE(vx.str());
              CAPTURE(vy.str());
              REQUIRE(false);
            }
          }
      }
    }
}

} // namespace

TEST_CASE("interval evaluation examples") {
  var_env<interval> env;
  env = env.with("i", interval::range(0, 0));
  CHECK(interval_eval(expr::add(expr::variable("i"), k(1)), env) ==
        interval::range(1, 1));

  var_env<interval> env2;
  env2 = env2.with("x", interval::constant(100));
  CHECK(interval_eval(expr::sub(expr::variable("x"), k(1)), env2) ==
        interval::range(99, 99));

  var_env<interval> env3;
  env3 = env3.with("l", interval::make(ext_int::minus_inf(), ext_int(2)));
  CHECK(interval_eval(expr::variable("l"), env3) ==
        interval::make(ext_int::minus_inf(), ext_int(2)));

  CHECK_THROWS_AS(interval_eval(expr::variable("ghost"), env),
                  unbound_variable);
}

TEST_CASE("interval guard refinement examples") {
  // i < len with len unbounded above: nothing learned about i.
  var_env<interval> env;
  env =
      env.with("i", interval::at_least(0)).with("len", interval::at_least(1));
  const auto r = interval_assume(
      cond::relation(cond::rel_op::lt, expr::variable("i"),
                     expr::variable("len")),
      env);
  CHECK(r.get("i") == interval::at_least(0));

  var_env<interval> env2;
  env2 = env2.with("l", interval::top());
  const auto r2 = interval_assume(
      cond::relation(cond::rel_op::le, expr::variable("l"), k(2)), env2);
  CHECK(r2.get("l") == interval::at_most(2));

  var_env<interval> env3;
  env3 = env3.with("x", interval::range(0, 0));
  const auto r3 = interval_assume(
      cond::relation(cond::rel_op::gt, expr::variable("x"), k(0)), env3);
  CHECK(r3.is_bottom());
}

TEST_CASE("parity evaluation examples") {
  var_env<parity> env;
  env = env.with("i", parity::even());
  CHECK(parity_eval(expr::add(expr::variable("i"), k(1)), env) ==
        parity::odd());
  CHECK(parity_eval(k(0), var_env<parity>()) == parity::even());

  // i + i is even whatever i is; the enumeration oracle agrees.
  var_env<parity> envt;
  envt = envt.with("i", parity::top());
  CHECK(parity_eval(expr::add(expr::variable("i"), expr::variable("i")),
                    envt) == parity::even());
  std::set<std::int64_t> sums;
  for (std::int64_t i = -8; i <= 8; ++i)
    sums.insert(i + i);
  CHECK(parity::from_set(sums) == parity::even());
}

TEST_CASE("sign transfer examples from the Boolean-power trace") {
  var_env<sign> env;
  env = env.with("x", sign::pos());
  CHECK(sign_eval(expr::sub(expr::variable("x"), k(1)), env) ==
        sign::geq_zero());

  var_env<sign> env0p;
  env0p = env0p.with("x", sign::geq_zero());
  const cond gt0 = cond::relation(cond::rel_op::gt, expr::variable("x"), k(0));
  CHECK(sign_assume(gt0, env0p).get("x") == sign::pos());
  CHECK(sign_assume(gt0.negate(), env0p).get("x") == sign::zero());

  // The remaining x - 1 transitions: sound, and these are the exact ones.
  CHECK(sign_eval(expr::sub(expr::variable("x"), k(1)), env0p) == sign::top());
  var_env<sign> envz;
  envz = envz.with("x", sign::zero());
  CHECK(sign_eval(expr::sub(expr::variable("x"), k(1)), envz) == sign::neg());
  var_env<sign> envn;
  envn = envn.with("x", sign::neg());
  CHECK(sign_eval(expr::sub(expr::variable("x"), k(1)), envn) == sign::neg());
}

TEST_CASE("congruence evaluation examples with enumeration oracles") {
  // alpha({4}): the largest modulus (up to 64) whose multiples include 4.
  std::uint64_t best = 0;
  for (std::uint64_t m = 1; m <= 64; ++m)
    if (congruence::modulus(m).contains(4))
      best = std::max(best, m);
  CHECK(best == 4);
  CHECK(congruence_eval(k(4), var_env<congruence>()) ==
        congruence::modulus(4));

  // x + y from 4Z and 6Z: enumerate members in [-64..64].
  const finite_universe u64(-64, 64);
  const auto g4 = gamma_enum(congruence::modulus(4), u64);
  const auto g6 = gamma_enum(congruence::modulus(6), u64);
  std::set<std::int64_t> sums;
  for (auto a : g4)
    for (auto b : g6)
      sums.insert(a + b);
  CHECK(congruence::from_set(sums) == congruence::modulus(2));
  var_env<congruence> env;
  env =
      env.with("x", congruence::modulus(4)).with("y", congruence::modulus(6));
  CHECK(congruence_eval(expr::add(expr::variable("x"), expr::variable("y")),
                        env) == congruence::modulus(2));

  var_env<congruence> envb = var_env<congruence>::bottom();
  CHECK(congruence_eval(expr::variable("x"), envb) == congruence::bottom());
}

TEST_CASE("congruence join/meet match gcd/lcm oracles up to 64") {
  for (std::uint64_t m = 0; m <= 64; ++m)
    for (std::uint64_t n = 0; n <= 64; ++n) {
      CHECK(congruence::modulus(m).join(congruence::modulus(n)) ==
            congruence::modulus(std::gcd(m, n)));
      CHECK(congruence::modulus(m).meet(congruence::modulus(n)) ==
            congruence::modulus(std::lcm(m, n)));
    }
}

TEST_CASE("bool_eval_cond classifies conditions") {
  const cond gt0 = cond::relation(cond::rel_op::gt, expr::variable("x"), k(0));

  var_env<sign> pos_env;
  pos_env = pos_env.with("x", sign::pos());
  numeric_view nv;
  nv.signs = &pos_env;
  CHECK(bool_eval_cond(gt0, nv) == bool_abs::tt());

  var_env<sign> zp_env;
  zp_env = zp_env.with("x", sign::geq_zero());
  nv.signs = &zp_env;
  CHECK(bool_eval_cond(gt0, nv) == bool_abs::top());

  var_env<sign> bot_env = var_env<sign>::bottom();
  nv.signs = &bot_env;
  CHECK(bool_eval_cond(gt0, nv) == bool_abs::bottom());

  var_env<sign> neg_env;
  neg_env = neg_env.with("x", sign::neg());
  nv.signs = &neg_env;
  CHECK(bool_eval_cond(gt0, nv) == bool_abs::ff());
}

TEST_CASE("parity and sign operator tables are exact") {
  const finite_universe u = kSweepU;
  for (const parity &a : parity::all())
    for (const parity &b : parity::all()) {
      std::set<std::int64_t> sums, diffs;
      for (auto va : gamma_enum(a, u))
        for (auto vb : gamma_enum(b, u)) {
          sums.insert(va + vb);
          diffs.insert(va - vb);
        }
      CHECK(a.add(b) == parity::from_set(sums));
      CHECK(a.sub(b) == parity::from_set(diffs));
    }
  for (const sign &a : sign::all())
    for (const sign &b : sign::all()) {
      var_env<sign> env;
      env = env.with("x", a).with("y", b);
      if (env.is_bottom())
        continue;
      std::set<std::int64_t> sums, diffs;
      for (auto va : gamma_enum(a, u))
        for (auto vb : gamma_enum(b, u)) {
          sums.insert(va + vb);
          diffs.insert(va - vb);
        }
      CHECK(sign_eval(expr::add(X, Y), env) == sign::from_set(sums));
      CHECK(sign_eval(expr::sub(X, Y), env) == sign::from_set(diffs));
    }
}

TEST_CASE("exhaustive soundness sweep: interval") {
  std::vector<interval> samples = {
      interval::bottom(),     interval::top(),       interval::constant(0),
      interval::constant(7),  interval::constant(-3), interval::range(-2, 5),
      interval::range(2, 4),  interval::at_least(1), interval::at_most(-1),
      interval::range(-16, 16),
  };
  sweep_domain<interval>(
      samples,
      [](const expr &e, const var_env<interval> &env) {
        return interval_eval(e, env);
      },
      [](const cond &c, const var_env<interval> &env) {
        return interval_assume(c, env);
      });
}

TEST_CASE("exhaustive soundness sweep: parity") {
  std::vector<parity> samples(parity::all().begin(), parity::all().end());
  sweep_domain<parity>(
      samples,
      [](const expr &e, const var_env<parity> &env) {
        return parity_eval(e, env);
      },
      [](const cond &c, const var_env<parity> &env) {
        return parity_assume(c, env);
      });
}

TEST_CASE("exhaustive soundness sweep: sign") {
  std::vector<sign> samples(sign::all().begin(), sign::all().end());
  sweep_domain<sign>(
      samples,
      [](const expr &e, const var_env<sign> &env) {
        return sign_eval(e, env);
      },
      [](const cond &c, const var_env<sign> &env) {
        return sign_assume(c, env);
      });
}

TEST_CASE("exhaustive soundness sweep: congruence") {
  std::vector<congruence> samples = {
      congruence::bottom(),   congruence::top(),      congruence::modulus(0),
      congruence::modulus(2), congruence::modulus(3), congruence::modulus(4),
      congruence::modulus(6), congruence::modulus(8),
  };
  sweep_domain<congruence>(
      samples,
      [](const expr &e, const var_env<congruence> &env) {
        return congruence_eval(e, env);
      },
      [](const cond &c, const var_env<congruence> &env) {
        return congruence_assume(c, env);
      });
}
