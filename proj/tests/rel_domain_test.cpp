#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prodint/diff_store.hpp"
#include "prodint/num_transfer.hpp"

#include "test_support.hpp"

using namespace prodint;

namespace {

using constraint = diff_store::constraint;

diff_store mk(std::initializer_list<constraint> cs) {
  return diff_store::from_constraints(std::vector<constraint>(cs));
}

cond rel_lt(const std::string &x, const std::string &y, std::int64_t c = 0) {
  expr rhs = c == 0 ? expr::variable(y)
                    : expr::add(expr::variable(y), expr::constant(c));
  return cond::relation(cond::rel_op::lt, expr::variable(x), std::move(rhs));
}

// All stores over the given variables with values in [-8..8].
std::vector<std::map<std::string, std::int64_t>>
enumerate_stores(const std::vector<std::string> &vars) {
  std::vector<std::map<std::string, std::int64_t>> out;
  std::map<std::string, std::int64_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == vars.size()) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = -8; v <= 8; ++v) {
      cur[vars[i]] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

const std::vector<std::string> kVars = {"x", "y", "z"};

} // namespace

TEST_CASE("closure chains constraints with the strict offset") {
  // Composing x < y + c1 and y < z + c2 yields x < z + (c1 + c2 - 1); the
  // section-3 instances pin the arithmetic.
  const diff_store a = mk({{"i", "l", 0}, {"l", "len", 1}});
  CHECK(a.entails("i", "len", 0));

  const diff_store b = mk({{"i", "l", 0}, {"l", "len", 2}});
  CHECK(b.entails("i", "len", 1));
  CHECK_FALSE(b.entails("i", "len", 0));

  // Infeasible cycle: i < l and l < i has no integer solutions.
  const diff_store c = mk({{"i", "l", 0}, {"l", "i", 0}});
  CHECK(c.is_bottom());
  bool any = false;
  for (std::int64_t i = -8; i <= 8 && !any; ++i)
    for (std::int64_t l = -8; l <= 8 && !any; ++l)
      if (i < l && l < i)
        any = true;
  CHECK_FALSE(any);
}

TEST_CASE("closure is idempotent") {
  const auto stores = test::random_diff_stores(40, 0x15E0);
  for (const diff_store &s : stores)
    CHECK(s.close() == s.close().close());
}

TEST_CASE("join keeps the weaker constraint on common pairs") {
  const diff_store then_branch = mk({{"l", "len", 2}});
  const diff_store else_branch = mk({{"l", "len", 1}, {"len", "l", 1}});
  const diff_store j = then_branch.join(else_branch);
  CHECK(j == mk({{"l", "len", 2}}));

  const diff_store s = mk({{"x", "y", 0}});
  CHECK(s.join(diff_store::bottom()) == s);
  CHECK(diff_store::bottom().join(s) == s);

  CHECK(mk({{"x", "y", 0}}).join(mk({{"y", "x", 0}})) == diff_store::top());
}

TEST_CASE("assume adds and closes") {
  CHECK(diff_store::top().assume(rel_lt("i", "l")) == mk({{"i", "l", 0}}));

  // Equality-style allocation facts arrive as two strict constraints.
  diff_store s = diff_store::top();
  s = s.assume(cond::relation(cond::rel_op::lt, expr::variable("len"),
                              expr::add(expr::variable("l"),
                                        expr::constant(1))));
  s = s.assume(cond::relation(cond::rel_op::lt, expr::variable("l"),
                              expr::add(expr::variable("len"),
                                        expr::constant(1))));
  CHECK(s.entails("len", "l", 1));
  CHECK(s.entails("l", "len", 1));

  CHECK(mk({{"l", "i", 0}}).assume(rel_lt("i", "l")).is_bottom());

  // Unsupported shapes are ignored, never unsound.
  const diff_store t = mk({{"x", "y", 0}});
  CHECK(t.assume(cond::relation(cond::rel_op::lt, expr::variable("x"),
                                expr::constant(5))) == t);
}

TEST_CASE("assignment transfer: shift, equality gen, kill") {
  // i := i + 1 shifts constraints mentioning i.
  CHECK(mk({{"i", "l", 0}}).assign("i", expr::add(expr::variable("i"),
                                                  expr::constant(1))) ==
        mk({{"i", "l", 1}}));

  // len := l generates the two-sided bound.
  CHECK(diff_store::top().assign("len", expr::variable("l")) ==
        mk({{"len", "l", 1}, {"l", "len", 1}}));

  // Constant assignment only kills.
  CHECK(mk({{"x", "y", 0}}).assign("x", expr::constant(5)) ==
        diff_store::top());
}

TEST_CASE("self-shift assignment matches the substitution oracle") {
  // For every store in gamma(s), updating i to i+1 must land in
  // gamma(assign(i, i+1, s)).
  const diff_store s = mk({{"i", "l", 0}, {"l", "z", 3}});
  const diff_store t =
      s.assign("i", expr::add(expr::variable("i"), expr::constant(1)));
  for (auto store : enumerate_stores({"i", "l", "z"})) {
    if (!s.admits(store))
      continue;
    auto updated = store;
    updated["i"] = store["i"] + 1;
    CHECK(t.admits(updated));
  }
}

TEST_CASE("entailment checks the closed store") {
  CHECK(mk({{"i", "l", 0}, {"l", "len", 1}}).entails("i", "len", 0));
  CHECK_FALSE(mk({{"i", "l", 0}, {"l", "len", 2}}).entails("i", "len", 0));
  CHECK(diff_store::bottom().entails("a", "b", -100));
  CHECK(diff_store::bottom().entails(rel_lt("a", "b", -5)));
}

TEST_CASE("soundness versus full enumeration") {
  const auto stores = enumerate_stores(kVars);
  const auto pool = test::random_diff_stores(18, 0xA11CE);
  const auto conds = std::vector<cond>{
      rel_lt("x", "y"), rel_lt("y", "z", 2), rel_lt("z", "x", -1),
      cond::relation(cond::rel_op::le, expr::variable("x"),
                     expr::variable("z")),
      cond::relation(cond::rel_op::eq, expr::variable("x"),
                     expr::variable("y")),
  };

  auto cond_holds = [](const cond &c,
                       const std::map<std::string, std::int64_t> &st) {
    auto val = [&](const expr &e) -> std::int64_t {
      if (e.is_variable())
        return st.at(e.var());
      if (e.is_constant())
        return e.value();
      return st.at(e.lhs().var()) + e.rhs().value();
    };
    const std::int64_t lv = val(c.lhs()), rv = val(c.rhs());
    switch (c.op()) {
    case cond::rel_op::lt:
      return lv < rv;
    case cond::rel_op::le:
      return lv <= rv;
    case cond::rel_op::eq:
      return lv == rv;
    default:
      return true;
    }
  };

  for (const diff_store &s1 : pool) {
    // entails(c) implies gamma(s1) <= [[c]].
    for (const cond &c : conds) {
      if (!s1.entails(c))
        continue;
      for (const auto &st : stores)
        if (s1.admits(st))
          CHECK(cond_holds(c, st));
    }

    for (const diff_store &s2 : pool) {
      const diff_store j = s1.join(s2);
      const diff_store m = s1.meet(s2);
      for (const auto &st : stores) {
        const bool in1 = s1.admits(st), in2 = s2.admits(st);
        if (in1 || in2)
          CHECK(j.admits(st));
        CHECK(m.admits(st) == (in1 && in2));
      }
    }

    for (const cond &c : conds) {
      const diff_store r = s1.assume(c);
      for (const auto &st : stores)
        if (s1.admits(st) && cond_holds(c, st))
          CHECK(r.admits(st));
    }
  }
}

TEST_CASE("join is the least upper bound on closed stores") {
  std::mt19937 rng(0x1B);
  const auto pool = test::random_diff_stores(24, 0x5EED);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int round = 0; round < 200; ++round) {
    const diff_store &s1 = pool[pick(rng)];
    const diff_store &s2 = pool[pick(rng)];
    const diff_store &u = pool[pick(rng)];
    const diff_store j = s1.join(s2);
    CHECK(s1.leq(j));
    CHECK(s2.leq(j));
    if (s1.leq(u) && s2.leq(u))
      CHECK(j.leq(u));
  }
}

TEST_CASE("widening only drops constraints and terminates") {
  const auto pool = test::random_diff_stores(24, 0x77);
  for (const diff_store &a : pool)
    for (const diff_store &b : pool) {
      const diff_store w = a.widen(b);
      CHECK(a.leq(w));
      CHECK(b.leq(w));
      for (auto &[p, c] : w.constraints())
        CHECK(a.entails(p.first, p.second, c));
    }

  // Iterated widening over any sequence stabilizes quickly.
  diff_store x = pool[2];
  int changes = 0;
  for (int i = 0; i < 200; ++i) {
    const diff_store next = x.widen(x.join(pool[i % pool.size()]));
    if (!(next == x)) {
      ++changes;
      x = next;
    }
  }
  CHECK(changes <= 64);
}
