#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hosup/simplify.hpp"
#include "hosup/substitution.hpp"
#include "support.hpp"

using namespace hosup;
using namespace testing_support;

namespace {

// First-order terms over a, b, g, f and the $i variables in `vars`.
struct FoGen {
  std::mt19937_64 rng;
  std::vector<VarId> vars;

  Term term(int size) {
    if (size <= 1) {
      std::size_t k = rng() % (2 + vars.size());
      if (k == 0) return a();
      if (k == 1) return b();
      return var(vars[k - 2], I());
    }
    if (size == 2 || rng() % 2) return ap(g(), term(size - 1));
    int l = 1 + static_cast<int>(rng() % static_cast<unsigned>(size - 2));
    return ap(f(), term(l), term(size - 1 - l));
  }

  std::vector<Literal> clause(int n) {
    std::vector<Literal> lits;
    for (int i = 0; i < n; ++i) {
      Term l = term(1 + static_cast<int>(rng() % 3));
      Term r = term(1 + static_cast<int>(rng() % 3));
      lits.push_back(rng() % 2 ? Literal::eq(l, r) : Literal::neq(l, r));
    }
    return lits;
  }
};

bool injective_cover(const std::vector<Literal>& gen, const std::vector<Literal>& spec,
                     std::size_t i, std::vector<bool>& used) {
  if (i == gen.size()) return true;
  for (std::size_t j = 0; j < spec.size(); ++j) {
    if (used[j] || !gen[i].same_as(spec[j])) continue;
    used[j] = true;
    if (injective_cover(gen, spec, i + 1, used)) return true;
    used[j] = false;
  }
  return false;
}

// Tries every assignment of the general clause's variables to subterms of
// the specific clause.
bool oracle_subsumes(const std::vector<Literal>& gen, const std::vector<Literal>& spec,
                     const std::vector<VarId>& gvars) {
  if (gen.size() > spec.size()) return false;
  std::vector<Term> pool;
  for (const auto& l : spec)
    for (const Term& side : {l.lhs, l.rhs})
      for (const auto& [pos, u] : first_order_subterms(side))
        if (std::find(pool.begin(), pool.end(), u) == pool.end()) pool.push_back(u);
  std::vector<std::size_t> pick(gvars.size(), 0);
  while (true) {
    Substitution s;
    for (std::size_t k = 0; k < gvars.size(); ++k) s.bind(var(gvars[k], I()), pool[pick[k]]);
    std::vector<Literal> inst;
    for (const auto& l : gen) inst.push_back(l.apply(s));
    std::vector<bool> used(spec.size(), false);
    if (injective_cover(inst, spec, 0, used)) return true;
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == pool.size()) pick[k++] = 0;
    if (k == pick.size()) return false;
  }
}

}  // namespace

TEST(Simplify, MatchBindsPatternVariables) {
  Term pat = ap(f(), var(0, I()), ap(g(), var(0, I())));
  auto s = match(pat, ap(f(), ap(g(), b()), ap(g(), ap(g(), b()))));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s->lookup(0), ap(g(), b()));
  EXPECT_FALSE(match(pat, ap(f(), a(), ap(g(), b()))).has_value());
  EXPECT_FALSE(match(ap(g(), a()), ap(g(), var(0, I()))).has_value());
}

TEST(Simplify, SubsumptionSmallCases) {
  std::vector<Literal> gen{Literal::eq(var(0, I()), a())};
  EXPECT_TRUE(subsumes(gen, {Literal::eq(ap(g(), b()), a()), Literal::neq(a(), b())}));
  EXPECT_TRUE(subsumes(gen, {Literal::eq(a(), ap(g(), b()))}));
  EXPECT_FALSE(subsumes(gen, {Literal::neq(ap(g(), b()), a())}));
  // Multiset: two copies need two targets.
  std::vector<Literal> twice{Literal::eq(var(0, I()), a()), Literal::eq(var(1, I()), a())};
  EXPECT_FALSE(subsumes(twice, {Literal::eq(b(), a())}));
  // Shared variable names on both sides are renamed apart.
  EXPECT_TRUE(subsumes({Literal::eq(ap(g(), var(0, I())), var(1, I()))},
                       {Literal::eq(ap(g(), var(1, I())), var(0, I()))}));
}

TEST(Simplify, SubsumptionAgainstBruteForce) {
  FoGen gg{std::mt19937_64(401), {0, 1}};
  FoGen sg{std::mt19937_64(402), {5, 6}};
  int positive = 0;
  for (int i = 0; i < 1500; ++i) {
    auto gen = gg.clause(1 + static_cast<int>(gg.rng() % 2));
    auto spec = sg.clause(1 + static_cast<int>(sg.rng() % 3));
    // Bias toward hits: sometimes build the specific clause as an instance.
    if (i % 3 == 0) {
      Substitution s;
      s.bind(var(0, I()), sg.term(2));
      s.bind(var(1, I()), sg.term(1));
      spec.clear();
      for (const auto& l : gen) spec.push_back(l.apply(s));
      if (sg.rng() % 2) spec.push_back(sg.clause(1)[0]);
    }
    bool want = oracle_subsumes(gen, spec, {0, 1});
    positive += want;
    ASSERT_EQ(subsumes(gen, spec), want)
        << literals_to_string(gen) << " vs " << literals_to_string(spec);
  }
  EXPECT_GT(positive, 300);
}

TEST(Simplify, Variants) {
  Term x = var(0, I()), y = var(1, I());
  std::vector<Literal> c1{Literal::eq(ap(f(), x, y), a()), Literal::neq(x, b())};
  std::vector<Literal> c2{Literal::neq(var(7, I()), b()), Literal::eq(a(), ap(f(), var(7, I()), var(3, I())))};
  EXPECT_TRUE(is_variant(c1, c2));
  std::vector<Literal> c3{Literal::eq(ap(f(), x, x), a()), Literal::neq(x, b())};
  EXPECT_FALSE(is_variant(c1, c3));
  EXPECT_FALSE(is_variant(c3, c1));
  EXPECT_FALSE(is_variant(c1, {Literal::eq(ap(f(), x, y), a())}));
}

TEST(Simplify, TrivialDuplicateAndTautology) {
  std::vector<Literal> lits{Literal::neq(a(), a()), Literal::eq(b(), a()), Literal::eq(a(), b()),
                            Literal::neq(ap(g(), a()), b())};
  EXPECT_EQ(remove_trivial_literals(lits).size(), 3u);
  EXPECT_EQ(remove_duplicate_literals(lits).size(), 3u);
  EXPECT_TRUE(is_tautology({Literal::eq(ap(g(), a()), ap(g(), a()))}));
  EXPECT_TRUE(is_tautology({Literal::eq(a(), b()), Literal::neq(b(), a())}));
  EXPECT_FALSE(is_tautology(lits));
}

TEST(Simplify, DemodulationRewritesToNormalForm) {
  OrderingConfig cfg;
  cfg.precedence = {{"a", 1}, {"b", 2}, {"c", 3}, {"g", 4}, {"f", 5}};
  auto unit = std::make_shared<Clause>();
  unit->literals = {Literal::eq(ap(g(), ap(g(), var(0, I()))), var(0, I()))};
  unit->id = 7;
  Clause cl;
  cl.literals = {Literal::neq(ap(f(), ap(g(), ap(g(), ap(g(), ap(g(), a())))), b()), c())};
  auto r = demodulate(cl, {unit}, cfg);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(literals_to_string(r->literals), literals_to_string({Literal::neq(ap(f(), a(), b()), c())}));
  EXPECT_EQ(r->used, (std::vector<ClauseId>{7}));
  Clause done;
  done.literals = {Literal::neq(ap(g(), a()), c())};
  EXPECT_FALSE(demodulate(done, {unit}, cfg).has_value());
}

TEST(Simplify, DemodulationOnlyUsesOrientedInstances) {
  OrderingConfig cfg;
  cfg.precedence = {{"a", 1}, {"b", 2}, {"c", 3}, {"g", 4}, {"f", 5}};
  // Commutativity rewrites f b a to f a b but leaves f a b alone.
  auto comm = std::make_shared<Clause>();
  comm->literals = {Literal::eq(ap(f(), var(0, I()), var(1, I())), ap(f(), var(1, I()), var(0, I())))};
  comm->id = 3;
  Clause cl;
  cl.literals = {Literal::neq(ap(f(), b(), a()), c())};
  auto r = demodulate(cl, {comm}, cfg);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->literals[0].lhs, ap(f(), a(), b()));
  Clause d;
  d.literals = {Literal::neq(ap(f(), a(), b()), c())};
  EXPECT_FALSE(demodulate(d, {comm}, cfg).has_value());
}
