#include <gtest/gtest.h>

#include "hosup/calculus.hpp"
#include "hosup/simplify.hpp"
#include "support.hpp"

using namespace hosup;
using namespace testing_support;

namespace {

Clause clause(std::vector<Literal> lits, ClauseId id = 1) {
  Clause c;
  c.literals = std::move(lits);
  c.id = id;
  c.age = id;
  return c;
}

CalculusConfig config(unsigned depth, std::vector<std::vector<Literal>> input) {
  CalculusConfig cfg;
  cfg.unif.depth = depth;
  cfg.ordering = OrderingConfig::from_clauses(input);
  return cfg;
}

bool has_variant(const std::vector<Clause>& cs, const std::vector<Literal>& lits) {
  for (const auto& c : cs)
    if (is_variant(c.literals, lits)) return true;
  return false;
}

std::string dump(const std::vector<Clause>& cs) {
  std::string s;
  for (const auto& c : cs) s += "  " + literals_to_string(c.literals) + "\n";
  return s;
}

Term fx() { return sym("f", iii()); }
Term X(VarId v) { return var(v, iii()); }

}  // namespace

TEST(Calculus, ExampleOneEqResChain) {
  // x a b != f b a | x c d != f b a at depth 1.
  Term fba = ap(fx(), b(), a());
  Clause c0 = clause({Literal::neq(ap(X(0), a(), b()), fba), Literal::neq(ap(X(0), c(), d()), fba)});
  auto cfg = config(1, {c0.literals});

  auto step1 = equality_resolution(c0, cfg);
  Term x1 = X(1), x2 = X(2);
  std::vector<Literal> c1{Literal::neq(ap(fx(), ap(x1, a(), b()), ap(x2, a(), b())), fba),
                          Literal::neq(ap(fx(), ap(x1, c(), d()), ap(x2, c(), d())), fba)};
  ASSERT_TRUE(has_variant(step1, c1)) << dump(step1);

  auto step2 = equality_resolution(clause(c1, 2), cfg);
  std::vector<Literal> c2{Literal::neq(ap(x2, a(), b()), a()),
                          Literal::neq(ap(fx(), b(), ap(x2, c(), d())), fba)};
  ASSERT_TRUE(has_variant(step2, c2)) << dump(step2);

  // Resolving the lighter literal, as in the worked example.
  auto step3 = equality_resolution_at(clause(c2, 3), 0, cfg);
  ASSERT_TRUE(has_variant(step3, {Literal::neq(fba, fba)})) << dump(step3);
  // The heaviest-literal selection resolves the other one instead.
  auto step3h = equality_resolution(clause(c2, 3), cfg);
  ASSERT_TRUE(has_variant(step3h, {Literal::neq(a(), a())})) << dump(step3h);
}

TEST(Calculus, ExampleTwoSteps) {
  Term fc = sym("f", ii()), gc = sym("g", ii()), hc = sym("h", iii());
  Term y = var(0, ii()), z = var(1, ii()), x = var(2, ii());
  Clause c1 = clause({Literal::eq(ap(fc, a()), c())}, 1);
  Clause c2 = clause({Literal::neq(ap(hc, ap(y, b()), ap(y, a())),
                                   ap(hc, ap(gc, ap(fc, b())), ap(gc, c())))},
                     2);
  auto cfg = config(0, {c1.literals, c2.literals});
  ASSERT_TRUE(cfg.imitate_project());

  std::vector<Literal> c3{Literal::neq(ap(y, b()), ap(gc, ap(fc, b()))), Literal::neq(ap(y, a()), ap(gc, c()))};
  auto r3 = equality_resolution(c2, cfg);
  ASSERT_TRUE(has_variant(r3, c3)) << dump(r3);

  std::vector<Literal> c4{Literal::neq(ap(gc, ap(z, b())), ap(gc, ap(fc, b()))),
                          Literal::neq(ap(gc, ap(z, a())), ap(gc, c()))};
  auto r4 = imitate_rule(clause(c3, 3), cfg);
  ASSERT_TRUE(has_variant(r4, c4)) << dump(r4);

  std::vector<Literal> c5{Literal::neq(ap(z, b()), ap(fc, b())), Literal::neq(ap(z, a()), c())};
  auto r45 = equality_resolution(clause(c4, 4), cfg);
  ASSERT_FALSE(r45.empty());
  bool reached = false;
  for (const auto& mid : r45)
    reached = reached || has_variant(equality_resolution(clause(mid.literals, 5), cfg), c5);
  ASSERT_TRUE(reached);

  auto r5 = imitate_rule(clause(c5, 6), cfg);
  bool c6_found = false;
  std::vector<Literal> c6{Literal::neq(ap(x, b()), b()), Literal::neq(ap(fc, ap(x, a())), c())};
  for (const auto& mid : r5) c6_found = c6_found || has_variant(equality_resolution(clause(mid.literals, 7), cfg), c6);
  ASSERT_TRUE(c6_found);

  auto r7 = superposition(c1, clause(c6, 8), cfg);
  std::vector<Literal> c7{Literal::neq(ap(x, b()), b()), Literal::neq(c(), c()), Literal::neq(ap(x, a()), a())};
  ASSERT_TRUE(has_variant(r7, c7)) << dump(r7);

  // The projection x -> λw. w closes both remaining literals.
  auto r8 = project_rule(clause({Literal::neq(ap(x, b()), b()), Literal::neq(ap(x, a()), a())}, 9), cfg);
  ASSERT_TRUE(has_variant(r8, {Literal::neq(b(), b()), Literal::neq(a(), a())})) << dump(r8);
}

TEST(Calculus, SuperpositionFirstOrder) {
  // f a = c into g (f a) != d.
  Term fc = sym("f", ii());
  Clause l = clause({Literal::eq(ap(fc, a()), c())}, 1);
  Clause r = clause({Literal::neq(ap(g(), ap(fc, a())), d())}, 2);
  auto cfg = config(2, {l.literals, r.literals});
  auto out = superposition(l, r, cfg);
  ASSERT_TRUE(has_variant(out, {Literal::neq(ap(g(), c()), d())})) << dump(out);
  for (const auto& cl : out) {
    EXPECT_EQ(cl.derivation.rule, Rule::Sup);
    EXPECT_EQ(cl.derivation.premises, (std::vector<ClauseId>{1, 2}));
  }
  // Never rewrites with the smaller side.
  EXPECT_FALSE(has_variant(out, {Literal::neq(ap(g(), ap(fc, a())), d())}));
}

TEST(Calculus, SuperpositionSkipsVariablePositions) {
  Clause l = clause({Literal::eq(ap(g(), a()), b())}, 1);
  Clause r = clause({Literal::neq(var(0, I()), c())}, 2);
  auto cfg = config(2, {l.literals, r.literals});
  EXPECT_TRUE(superposition(l, r, cfg).empty());
}

TEST(Calculus, SuperpositionWithVariables) {
  // g X = X into f (g a) b != c gives f a b != c.
  Clause l = clause({Literal::eq(ap(g(), var(0, I())), var(0, I()))}, 1);
  Clause r = clause({Literal::neq(ap(fx(), ap(g(), a()), b()), c())}, 2);
  auto cfg = config(2, {l.literals, r.literals});
  auto out = superposition(l, r, cfg);
  ASSERT_TRUE(has_variant(out, {Literal::neq(ap(fx(), a(), b()), c())})) << dump(out);
}

TEST(Calculus, EqualityFactoring) {
  // g a = b | g a = c  gives  b != c | g a = c.
  Clause cl = clause({Literal::eq(ap(g(), a()), b()), Literal::eq(ap(g(), a()), c())});
  auto cfg = config(2, {cl.literals});
  auto out = equality_factoring(cl, cfg);
  bool found = false;
  for (const auto& r : out) {
    ASSERT_EQ(r.derivation.rule, Rule::EqFact);
    if (r.literals.size() == 2 && !r.literals[0].positive && r.literals[1].positive) found = true;
  }
  EXPECT_TRUE(found) << dump(out);
}

TEST(Calculus, ArgCongAddsArguments) {
  // g = f a at type $i > $i.
  Clause cl = clause({Literal::eq(g(), ap(fx(), a()))});
  auto cfg = config(2, {cl.literals});
  auto out = arg_cong(cl, cfg);
  ASSERT_EQ(out.size(), 1u);
  ASSERT_EQ(out[0].literals.size(), 1u);
  const Literal& l = out[0].literals[0];
  EXPECT_TRUE(l.positive);
  EXPECT_EQ(l.lhs.type(), I());
  ASSERT_EQ(l.lhs.num_args(), 1u);
  EXPECT_TRUE(l.lhs.args()[0].is_var());
  EXPECT_EQ(l.rhs.args().back(), l.lhs.args()[0]);
}

TEST(Calculus, FlexFlexSimp) {
  Term x = var(3, ii()), y = var(4, ii());
  Clause ff = clause({Literal::neq(ap(x, a()), ap(y, b())), Literal::neq(ap(y, c()), ap(x, ap(g(), a())))});
  auto r = flex_flex_simp(ff);
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(r->is_empty());
  EXPECT_EQ(r->derivation.rule, Rule::FlexFlexSimp);
  Clause mixed = clause({Literal::neq(ap(x, a()), ap(y, b())), Literal::neq(ap(x, a()), b())});
  EXPECT_FALSE(flex_flex_simp(mixed).has_value());
  EXPECT_FALSE(flex_flex_simp(clause({Literal::eq(ap(x, a()), ap(y, b()))})).has_value());
}

TEST(Calculus, FlexFlexLiteralsAreNeverResolved) {
  Term x = var(3, ii()), y = var(4, ii());
  Clause ff = clause({Literal::neq(ap(x, a()), ap(y, b()))});
  auto cfg = config(2, {ff.literals});
  EXPECT_TRUE(equality_resolution(ff, cfg).empty());
}

TEST(Calculus, ImitateProjectOnlyAtDepthZero) {
  Term y = var(0, ii());
  Clause cl = clause({Literal::neq(ap(y, a()), ap(g(), b()))});
  auto d1 = config(1, {cl.literals});
  EXPECT_TRUE(imitate_rule(cl, d1).empty());
  EXPECT_TRUE(project_rule(cl, d1).empty());
  auto d0 = config(0, {cl.literals});
  auto im = imitate_rule(cl, d0);
  ASSERT_EQ(im.size(), 1u);
  EXPECT_EQ(im[0].literals[0].lhs.head(), g());
  auto pr = project_rule(cl, d0);
  ASSERT_EQ(pr.size(), 1u);
  EXPECT_EQ(pr[0].literals[0].lhs, a());
  auto app = d0;
  app.unif.applicative = true;
  EXPECT_TRUE(imitate_rule(cl, app).empty());
}

TEST(Calculus, ConstraintsFollowTheResolvedLiteral) {
  // Depth 0: y a != g b stays a constraint in the EqRes conclusion.
  Term y = var(0, ii());
  Clause cl = clause({Literal::eq(a(), b()), Literal::neq(ap(g(), ap(y, a())), ap(g(), ap(g(), b())))});
  auto cfg = config(0, {cl.literals});
  auto out = equality_resolution(cl, cfg);
  ASSERT_TRUE(has_variant(out, {Literal::eq(a(), b()), Literal::neq(ap(y, a()), ap(g(), b()))})) << dump(out);
}

TEST(Calculus, GenerateIncludesSelfSuperposition) {
  // g (g X) = X with itself: rewriting inside gives a new equation.
  Clause cl = clause({Literal::eq(ap(g(), ap(g(), var(0, I()))), var(0, I()))});
  auto cfg = config(2, {cl.literals});
  auto self = std::make_shared<Clause>(cl);
  auto out = generate(cl, {self}, cfg);
  bool sup = false;
  for (const auto& r : out) sup = sup || r.derivation.rule == Rule::Sup;
  EXPECT_TRUE(sup);
}
