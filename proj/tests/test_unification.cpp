#include <gtest/gtest.h>

#include <chrono>
#include <set>

#include "hosup/unification.hpp"
#include "support.hpp"
#include "unif_oracle.hpp"

using namespace hosup;
using namespace testing_support;

TEST(Unification, TreeCountsPerDepth) {
  SwapExample fig;
  const auto t0 = std::chrono::steady_clock::now();
  auto u0 = fig.run(0), u1 = fig.run(1), u2 = fig.run(2), u3 = fig.run(3), u4 = fig.run(4);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 1.0);

  ASSERT_EQ(u0.size(), 1u);
  EXPECT_TRUE(u0[0].subst.empty());
  ASSERT_EQ(u0[0].constraints.size(), 1u);
  EXPECT_EQ(u0[0].constraints[0].to_string(), "X0 a b != f b a");

  EXPECT_EQ(u1.size(), 1u);
  ASSERT_EQ(u2.size(), 2u);
  for (const auto& u : u2) {
    ASSERT_EQ(u.constraints.size(), 1u);
    const Literal& c = u.constraints[0];
    EXPECT_FALSE(c.positive);
    EXPECT_TRUE(c.lhs.is_flex());
    EXPECT_EQ(c.lhs.num_args(), 2u);
    EXPECT_EQ(c.rhs, a());  // residual x2 a b != a
  }
  ASSERT_EQ(u3.size(), 4u);
  for (const auto& u : u3) EXPECT_TRUE(u.constraints.empty());
  EXPECT_EQ(u4.size(), u3.size());
}

TEST(Unification, ResultsMatchBruteForceSolutionSet) {
  SwapExample fig;
  auto expect = fig.solutions();
  ASSERT_EQ(expect.size(), 4u);
  for (unsigned depth = 0; depth <= 4; ++depth)
    EXPECT_EQ(fig.covered(fig.run(depth)), expect) << "depth " << depth;
  // Depth 3 binds x outright: each unifier is one of the four solutions.
  std::set<std::string> direct;
  for (const auto& u : fig.run(3)) direct.insert(oracle_normal_form(u.subst.apply(fig.x)));
  EXPECT_EQ(direct, expect);
}

TEST(Unification, TraceRecordsSteps) {
  SwapExample fig;
  UnifTrace tr;
  fig.run(1, &tr);
  bool imitate = false, project = false;
  for (const auto& l : tr) {
    imitate = imitate || l.find("imitate") != std::string::npos;
    project = project || l.find("project") != std::string::npos;
  }
  EXPECT_TRUE(imitate);
  EXPECT_TRUE(project);
}

TEST(Unification, FirstOrderCases) {
  UnifConfig cfg;
  FreshVars fresh(10);
  // Bare variable binding is free even at depth 0.
  cfg.depth = 0;
  auto u = depth_n_unifiers(ap(f(), var(0, I()), b()), ap(f(), a(), var(1, I())), cfg, fresh);
  ASSERT_EQ(u.size(), 1u);
  EXPECT_TRUE(u[0].constraints.empty());
  EXPECT_EQ(u[0].subst.to_string(), "{X0 -> a, X1 -> b}");
  // Clash and occurs check.
  EXPECT_TRUE(depth_n_unifiers(ap(g(), a()), ap(g(), b()), cfg, fresh).empty());
  EXPECT_TRUE(depth_n_unifiers(var(0, I()), ap(g(), var(0, I())), cfg, fresh).empty());
  // Identical terms: the empty unifier.
  auto same = depth_n_unifiers(ap(g(), a()), ap(g(), a()), cfg, fresh);
  ASSERT_EQ(same.size(), 1u);
  EXPECT_TRUE(same[0].subst.empty());
}

TEST(Unification, FlexFlexBecomesConstraint) {
  UnifConfig cfg;
  cfg.depth = 3;
  FreshVars fresh(10);
  auto u = depth_n_unifiers(ap(var(3, ii()), a()), ap(var(4, ii()), b()), cfg, fresh);
  ASSERT_EQ(u.size(), 1u);
  ASSERT_EQ(u[0].constraints.size(), 1u);
  EXPECT_TRUE(u[0].constraints[0].is_flex_flex());
}

TEST(Unification, LambdaPairsUnderBinders) {
  UnifConfig cfg;
  cfg.depth = 2;
  FreshVars fresh(10);
  // λy. X3 y =? λy. g y  has the solution X3 -> g (via eta or imitation).
  Term l = Term::lam(I(), ap(var(3, ii()), Term::index(0, I())));
  Term r = Term::lam(I(), ap(g(), Term::index(0, I())));
  auto u = depth_n_unifiers(l, r, cfg, fresh);
  bool found = false;
  for (const auto& cu : u)
    if (cu.constraints.empty() && cu.subst.apply(l) == cu.subst.apply(r)) found = true;
  EXPECT_TRUE(found);
}

TEST(Unification, ImitationAndProjectionBindings) {
  FreshVars fresh(10);
  Term flex = ap(var(0, iii()), a(), b());
  Term rigid = ap(f(), b(), a());
  auto im = imitation_binding(flex, rigid, fresh);
  ASSERT_TRUE(im.has_value());
  EXPECT_EQ(im->apply(flex).head(), f());
  auto pr = projection_bindings(flex, rigid, fresh);
  ASSERT_EQ(pr.size(), 2u);
  EXPECT_EQ(pr[0].apply(flex), a());
  EXPECT_EQ(pr[1].apply(flex), b());
  EXPECT_FALSE(imitation_binding(flex, Term::index(0, I()), fresh).has_value());
}

TEST(Unification, ApplicativeFirstOrder) {
  // X3 a =? f a a : X3 -> f a in the applicative encoding.
  auto u = applicative_unify(ap(var(3, ii()), a()), ap(f(), a(), a()));
  ASSERT_TRUE(u.has_value());
  EXPECT_EQ(u->subst.apply(var(3, ii())), ap(f(), a()));
  // X0 a b =? f b a has no applicative solution.
  EXPECT_FALSE(applicative_unify(ap(var(0, iii()), a(), b()), ap(f(), b(), a())).has_value());
  EXPECT_FALSE(applicative_unify(var(0, I()), ap(g(), var(0, I()))).has_value());
}

TEST(Unification, RandomSoundnessUnderConstraintSolutions) {
  TermGen gen(401);
  int checked = 0, constrained = 0;
  for (int i = 0; i < 400; ++i) {
    Term s = gen.gen(I(), 1 + static_cast<int>(gen.pick(6)));
    Term t = gen.gen(I(), 1 + static_cast<int>(gen.pick(6)));
    for (unsigned depth : {0u, 1u, 2u}) {
      UnifConfig cfg;
      cfg.depth = depth;
      FreshVars fresh(std::max(max_var(s), max_var(t)));
      for (const auto& u : depth_n_unifiers(s, t, cfg, fresh)) {
        Term ss = u.subst.apply(s), tt = u.subst.apply(t);
        ASSERT_TRUE(is_beta_normal(ss));
        if (u.constraints.empty()) {
          ASSERT_EQ(ss, tt) << s.to_string() << " =? " << t.to_string() << " via "
                            << u.subst.to_string();
          ++checked;
          continue;
        }
        ++constrained;
        std::vector<std::pair<VarId, Type>> vars;
        for (const auto& c : u.constraints) {
          ASSERT_FALSE(c.positive);
          collect_vars(c.lhs, vars);
          collect_vars(c.rhs, vars);
        }
        collect_vars(ss, vars);
        collect_vars(tt, vars);
        std::sort(vars.begin(), vars.end(), [](auto& p, auto& q) { return p.first < q.first; });
        vars.erase(std::unique(vars.begin(), vars.end(), [](auto& p, auto& q) { return p.first == q.first; }),
                   vars.end());
        if (vars.size() > 2) continue;
        std::vector<std::pair<VarId, Term>> cur;
        for_each_instance(vars, 0, cur, 1, true, {a(), b()}, [&](const auto& theta) {
          for (const auto& c : u.constraints)
            if (oracle_instance(c.lhs, theta) != oracle_instance(c.rhs, theta)) return;
          ++checked;
          ASSERT_EQ(oracle_instance(ss, theta), oracle_instance(tt, theta))
              << s.to_string() << " =? " << t.to_string() << " via " << u.subst.to_string();
        });
      }
    }
  }
  EXPECT_GT(checked, 300);
  EXPECT_GT(constrained, 20);
}
