#include <gtest/gtest.h>

#include "hosup/signature.hpp"
#include "support.hpp"

using namespace hosup;
using namespace testing_support;

TEST(Types, ArrowStructure) {
  Type t = Type::arrow(I(), Type::arrow(O(), I()));
  EXPECT_EQ(t.arity(), 2u);
  EXPECT_EQ(t.arg_types(), (std::vector<Type>{I(), O()}));
  EXPECT_EQ(t.result_after(1), Type::arrow(O(), I()));
  EXPECT_EQ(t.to_string(), "$i > $o > $i");
  EXPECT_EQ(Type::arrow(ii(), I()).to_string(), "($i > $i) > $i");
}

TEST(Types, UnifyAndMatch) {
  TypeSubst s;
  Type a0 = Type::var(0), a1 = Type::var(1);
  ASSERT_TRUE(unify_types(Type::arrow(a0, a1), Type::arrow(I(), a0), s));
  EXPECT_EQ(apply_types(s, a0), I());
  EXPECT_EQ(apply_types(s, a1), I());
  TypeSubst occ;
  EXPECT_FALSE(unify_types(a0, Type::arrow(a0, I()), occ));
  TypeSubst m;
  EXPECT_TRUE(match_types(Type::arrow(a0, a0), ii(), m));
  TypeSubst m2;
  EXPECT_FALSE(match_types(Type::arrow(a0, a0), Type::arrow(I(), O()), m2));
}

TEST(Terms, WeightCountsEncodingSymbols) {
  // app(app(f, a), b)
  EXPECT_EQ(ap(f(), a(), b()).weight(), 5u);
  // lam(app(g, d0))
  EXPECT_EQ(Term::lam(I(), ap(g(), Term::index(0, I()))).weight(), 4u);
}

TEST(Terms, TypeErrors) {
  EXPECT_THROW(ap(a(), b()), TypeError);
  EXPECT_THROW(ap(g(), g()), TypeError);
}

TEST(Terms, HeadsAndFlexRigid) {
  Term x = var(3, ii());
  Term t = ap(x, a());
  EXPECT_TRUE(t.is_flex());
  EXPECT_FALSE(t.is_rigid());
  EXPECT_EQ(t.head(), x);
  EXPECT_EQ(t.num_args(), 1u);
  EXPECT_TRUE(ap(f(), a(), b()).is_rigid());
  EXPECT_EQ(head_of(Term::lam(I(), a())), HeadKind::Lambda);
}

TEST(Terms, Printing) {
  Term t = Term::lam(I(), ap(f(), Term::index(0, I()), ap(var(3, ii()), a())));
  EXPECT_EQ(t.to_string(), "λY0. f Y0 (X3 a)");
  EXPECT_EQ(to_raw(t), "lam(app(app(f, d0), app(X3, a)))");
  EXPECT_EQ(to_display(Term::lam(I(), Term::index(0, I())), {true}), "λY0:$i. Y0");
}

TEST(Terms, AppReducesRedexes) {
  Term id = Term::lam(I(), Term::index(0, I()));
  EXPECT_EQ(ap(id, a()), a());
  Term k = Term::lam(I(), Term::lam(I(), Term::index(1, I())));
  EXPECT_EQ(ap(k, a(), b()), a());
  Term raw = Term::raw_app(id, a());
  EXPECT_FALSE(is_beta_normal(raw));
  EXPECT_EQ(beta_normalize(raw), a());
}

TEST(Terms, RandomBetaAgainstNamedOracle) {
  TermGen gen(101);
  gen.allow_redex = true;
  for (int i = 0; i < 100; ++i) {
    Term raw;
    do raw = gen.gen(I(), 2 + static_cast<int>(gen.pick(10)));
    while (is_beta_normal(raw));
    ASSERT_TRUE(is_well_typed(raw)) << to_raw(raw);
    Term nf = beta_normalize(raw);
    ASSERT_TRUE(is_beta_normal(nf)) << to_raw(raw);
    ASSERT_TRUE(is_well_typed(nf));
    ASSERT_EQ(nf.type(), raw.type());
    ASSERT_EQ(oracle_normal_form(nf), oracle_normal_form(raw)) << to_raw(raw);
  }
}

TEST(Terms, RandomInstantiateAgainstNamedOracle) {
  TermGen gen(102);
  for (int i = 0; i < 100; ++i) {
    std::vector<Type> ctx{I()};
    Term body = gen.gen(I(), ctx, 2 + static_cast<int>(gen.pick(8)));
    Term arg = gen.gen(I(), 1 + static_cast<int>(gen.pick(5)));
    Term got = instantiate(body, arg);
    Term redex = Term::raw_app(Term::lam(I(), body), arg);
    ASSERT_EQ(oracle_normal_form(got), oracle_normal_form(redex)) << to_raw(redex);
  }
}

TEST(Terms, ShiftRoundTrip) {
  TermGen gen(103);
  for (int i = 0; i < 200; ++i) {
    std::vector<Type> ctx{I(), ii(), I()};
    Term t = gen.gen(I(), ctx, 1 + static_cast<int>(gen.pick(10)));
    for (std::uint32_t cutoff : {0u, 1u, 2u}) {
      for (int k : {1, 2, 5}) {
        Term up = shift(t, k, cutoff);
        ASSERT_EQ(shift(up, -k, cutoff), t);
        ASSERT_EQ(up.weight(), t.weight());
      }
    }
    Term closed = gen.gen(I(), 1 + static_cast<int>(gen.pick(6)));
    ASSERT_EQ(closed.loose_bound(), 0u);
    ASSERT_EQ(shift(closed, 3), closed);
  }
  EXPECT_THROW(shift(Term::index(0, I()), -1), std::range_error);
}

TEST(Terms, SubtermsAndReplacement) {
  TermGen gen(104);
  for (int i = 0; i < 200; ++i) {
    Term t = gen.gen(I(), 2 + static_cast<int>(gen.pick(8)));
    auto subs = first_order_subterms(t);
    ASSERT_FALSE(subs.empty());
    EXPECT_EQ(subs[0].second, t);
    for (const auto& [pos, u] : subs) {
      ASSERT_TRUE(pos.first_order());
      ASSERT_EQ(subterm_at(t, pos), u);
      ASSERT_EQ(replace_at(t, pos, u), t);
      if (u.type() == I()) {
        Term r = replace_at(t, pos, c());
        ASSERT_EQ(subterm_at(r, pos), c());
      }
    }
  }
  // f (g a) b: first-order subterms skip the prefixes f and f (g a).
  Term t = ap(f(), ap(g(), a()), b());
  std::vector<std::string> got;
  for (const auto& [pos, u] : first_order_subterms(t)) got.push_back(u.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"f (g a) b", "g a", "a", "b"}));
}

TEST(Terms, NoFirstOrderSubtermsBelowLambda) {
  Term t = ap(h(), Term::lam(I(), ap(g(), Term::index(0, I()))));
  for (const auto& [pos, u] : first_order_subterms(t)) EXPECT_FALSE(u.is_lam() && pos.path.size() > 1);
  bool below = false;
  for (const auto& [pos, u] : all_subterms(t))
    if (pos.is_below_lambda) below = true;
  EXPECT_TRUE(below);
}

TEST(Terms, VariablesAndTypes) {
  Term t = ap(f(), var(1, I()), ap(var(4, ii()), var(1, I())));
  std::vector<std::pair<VarId, Type>> vs;
  collect_vars(t, vs);
  ASSERT_EQ(vs.size(), 2u);
  EXPECT_EQ(vs[0].first, 1u);
  EXPECT_EQ(vs[1].first, 4u);
  EXPECT_TRUE(occurs(4, t));
  EXPECT_FALSE(occurs(0, t));
  EXPECT_EQ(max_var(t), 5u);
  Term poly = Term::var(0, Type::var(2));
  EXPECT_EQ(max_type_var(poly), 3u);
  TypeSubst s{{2, I()}};
  EXPECT_EQ(map_types(poly, s).type(), I());
}

TEST(Signature, DeclareAndInstantiate) {
  Signature sig;
  sig.declare("f", {0, iii()});
  sig.declare("choose", {1, Type::arrow(Type::arrow(Type::var(0), O()), Type::var(0))});
  EXPECT_EQ(sig.constant("f").type(), iii());
  EXPECT_EQ(sig.constant("choose", {I()}).type(), Type::arrow(Type::arrow(I(), O()), I()));
  EXPECT_THROW(sig.declare("app", {0, I()}), SignatureError);
  EXPECT_TRUE(Signature::is_reserved("d3"));
  std::string sk = sig.fresh_symbol("sk", {0, I()});
  EXPECT_TRUE(sig.contains(sk));
}
