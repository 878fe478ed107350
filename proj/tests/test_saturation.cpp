#include <gtest/gtest.h>

#include "hosup/prover.hpp"
#include "support.hpp"

using namespace hosup;
using namespace testing_support;

namespace {

std::string corpus(const std::string& name) { return std::string(HOSUP_CORPUS) + "/" + name; }

ProverConfig depth(unsigned d) {
  ProverConfig cfg;
  cfg.hol_unif_depth = d;
  return cfg;
}

ProveOutcome prove_text(const std::string& text, const ProverConfig& cfg) {
  return prove(parse_problem(text), cfg);
}

std::size_t count_rule(const std::vector<Inference>& proof, Rule r) {
  std::size_t n = 0;
  for (const auto& i : proof) n += i.rule == r;
  return n;
}

const char* kDecls =
    "thf(a_t, type, a: $i).\n"
    "thf(b_t, type, b: $i).\n"
    "thf(c_t, type, c: $i).\n"
    "thf(f_t, type, f: $i > $i).\n"
    "thf(p_t, type, p: $i > $o).\n";

}  // namespace

TEST(Saturation, ExampleOneAtDepthOne) {
  auto o = prove_file(corpus("example1.p"), depth(1));
  ASSERT_EQ(o.szs, "Unsatisfiable");
  auto proof = extract_proof(o.result);
  EXPECT_EQ(count_rule(proof, Rule::EqRes), 3u);
  EXPECT_EQ(replay_proof(proof, o.result.calculus), "");
  EXPECT_LT(o.result.stats.seconds, 1.0);
}

TEST(Saturation, ExampleTwoAtDepthZero) {
  auto o = prove_file(corpus("example2.p"), depth(0));
  ASSERT_EQ(o.szs, "Unsatisfiable");
  auto proof = extract_proof(o.result);
  EXPECT_GE(count_rule(proof, Rule::Sup), 1u);
  EXPECT_GE(count_rule(proof, Rule::Imitate), 2u);
  EXPECT_EQ(replay_proof(proof, o.result.calculus), "");
}

TEST(Saturation, ConjectureFormsAreTheorems) {
  EXPECT_EQ(prove_file(corpus("example1_conjecture.p"), depth(1)).szs, "Theorem");
  EXPECT_EQ(prove_file(corpus("example2_conjecture.p"), depth(0)).szs, "Theorem");
}

TEST(Saturation, SingleUnitSaturates) {
  auto cfg = depth(2);
  cfg.func_ext = FuncExt::Off;
  auto o = prove_text(std::string(kDecls) + "thf(ax, axiom, (f @ a) = a).\n", cfg);
  EXPECT_EQ(o.result.status, Status::SaturatedUnknown);
  EXPECT_EQ(o.szs, "Unknown");
  EXPECT_THROW(extract_proof(o.result), ProofError);
}

TEST(Saturation, IterationLimitGivesResourceOut) {
  auto cfg = depth(2);
  cfg.iteration_limit = 3;
  // f (f (f ... a)) keeps generating new positive consequences.
  auto o = prove_text(std::string(kDecls) +
                          "thf(ax1, axiom, ! [X: $i]: ((p @ X) => (p @ (f @ X)))).\n"
                          "thf(ax2, axiom, p @ a).\n"
                          "thf(goal, conjecture, p @ b).\n",
                      cfg);
  EXPECT_EQ(o.result.status, Status::ResourceOut);
  EXPECT_EQ(o.szs, "ResourceOut");
  EXPECT_LE(o.result.stats.iterations, 3u);
}

TEST(Saturation, FirstOrderChaining) {
  auto o = prove_text(std::string(kDecls) +
                          "thf(ax1, axiom, (f @ a) = b).\n"
                          "thf(ax2, axiom, (f @ b) = c).\n"
                          "thf(goal, conjecture, (f @ (f @ a)) = c).\n",
                      depth(2));
  ASSERT_EQ(o.szs, "Theorem");
  EXPECT_EQ(replay_proof(extract_proof(o.result), o.result.calculus), "");
}

TEST(Saturation, ProofsAreDeterministic) {
  for (unsigned d : {0u, 1u, 2u}) {
    auto cfg = depth(d);
    auto p1 = format_outcome(prove_file(corpus("example2.p"), cfg), "example2", true);
    auto p2 = format_outcome(prove_file(corpus("example2.p"), cfg), "example2", true);
    EXPECT_EQ(p1, p2);
  }
}

TEST(Saturation, ShuffleKeepsProvability) {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    auto cfg = depth(1);
    cfg.shuffle = true;
    cfg.seed = seed;
    auto o = prove_file(corpus("example1.p"), cfg);
    EXPECT_EQ(o.szs, "Unsatisfiable") << "seed " << seed;
    auto again = prove_file(corpus("example1.p"), cfg);
    EXPECT_EQ(format_outcome(o, "e", true), format_outcome(again, "e", true));
  }
}

TEST(Saturation, FormatOutcomeShape) {
  auto o = prove_file(corpus("example1.p"), depth(1));
  std::string s = format_outcome(o, "example1", true);
  EXPECT_EQ(s.rfind("% SZS status Unsatisfiable for example1", 0), 0u) << s;
  EXPECT_NE(s.find("% SZS output start CNFRefutation"), std::string::npos);
  EXPECT_NE(s.find("% SZS output end CNFRefutation"), std::string::npos);
  std::string quiet = format_outcome(o, "example1", false);
  EXPECT_EQ(quiet.find("SZS output"), std::string::npos);
}
