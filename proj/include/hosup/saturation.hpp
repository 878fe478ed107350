#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hosup/calculus.hpp"
#include "hosup/clause.hpp"

namespace hosup {

enum class FuncExt { Axiom, Off };

struct ProverConfig {
  unsigned hol_unif_depth = 2;
  bool applicative_unif = false;
  SelectionMode selection = SelectionMode::Heaviest;
  PrecedenceMode precedence = PrecedenceMode::Frequency;
  FuncExt func_ext = FuncExt::Axiom;
  bool choice_axiom = false;
  bool equality_to_equiv = false;
  unsigned naming_threshold = 8;
  /// Given clauses are picked `age_ratio` times by age, then `weight_ratio`
  /// times by weight.
  unsigned age_ratio = 1;
  unsigned weight_ratio = 4;
  double time_limit = 0;  // seconds, 0 = none
  std::uint64_t iteration_limit = 20000;
  std::uint64_t seed = 0;
  bool shuffle = false;

  bool imitate_project() const { return hol_unif_depth == 0 && !applicative_unif; }
  CalculusConfig calculus(OrderingConfig ordering) const;
};

enum class Status { Refutation, SaturatedUnknown, ResourceOut };

struct Statistics {
  std::uint64_t iterations = 0;
  std::uint64_t generated = 0;
  std::uint64_t retained = 0;
  std::uint64_t deleted = 0;
  double seconds = 0;
};

struct SaturationResult {
  Status status = Status::SaturatedUnknown;
  bool timed_out = false;
  /// Every clause that received an id, including simplification steps.
  std::map<ClauseId, ClausePtr> clauses;
  ClausePtr empty_clause;
  Statistics stats;
  CalculusConfig calculus;
};

/// Given-clause saturation.  Input clauses keep their derivation (Input or
/// Axiom) and receive ids 1, 2, ... in order.
SaturationResult saturate(std::vector<Clause> input, const ProverConfig& cfg);

struct ProofError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ancestors of the empty clause in id order.  Throws ProofError when the
/// result is not a refutation or a premise is missing.
std::vector<Inference> extract_proof(const SaturationResult& r);

/// Re-runs every step of `proof` and checks that the recorded conclusion is
/// among the rule's outputs up to variable renaming.  Returns an empty string
/// on success, otherwise a description of the first failing step.
std::string replay_proof(const std::vector<Inference>& proof, const CalculusConfig& cfg);

/// SZS status name.  A refutation of a problem with a conjecture is a Theorem.
std::string szs_status(const SaturationResult& r, bool has_conjecture);

}  // namespace hosup
