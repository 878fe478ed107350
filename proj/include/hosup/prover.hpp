#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hosup/clausifier.hpp"
#include "hosup/saturation.hpp"
#include "hosup/tptp.hpp"

namespace hosup {

struct ProveOutcome {
  std::vector<Clause> input;
  SaturationResult result;
  std::string szs;  // SZS status word
};

/// Preprocesses, clausifies and saturates a parsed problem.
ProveOutcome prove(Problem p, const ProverConfig& cfg);
ProveOutcome prove_file(const std::filesystem::path& path, const ProverConfig& cfg);

/// `% SZS status <s>` line, followed by the proof between SZS markers when
/// requested and a refutation exists.
std::string format_outcome(const ProveOutcome& o, const std::string& problem_name, bool proof);

}  // namespace hosup
