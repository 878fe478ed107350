#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hosup::sched {

enum class RunStatus { Success, GaveUp, Timeout };

std::string status_name(RunStatus s);

struct RunRecord {
  std::string strategy;
  std::string problem;
  std::uint64_t seed = 0;
  RunStatus status = RunStatus::Success;
  double time = 0;  // solve time, give-up time or the limit used
};

class RunlogError : public std::runtime_error {
 public:
  RunlogError(const std::string& msg, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses `strategy,problem,seed,status,time` lines. A first line starting
/// with `strategy,` is taken as a header. Blank lines and `#` comments are
/// skipped.
std::vector<RunRecord> parse_runlog(std::istream& in);
std::vector<RunRecord> ingest_runlog(const std::filesystem::path& path);

/// One piece of the step function: `num/den` holds from `time` on, or just
/// after `time` when `open` (a timeout leaving the denominator).
struct Step {
  double time = 0;
  bool open = false;
  unsigned num = 0;
  unsigned den = 0;
  double p() const { return den == 0 ? 0.0 : static_cast<double>(num) / den; }
};

class RuntimeDistribution {
 public:
  RuntimeDistribution() = default;
  explicit RuntimeDistribution(std::vector<Step> steps);

  double at(double t) const;
  const std::vector<Step>& steps() const { return steps_; }
  /// Times at which a success raises the estimate.
  std::vector<double> success_times() const;

 private:
  std::vector<Step> steps_;
};

/// Estimate from independent runs of one strategy on one problem.  Successes
/// count from their time on; give-ups stay in the denominator; timeouts leave
/// it after their limit.
RuntimeDistribution estimate_distribution(const std::vector<RunRecord>& runs);

using Cell = std::pair<std::string, std::string>;  // strategy, problem
using Evals = std::map<Cell, std::optional<double>>;
using Distributions = std::map<Cell, RuntimeDistribution>;

/// Median solve time per cell over its runs, failures counting as infinite.
Evals evals_from_runs(const std::vector<RunRecord>& runs);
Distributions distributions_from_runs(const std::vector<RunRecord>& runs);

struct ScheduleEntry {
  std::string strategy;
  double slice = 0;  // additional seconds granted to the strategy
};

struct Schedule {
  std::vector<ScheduleEntry> entries;
  double coverage = 0;  // problems covered, or expected coverage

  double total() const;
  /// Cumulative time granted to each strategy.
  std::map<std::string, double> allotment() const;
  std::string to_text() const;
};

struct GreedyOptions {
  /// Candidate slices are rounded up to a multiple of this when positive.
  double step = 0;
  /// Candidates that no longer fit the remaining budget are skipped.  When
  /// false, the construction ends at the first best candidate that does not
  /// fit, so schedules for growing budgets extend each other as prefixes.
  bool skip_unaffordable = true;
};

Schedule greedy_schedule(const Evals& evals, double budget, const GreedyOptions& opts = {});
Schedule greedy_schedule_expected(const Distributions& dists, double budget,
                                  const GreedyOptions& opts = {});

/// Coverage of problem P after adding a strategy extension, under
/// independence: the strategy's old factor (1 - p_old) is replaced by
/// (1 - p_new).
double extend_coverage(double c, double p_old, double p_new);

struct Optimum {
  std::size_t coverage = 0;
  std::map<std::string, double> allotment;
};

/// Exhaustive search over per-strategy slices drawn from observed solve times.
Optimum brute_force_optimum(const Evals& evals, double budget);

/// Problems covered by running each strategy for its allotted time.
std::size_t coverage_of(const Evals& evals, const std::map<std::string, double>& allotment);

struct SimulationReport {
  std::vector<double> cutoffs;
  std::vector<double> covered_at;  // mean over seeds, per cutoff
  double covered = 0;              // mean over seeds, whole schedule
  std::size_t seeds = 0;
  std::map<std::string, double> problem_rate;  // fraction of seeds covering P
};

using Truth = std::map<std::tuple<std::string, std::string, std::uint64_t>, RunRecord>;

Truth truth_from_runs(const std::vector<RunRecord>& runs);

/// Replays the schedule against held-out runs. Entries resume their strategy
/// where its previous slice stopped.
SimulationReport simulate_schedule(const Schedule& s, const Truth& truth,
                                   const std::vector<double>& cutoffs = {1, 10, 30, 60, 120, 960});

using ScheduleBuilder = std::function<Schedule(const Distributions&)>;
using RunSampler = std::function<std::vector<RunRecord>(const std::string& strategy,
                                                        const std::string& problem)>;

/// Cells (strategy, problem) on which the schedule's coverage relies.
std::vector<Cell> relied_cells(const Schedule& s, const Distributions& dists);

struct Reestimate {
  Schedule schedule;
  std::vector<RunRecord> runs;  // initial runs plus every sampled one
  Distributions dists;
};

Reestimate iterative_reestimate(std::vector<RunRecord> runs, const ScheduleBuilder& build,
                                const RunSampler& sample, unsigned rounds);

}  // namespace hosup::sched
