#include "hosup/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace hosup::sched {

namespace {

constexpr double kEps = 1e-9;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string f;
  while (std::getline(ss, f, sep)) out.push_back(trim(f));
  if (!s.empty() && s.back() == sep) out.push_back({});
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

double round_up(double t, double step) {
  if (step <= 0) return t;
  return std::ceil(t / step - kEps) * step;
}

}  // namespace

std::string status_name(RunStatus s) {
  switch (s) {
    case RunStatus::Success:
      return "success";
    case RunStatus::GaveUp:
      return "gaveup";
    case RunStatus::Timeout:
      return "timeout";
  }
  return "?";
}

RunlogError::RunlogError(const std::string& msg, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

std::vector<RunRecord> parse_runlog(std::istream& in) {
  std::vector<RunRecord> out;
  std::string line;
  std::size_t n = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++n;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (first && t.rfind("strategy,", 0) == 0) {
      first = false;
      continue;
    }
    first = false;
    auto f = split(t, ',');
    if (f.size() != 5) throw RunlogError("expected 5 fields, got " + std::to_string(f.size()), n);
    RunRecord r;
    r.strategy = f[0];
    r.problem = f[1];
    if (r.strategy.empty() || r.problem.empty()) throw RunlogError("empty strategy or problem id", n);
    try {
      std::size_t used = 0;
      r.seed = std::stoull(f[2], &used);
      if (used != f[2].size()) throw std::invalid_argument("seed");
    } catch (const std::exception&) {
      throw RunlogError("bad seed '" + f[2] + "'", n);
    }
    if (f[3] == "success")
      r.status = RunStatus::Success;
    else if (f[3] == "gaveup" || f[3] == "gave_up" || f[3] == "gave up")
      r.status = RunStatus::GaveUp;
    else if (f[3] == "timeout")
      r.status = RunStatus::Timeout;
    else
      throw RunlogError("bad status '" + f[3] + "'", n);
    try {
      std::size_t used = 0;
      r.time = std::stod(f[4], &used);
      if (used != f[4].size()) throw std::invalid_argument("time");
    } catch (const std::exception&) {
      throw RunlogError("bad time '" + f[4] + "'", n);
    }
    if (!(r.time > 0) || !std::isfinite(r.time)) throw RunlogError("time must be positive", n);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RunRecord> ingest_runlog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RunlogError("cannot open " + path.string(), 0);
  return parse_runlog(in);
}

RuntimeDistribution::RuntimeDistribution(std::vector<Step> steps) : steps_(std::move(steps)) {}

double RuntimeDistribution::at(double t) const {
  double p = 0;
  for (const auto& s : steps_) {
    if (s.open ? s.time < t : s.time <= t)
      p = s.p();
    else
      break;
  }
  return p;
}

std::vector<double> RuntimeDistribution::success_times() const {
  std::vector<double> out;
  unsigned prev = 0;
  for (const auto& s : steps_) {
    if (s.num > prev && s.time > 0) out.push_back(s.time);
    prev = s.num;
  }
  return out;
}

RuntimeDistribution estimate_distribution(const std::vector<RunRecord>& runs) {
  if (runs.empty()) throw std::invalid_argument("estimate_distribution: no runs");
  for (const auto& r : runs)
    if (r.strategy != runs[0].strategy || r.problem != runs[0].problem)
      throw std::invalid_argument("estimate_distribution: runs of different cells");

  // Event groups keyed by (time, open); closed events sort first at a time.
  std::map<std::pair<double, bool>, std::pair<unsigned, unsigned>> events;  // +num, -den
  for (const auto& r : runs) {
    switch (r.status) {
      case RunStatus::Success:
        events[{r.time, false}].first++;
        break;
      case RunStatus::GaveUp:
        events[{r.time, false}];
        break;
      case RunStatus::Timeout:
        events[{r.time, true}].second++;
        break;
    }
  }
  std::vector<Step> steps{Step{0, false, 0, static_cast<unsigned>(runs.size())}};
  for (const auto& [key, delta] : events) {
    Step s = steps.back();
    s.time = key.first;
    s.open = key.second;
    s.num += delta.first;
    s.den -= delta.second;
    if (s.time <= 0 && !s.open)
      steps.back() = s;
    else
      steps.push_back(s);
  }
  return RuntimeDistribution(std::move(steps));
}

namespace {

std::map<Cell, std::vector<RunRecord>> by_cell(const std::vector<RunRecord>& runs) {
  std::map<Cell, std::vector<RunRecord>> m;
  for (const auto& r : runs) m[{r.strategy, r.problem}].push_back(r);
  return m;
}

}  // namespace

Evals evals_from_runs(const std::vector<RunRecord>& runs) {
  Evals out;
  for (const auto& [cell, rs] : by_cell(runs)) {
    std::vector<double> times;
    for (const auto& r : rs)
      times.push_back(r.status == RunStatus::Success ? r.time
                                                     : std::numeric_limits<double>::infinity());
    std::sort(times.begin(), times.end());
    double med = times[(times.size() - 1) / 2];
    out[cell] = std::isfinite(med) ? std::optional<double>(med) : std::nullopt;
  }
  return out;
}

Distributions distributions_from_runs(const std::vector<RunRecord>& runs) {
  Distributions out;
  for (const auto& [cell, rs] : by_cell(runs)) out.emplace(cell, estimate_distribution(rs));
  return out;
}

double Schedule::total() const {
  double t = 0;
  for (const auto& e : entries) t += e.slice;
  return t;
}

std::map<std::string, double> Schedule::allotment() const {
  std::map<std::string, double> m;
  for (const auto& e : entries) m[e.strategy] += e.slice;
  return m;
}

std::string Schedule::to_text() const {
  std::ostringstream os;
  for (const auto& e : entries) os << e.strategy << ' ' << fmt(e.slice) << '\n';
  os << "# entries " << entries.size() << '\n';
  os << "# total " << fmt(total()) << '\n';
  os << "# coverage " << fmt(coverage) << '\n';
  return os.str();
}

double extend_coverage(double c, double p_old, double p_new) {
  if (p_old >= 1) return c;
  double r = 1 - (1 - c) * (1 - p_new) / (1 - p_old);
  return std::clamp(r, c, 1.0);
}

namespace {

struct Candidate {
  std::string strategy;
  double until = 0;  // cumulative slice after the extension
  double cost = 0;
  double gain = 0;
};

// Higher gain per second, then higher gain, then smaller slice, then id.
bool better(const Candidate& a, const Candidate& b) {
  double lhs = a.gain * b.cost, rhs = b.gain * a.cost;
  double tol = 1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
  if (lhs > rhs + tol) return true;
  if (rhs > lhs + tol) return false;
  if (std::abs(a.gain - b.gain) > 1e-12) return a.gain > b.gain;
  if (std::abs(a.cost - b.cost) > kEps) return a.cost < b.cost;
  return a.strategy < b.strategy;
}

// Shared greedy loop.  `times(S)` lists candidate cumulative slices and
// `gain(S, from, to)` scores an extension; `commit` applies it.
template <class Times, class Gain, class Commit>
Schedule run_greedy(const std::vector<std::string>& strategies, double budget,
                    const GreedyOptions& opts, Times times, Gain gain, Commit commit) {
  Schedule s;
  std::map<std::string, double> granted;
  double used = 0;
  for (;;) {
    std::optional<Candidate> best;
    for (const auto& st : strategies) {
      const double a = granted[st];
      std::set<double> cands;
      for (double t : times(st)) {
        double r = round_up(t, opts.step);
        if (r > a + kEps) cands.insert(r);
      }
      for (double t : cands) {
        Candidate c{st, t, t - a, gain(st, a, t)};
        if (c.gain <= 1e-12) continue;
        if (opts.skip_unaffordable && used + c.cost > budget + kEps) continue;
        if (!best || better(c, *best)) best = c;
      }
    }
    if (!best || used + best->cost > budget + kEps) break;
    commit(best->strategy, granted[best->strategy], best->until);
    granted[best->strategy] = best->until;
    used += best->cost;
    s.entries.push_back({best->strategy, best->cost});
  }
  return s;
}

}  // namespace

Schedule greedy_schedule(const Evals& evals, double budget, const GreedyOptions& opts) {
  std::map<std::string, std::vector<std::pair<std::string, double>>> solved;  // S -> (P, time)
  std::set<std::string> problems;
  for (const auto& [cell, t] : evals) {
    solved[cell.first];
    problems.insert(cell.second);
    if (t) solved[cell.first].push_back({cell.second, *t});
  }
  std::vector<std::string> strategies;
  for (const auto& [st, v] : solved) strategies.push_back(st);
  std::set<std::string> covered;

  auto times = [&](const std::string& st) {
    std::vector<double> v;
    for (const auto& [p, t] : solved[st]) v.push_back(t);
    return v;
  };
  auto newly = [&](const std::string& st, double from, double to) {
    double n = 0;
    for (const auto& [p, t] : solved[st])
      if (round_up(t, opts.step) <= to + kEps && !covered.count(p)) n += 1;
    (void)from;
    return n;
  };
  auto commit = [&](const std::string& st, double, double to) {
    for (const auto& [p, t] : solved[st])
      if (round_up(t, opts.step) <= to + kEps) covered.insert(p);
  };
  Schedule s = run_greedy(strategies, budget, opts, times, newly, commit);
  s.coverage = static_cast<double>(covered.size());
  return s;
}

Schedule greedy_schedule_expected(const Distributions& dists, double budget,
                                  const GreedyOptions& opts) {
  std::map<std::string, std::vector<std::pair<std::string, const RuntimeDistribution*>>> cells;
  std::map<std::string, double> cov;
  for (const auto& [cell, d] : dists) {
    cells[cell.first].push_back({cell.second, &d});
    cov[cell.second] = 0;
  }
  std::vector<std::string> strategies;
  for (const auto& [st, v] : cells) strategies.push_back(st);

  auto times = [&](const std::string& st) {
    std::vector<double> v;
    for (const auto& [p, d] : cells[st])
      for (double t : d->success_times()) v.push_back(t);
    return v;
  };
  auto gain = [&](const std::string& st, double from, double to) {
    double g = 0;
    for (const auto& [p, d] : cells[st]) {
      double c = cov[p];
      g += extend_coverage(c, d->at(from), d->at(to)) - c;
    }
    return g;
  };
  auto commit = [&](const std::string& st, double from, double to) {
    for (const auto& [p, d] : cells[st]) cov[p] = extend_coverage(cov[p], d->at(from), d->at(to));
  };
  Schedule s = run_greedy(strategies, budget, opts, times, gain, commit);
  for (const auto& [p, c] : cov) s.coverage += c;
  return s;
}

std::size_t coverage_of(const Evals& evals, const std::map<std::string, double>& allotment) {
  std::set<std::string> covered;
  for (const auto& [cell, t] : evals) {
    if (!t) continue;
    auto it = allotment.find(cell.first);
    if (it != allotment.end() && *t <= it->second + kEps) covered.insert(cell.second);
  }
  return covered.size();
}

Optimum brute_force_optimum(const Evals& evals, double budget) {
  std::map<std::string, std::set<double>> options;
  for (const auto& [cell, t] : evals) {
    options[cell.first];
    if (t && *t <= budget + kEps) options[cell.first].insert(*t);
  }
  std::vector<std::pair<std::string, std::vector<double>>> opts;
  for (const auto& [st, ts] : options) opts.push_back({st, {ts.begin(), ts.end()}});

  Optimum best;
  std::map<std::string, double> cur;
  std::function<void(std::size_t, double)> go = [&](std::size_t k, double left) {
    if (k == opts.size()) {
      std::size_t c = coverage_of(evals, cur);
      if (c > best.coverage) best = {c, cur};
      return;
    }
    go(k + 1, left);
    for (double t : opts[k].second) {
      if (t > left + kEps) break;
      cur[opts[k].first] = t;
      go(k + 1, left - t);
      cur.erase(opts[k].first);
    }
  };
  go(0, budget);
  return best;
}

Truth truth_from_runs(const std::vector<RunRecord>& runs) {
  Truth t;
  for (const auto& r : runs) t[{r.strategy, r.problem, r.seed}] = r;
  return t;
}

SimulationReport simulate_schedule(const Schedule& s, const Truth& truth,
                                   const std::vector<double>& cutoffs) {
  // strategy -> problem -> seed -> record
  std::map<std::string, std::map<std::string, std::map<std::uint64_t, const RunRecord*>>> idx;
  std::set<std::uint64_t> seeds;
  std::set<std::string> problems;
  for (const auto& [key, r] : truth) {
    idx[std::get<0>(key)][std::get<1>(key)][std::get<2>(key)] = &r;
    seeds.insert(std::get<2>(key));
    problems.insert(std::get<1>(key));
  }
  for (const auto& e : s.entries)
    if (!idx.count(e.strategy))
      throw std::invalid_argument("simulate_schedule: no runs for strategy " + e.strategy);

  SimulationReport rep;
  rep.cutoffs = cutoffs;
  rep.covered_at.assign(cutoffs.size(), 0);
  rep.seeds = seeds.size();
  for (const auto& p : problems) rep.problem_rate[p] = 0;
  if (seeds.empty()) return rep;

  for (std::uint64_t seed : seeds) {
    std::map<std::string, double> solved_at;
    std::map<std::string, double> ran;
    double clock = 0;
    for (const auto& e : s.entries) {
      const double a = ran[e.strategy];
      for (const auto& [p, runs] : idx.at(e.strategy)) {
        auto it = runs.find(seed);
        const RunRecord* r = it != runs.end() ? it->second : runs.begin()->second;
        if (r->status != RunStatus::Success) continue;
        if (r->time > a + kEps && r->time <= a + e.slice + kEps) {
          double when = clock + (r->time - a);
          auto [pos, fresh] = solved_at.emplace(p, when);
          if (!fresh) pos->second = std::min(pos->second, when);
        }
      }
      ran[e.strategy] = a + e.slice;
      clock += e.slice;
    }
    for (std::size_t k = 0; k < cutoffs.size(); ++k)
      for (const auto& [p, w] : solved_at)
        if (w <= cutoffs[k] + kEps) rep.covered_at[k] += 1;
    rep.covered += static_cast<double>(solved_at.size());
    for (const auto& [p, w] : solved_at) rep.problem_rate[p] += 1;
  }
  const double n = static_cast<double>(seeds.size());
  for (auto& c : rep.covered_at) c /= n;
  rep.covered /= n;
  for (auto& [p, r] : rep.problem_rate) r /= n;
  return rep;
}

std::vector<Cell> relied_cells(const Schedule& s, const Distributions& dists) {
  std::set<Cell> out;
  std::map<std::string, double> ran;
  for (const auto& e : s.entries) {
    double until = ran[e.strategy] += e.slice;
    for (auto it = dists.lower_bound({e.strategy, std::string{}});
         it != dists.end() && it->first.first == e.strategy; ++it)
      if (it->second.at(until + kEps) > 0) out.insert(it->first);
  }
  return {out.begin(), out.end()};
}

Reestimate iterative_reestimate(std::vector<RunRecord> runs, const ScheduleBuilder& build,
                                const RunSampler& sample, unsigned rounds) {
  Reestimate res;
  for (unsigned r = 0; r < rounds; ++r) {
    Distributions d = distributions_from_runs(runs);
    Schedule s = build(d);
    for (const auto& [st, p] : relied_cells(s, d))
      for (auto& rec : sample(st, p)) {
        if (rec.strategy != st || rec.problem != p)
          throw std::invalid_argument("sampler returned a run for another cell");
        runs.push_back(std::move(rec));
      }
  }
  res.dists = distributions_from_runs(runs);
  res.schedule = build(res.dists);
  res.runs = std::move(runs);
  return res;
}

}  // namespace hosup::sched
