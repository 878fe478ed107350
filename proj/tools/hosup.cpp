#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>

#include "hosup/prover.hpp"
#include "hosup/scheduler.hpp"
#include "hosup/unification.hpp"

using namespace hosup;

namespace {

const std::vector<std::string> kOnOff{"on", "off"};

int run_prove(const std::string& file, ProverConfig cfg, const std::string& applicative,
              const std::string& func_ext, const std::string& eq_equiv, const std::string& choice,
              const std::string& selection, const std::string& precedence, const std::string& shuffle,
              const std::string& cnf, bool proof) {
  if (cnf != "eager") {
    std::cerr << "error: --cnf-on-the-fly " << cnf << " is not supported; only eager clausification is implemented\n";
    return 2;
  }
  cfg.applicative_unif = applicative == "on";
  cfg.func_ext = func_ext == "axiom" ? FuncExt::Axiom : FuncExt::Off;
  cfg.equality_to_equiv = eq_equiv == "on";
  cfg.choice_axiom = choice == "on";
  cfg.selection = selection == "paper" ? SelectionMode::Heaviest : SelectionMode::None;
  cfg.precedence = precedence == "frequency" ? PrecedenceMode::Frequency : PrecedenceMode::Occurrence;
  cfg.shuffle = shuffle == "on";
  try {
    ProveOutcome o = prove_file(file, cfg);
    std::cout << format_outcome(o, std::filesystem::path(file).stem().string(), proof);
    if (proof && o.result.status == Status::Refutation) {
      auto err = replay_proof(extract_proof(o.result), o.result.calculus);
      if (!err.empty()) {
        std::cerr << "error: proof check failed: " << err << "\n";
        return 3;
      }
    }
  } catch (const ParseError& e) {
    std::cout << "% SZS status InputError\n";
    std::cerr << file << ":" << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << "% SZS status Error\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int run_unify(unsigned depth, bool applicative, bool trace, const std::vector<std::string>& decls,
              const std::string& decl_file, const std::string& equation) {
  try {
    Problem p;
    if (!decl_file.empty()) p = parse_file(decl_file);
    std::ostringstream text;
    for (std::size_t i = 0; i < decls.size(); ++i)
      text << "thf(decl" << i << ", type, " << decls[i] << ").\n";
    text << "thf(equation, axiom, " << equation << ").\n";
    parse_into(p, text.str(), {});
    auto [s, t] = equation_terms(*p.statements.back().formula);
    std::cout << "s = " << s.to_string() << "\nt = " << t.to_string() << "\n";
    if (applicative) {
      auto u = applicative_unify(s, t);
      if (!u) {
        std::cout << "0 unifiers\n";
        return 0;
      }
      std::cout << "1 unifiers\n" << u->subst.to_string() << "\n";
      return 0;
    }
    UnifConfig cfg;
    cfg.depth = depth;
    FreshVars fresh(std::max(max_var(s), max_var(t)) + 1);
    UnifTrace tr;
    auto us = depth_n_unifiers(s, t, cfg, fresh, trace ? &tr : nullptr);
    for (const auto& line : tr) std::cout << "| " << line << "\n";
    std::cout << us.size() << " unifiers\n";
    for (const auto& u : us) {
      std::cout << u.subst.to_string() << " constraints {" << literals_to_string(u.constraints)
                << "}\n";
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int run_schedule(const std::string& runlog, const std::string& truth_file, double budget,
                 const std::string& mode, unsigned rounds, const std::vector<double>& cutoffs,
                 double step, bool prefix) {
  using namespace hosup::sched;
  try {
    auto runs = ingest_runlog(runlog);
    GreedyOptions go;
    go.step = step;
    go.skip_unaffordable = !prefix;
    Schedule s;
    if (mode == "deterministic") {
      s = greedy_schedule(evals_from_runs(runs), budget, go);
    } else if (rounds == 0) {
      s = greedy_schedule_expected(distributions_from_runs(runs), budget, go);
    } else {
      // Start from the lowest-seed run of every cell and draw the remaining
      // logged runs back in, one per relied-upon cell and round.
      std::map<Cell, std::vector<RunRecord>> pool;
      for (const auto& r : runs) pool[{r.strategy, r.problem}].push_back(r);
      std::vector<RunRecord> initial;
      for (auto& [cell, rs] : pool) {
        std::stable_sort(rs.begin(), rs.end(),
                         [](const RunRecord& a, const RunRecord& b) { return a.seed < b.seed; });
        initial.push_back(rs.front());
        rs.erase(rs.begin());
      }
      auto sampler = [&](const std::string& st, const std::string& pr) {
        std::vector<RunRecord> out;
        auto& rs = pool[{st, pr}];
        if (!rs.empty()) {
          out.push_back(rs.front());
          rs.erase(rs.begin());
        }
        return out;
      };
      auto build = [&](const Distributions& d) { return greedy_schedule_expected(d, budget, go); };
      s = iterative_reestimate(initial, build, sampler, rounds).schedule;
    }
    std::cout << s.to_text();
    auto truth = truth_from_runs(truth_file.empty() ? runs : ingest_runlog(truth_file));
    auto rep = simulate_schedule(s, truth, cutoffs);
    std::cout << "# simulated over " << rep.seeds << " seed(s)\n";
    for (std::size_t k = 0; k < cutoffs.size(); ++k)
      std::cout << "# covered@" << cutoffs[k] << " " << rep.covered_at[k] << "\n";
    std::cout << "# covered " << rep.covered << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher-order superposition prover with depth-bounded unification"};
  app.require_subcommand(1);

  auto* prove = app.add_subcommand("prove", "Saturate a THF problem");
  ProverConfig cfg;
  std::string file, applicative = "off", func_ext = "axiom", eq_equiv = "off", choice = "off",
                    selection = "paper", precedence = "frequency", shuffle = "off", cnf = "eager";
  bool proof = false;
  prove->add_option("problem", file, "TPTP THF file")->required()->check(CLI::ExistingFile);
  prove->add_option("--hol-unif-depth", cfg.hol_unif_depth, "Unification depth bound")
      ->capture_default_str();
  prove->add_option("--applicative-unif", applicative)->check(CLI::IsMember(kOnOff))->capture_default_str();
  prove->add_option("--func-ext", func_ext)->check(CLI::IsMember({"axiom", "off"}))->capture_default_str();
  prove->add_option("--equality-to-equiv", eq_equiv)->check(CLI::IsMember(kOnOff))->capture_default_str();
  prove->add_option("--choice-axiom", choice)->check(CLI::IsMember(kOnOff))->capture_default_str();
  prove->add_option("--literal-selection", selection)
      ->check(CLI::IsMember({"paper", "none"}))
      ->capture_default_str();
  prove->add_option("--precedence", precedence)
      ->check(CLI::IsMember({"frequency", "occurrence"}))
      ->capture_default_str();
  prove->add_option("--naming-threshold", cfg.naming_threshold)->capture_default_str();
  prove->add_option("--time-limit", cfg.time_limit, "Seconds, 0 for none")->capture_default_str();
  prove->add_option("--iteration-limit", cfg.iteration_limit)->capture_default_str();
  prove->add_option("--random-seed", cfg.seed)->capture_default_str();
  prove->add_option("--shuffle", shuffle)->check(CLI::IsMember(kOnOff))->capture_default_str();
  prove->add_option("--cnf-on-the-fly", cnf, "Only eager is supported")->capture_default_str();
  prove->add_flag("--proof", proof, "Print the refutation");

  auto* unify = app.add_subcommand("unify", "Enumerate depth-bounded unifiers of an equation");
  unsigned depth = 2;
  bool unif_app = false, trace = false;
  std::vector<std::string> decls;
  std::string decl_file, equation;
  unify->add_option("--depth", depth)->capture_default_str();
  unify->add_flag("--applicative", unif_app, "First-order unification of the applicative encoding");
  unify->add_flag("--trace", trace, "Print the search tree");
  unify->add_option("--decl", decls, "Symbol declaration, e.g. 'f: $i > $i'");
  unify->add_option("--decls", decl_file, "THF file with declarations")->check(CLI::ExistingFile);
  unify->add_option("equation", equation, "THF formula ! [X: T]: s = t")->required();

  auto* schedule = app.add_subcommand("schedule", "Build a strategy schedule from a run log");
  std::string runlog, truth, mode = "deterministic";
  double budget = 0, step = 0;
  unsigned rounds = 0;
  bool prefix = false;
  std::vector<double> cutoffs{1, 10, 30, 60, 120, 960};
  schedule->add_option("runlog", runlog, "CSV strategy,problem,seed,status,time")
      ->required()
      ->check(CLI::ExistingFile);
  schedule->add_option("--budget", budget, "Total seconds")->required()->check(CLI::PositiveNumber);
  schedule->add_option("--mode", mode)
      ->check(CLI::IsMember({"deterministic", "expected"}))
      ->capture_default_str();
  schedule->add_option("--rounds", rounds, "Re-estimation rounds (expected mode)")->capture_default_str();
  schedule->add_option("--cutoffs", cutoffs)->delimiter(',')->capture_default_str();
  schedule->add_option("--truth", truth, "Held-out run log for simulation")->check(CLI::ExistingFile);
  schedule->add_option("--step", step, "Round slices up to this granularity")->capture_default_str();
  schedule->add_flag("--prefix", prefix, "Stop at the first candidate that does not fit");

  CLI11_PARSE(app, argc, argv);

  if (prove->parsed())
    return run_prove(file, cfg, applicative, func_ext, eq_equiv, choice, selection, precedence,
                     shuffle, cnf, proof);
  if (unify->parsed()) return run_unify(depth, unif_app, trace, decls, decl_file, equation);
  return run_schedule(runlog, truth, budget, mode, rounds, cutoffs, step, prefix);
}
