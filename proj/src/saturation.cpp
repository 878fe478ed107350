#include "hosup/saturation.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <tuple>

#include "hosup/simplify.hpp"

namespace hosup {

CalculusConfig ProverConfig::calculus(OrderingConfig ordering) const {
  CalculusConfig c;
  c.unif.depth = hol_unif_depth;
  c.unif.applicative = applicative_unif;
  c.selection = selection;
  c.ordering = std::move(ordering);
  return c;
}

namespace {

class Saturator {
 public:
  Saturator(const ProverConfig& cfg, SaturationResult& res) : cfg_(cfg), res_(res) {}

  void run(std::vector<Clause> input) {
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    for (auto& c : input) {
      if (add(std::move(c))) return finish(Status::Refutation, elapsed());
    }
    std::uint64_t tick = 0;
    const std::uint64_t cycle = std::max(1u, cfg_.age_ratio + cfg_.weight_ratio);
    while (!by_age_.empty()) {
      if (res_.stats.iterations >= cfg_.iteration_limit) return finish(Status::ResourceOut, elapsed());
      if (cfg_.time_limit > 0 && elapsed() > cfg_.time_limit) {
        res_.timed_out = true;
        return finish(Status::ResourceOut, elapsed());
      }
      ++res_.stats.iterations;
      const bool use_age = (tick++ % cycle) < cfg_.age_ratio;
      ClausePtr given = pop(use_age);
      if (subsumed_by(given->literals, active_)) {
        ++res_.stats.deleted;
        continue;
      }
      active_.push_back(given);
      if (given->literals.size() == 1 && given->literals[0].positive) units_.push_back(given);
      for (auto& c : generate(*given, active_, res_.calculus)) {
        ++res_.stats.generated;
        if (add(std::move(c))) return finish(Status::Refutation, elapsed());
      }
    }
    finish(Status::SaturatedUnknown, elapsed());
  }

 private:
  void finish(Status s, double secs) {
    res_.status = s;
    res_.stats.seconds = secs;
  }

  ClausePtr record(std::vector<Literal> lits, Derivation d) {
    auto c = std::make_shared<Clause>();
    c->literals = normalize_variables(lits);
    c->id = next_id_++;
    c->age = c->id;
    c->derivation = std::move(d);
    res_.clauses.emplace(c->id, c);
    return c;
  }

  static Derivation step(Rule r, std::vector<ClauseId> premises) {
    Derivation d;
    d.rule = r;
    d.premises = std::move(premises);
    return d;
  }

  // Registers a new clause, simplifies it and queues the survivor.  True when
  // the empty clause was reached.
  bool add(Clause c) {
    ClausePtr cur = record(std::move(c.literals), std::move(c.derivation));
    for (;;) {
      if (cur->is_empty()) {
        res_.empty_clause = cur;
        return true;
      }
      if (auto ff = flex_flex_simp(*cur)) {
        res_.empty_clause = record({}, step(Rule::FlexFlexSimp, {cur->id}));
        return true;
      }
      auto trimmed = remove_trivial_literals(cur->literals);
      if (trimmed.size() != cur->literals.size()) {
        cur = record(std::move(trimmed), step(Rule::TrivialLiteral, {cur->id}));
        continue;
      }
      auto dedup = remove_duplicate_literals(cur->literals);
      if (dedup.size() != cur->literals.size()) {
        cur = record(std::move(dedup), step(Rule::DuplicateLiteral, {cur->id}));
        continue;
      }
      if (is_tautology(cur->literals)) {
        ++res_.stats.deleted;
        return false;
      }
      if (auto dm = demodulate(*cur, units_, res_.calculus.ordering)) {
        std::vector<ClauseId> prem{cur->id};
        prem.insert(prem.end(), dm->used.begin(), dm->used.end());
        cur = record(std::move(dm->literals), step(Rule::Demod, std::move(prem)));
        continue;
      }
      break;
    }
    if (subsumed_by(cur->literals, active_) || subsumed_by_passive(cur->literals)) {
      ++res_.stats.deleted;
      return false;
    }
    ++res_.stats.retained;
    passive_.emplace(cur->id, cur);
    by_age_.emplace(cur->age, cur->id);
    by_weight_.emplace(cur->weight(), cur->age, cur->id);
    return false;
  }

  ClausePtr pop(bool use_age) {
    ClauseId id;
    if (use_age || by_weight_.empty()) {
      id = by_age_.begin()->second;
    } else {
      id = std::get<2>(*by_weight_.begin());
    }
    ClausePtr c = passive_.at(id);
    passive_.erase(id);
    by_age_.erase({c->age, id});
    by_weight_.erase({c->weight(), c->age, id});
    return c;
  }

  static bool subsumed_by(const std::vector<Literal>& lits, const std::vector<ClausePtr>& set) {
    return std::any_of(set.begin(), set.end(),
                       [&](const ClausePtr& o) { return subsumes(o->literals, lits); });
  }

  bool subsumed_by_passive(const std::vector<Literal>& lits) const {
    return std::any_of(passive_.begin(), passive_.end(),
                       [&](const auto& kv) { return subsumes(kv.second->literals, lits); });
  }

  const ProverConfig& cfg_;
  SaturationResult& res_;
  ClauseId next_id_ = 1;
  std::vector<ClausePtr> active_;
  std::vector<ClausePtr> units_;
  std::map<ClauseId, ClausePtr> passive_;
  std::set<std::pair<std::uint32_t, ClauseId>> by_age_;
  std::set<std::tuple<std::uint32_t, std::uint32_t, ClauseId>> by_weight_;
};

}  // namespace

SaturationResult saturate(std::vector<Clause> input, const ProverConfig& cfg) {
  if (cfg.shuffle) {
    std::mt19937_64 rng(cfg.seed);
    std::shuffle(input.begin(), input.end(), rng);
    for (auto& c : input) std::shuffle(c.literals.begin(), c.literals.end(), rng);
  }
  std::vector<std::vector<Literal>> lits;
  for (const auto& c : input) lits.push_back(c.literals);
  SaturationResult res;
  res.calculus = cfg.calculus(OrderingConfig::from_clauses(lits, cfg.precedence));
  Saturator(cfg, res).run(std::move(input));
  return res;
}

std::vector<Inference> extract_proof(const SaturationResult& r) {
  if (r.status != Status::Refutation || !r.empty_clause)
    throw ProofError("no refutation to extract a proof from");
  std::set<ClauseId> seen;
  std::vector<ClauseId> todo{r.empty_clause->id};
  while (!todo.empty()) {
    ClauseId id = todo.back();
    todo.pop_back();
    if (!seen.insert(id).second) continue;
    auto it = r.clauses.find(id);
    if (it == r.clauses.end()) throw ProofError("missing clause " + std::to_string(id));
    for (ClauseId p : it->second->derivation.premises) {
      if (p >= id) throw ProofError("premise " + std::to_string(p) + " not older than " + std::to_string(id));
      todo.push_back(p);
    }
  }
  std::vector<Inference> proof;
  for (ClauseId id : seen) {
    const ClausePtr& c = r.clauses.at(id);
    proof.push_back(Inference{c->derivation.rule, c->derivation.premises, c->derivation.unifier, c});
  }
  return proof;
}

namespace {

bool any_variant(const std::vector<Clause>& outs, const Clause& target) {
  return std::any_of(outs.begin(), outs.end(),
                     [&](const Clause& c) { return is_variant(c.literals, target.literals); });
}

}  // namespace

std::string replay_proof(const std::vector<Inference>& proof, const CalculusConfig& cfg) {
  std::map<ClauseId, ClausePtr> by_id;
  for (const auto& inf : proof) by_id.emplace(inf.conclusion->id, inf.conclusion);
  for (const auto& inf : proof) {
    const Clause& concl = *inf.conclusion;
    std::vector<ClausePtr> prem;
    for (ClauseId p : inf.premises) {
      auto it = by_id.find(p);
      if (it == by_id.end()) return "step " + std::to_string(concl.id) + ": premise " + std::to_string(p) + " missing";
      prem.push_back(it->second);
    }
    auto need = [&](std::size_t n) { return prem.size() == n; };
    bool ok = false;
    switch (inf.rule) {
      case Rule::Input:
      case Rule::Axiom:
        ok = prem.empty();
        break;
      case Rule::Sup:
        ok = need(2) && any_variant(superposition(*prem[0], *prem[1], cfg), concl);
        break;
      case Rule::EqRes:
        ok = need(1) && any_variant(equality_resolution(*prem[0], cfg), concl);
        break;
      case Rule::EqFact:
        ok = need(1) && any_variant(equality_factoring(*prem[0], cfg), concl);
        break;
      case Rule::ArgCong:
        ok = need(1) && any_variant(arg_cong(*prem[0], cfg), concl);
        break;
      case Rule::Imitate:
        ok = need(1) && any_variant(imitate_rule(*prem[0], cfg), concl);
        break;
      case Rule::Project:
        ok = need(1) && any_variant(project_rule(*prem[0], cfg), concl);
        break;
      case Rule::FlexFlexSimp:
        ok = need(1) && flex_flex_simp(*prem[0]).has_value() && concl.is_empty();
        break;
      case Rule::TrivialLiteral:
        ok = need(1) && is_variant(remove_trivial_literals(prem[0]->literals), concl.literals);
        break;
      case Rule::DuplicateLiteral:
        ok = need(1) && is_variant(remove_duplicate_literals(prem[0]->literals), concl.literals);
        break;
      case Rule::Demod: {
        if (prem.size() < 2) break;
        std::vector<ClausePtr> units(prem.begin() + 1, prem.end());
        auto dm = demodulate(*prem[0], units, cfg.ordering);
        ok = dm && is_variant(dm->literals, concl.literals);
        break;
      }
    }
    if (!ok) return "step " + std::to_string(concl.id) + " (" + rule_name(inf.rule) + ") does not replay";
  }
  return {};
}

std::string szs_status(const SaturationResult& r, bool has_conjecture) {
  switch (r.status) {
    case Status::Refutation:
      return has_conjecture ? "Theorem" : "Unsatisfiable";
    case Status::SaturatedUnknown:
      return "Unknown";
    case Status::ResourceOut:
      return r.timed_out ? "Timeout" : "ResourceOut";
  }
  return "Unknown";
}

}  // namespace hosup
