#include "hosup/prover.hpp"

namespace hosup {

ProveOutcome prove(Problem p, const ProverConfig& cfg) {
  PreprocessOptions pre;
  pre.equality_to_equiv = cfg.equality_to_equiv;
  pre.func_ext_axiom = cfg.func_ext == FuncExt::Axiom;
  pre.choice_axiom = cfg.choice_axiom;
  const bool conjecture = p.has_conjecture();
  p = preprocess(std::move(p), pre);
  ClausifyOptions co;
  co.naming_threshold = cfg.naming_threshold;
  ProveOutcome o;
  o.input = clausify(p, co);
  o.result = saturate(o.input, cfg);
  o.szs = szs_status(o.result, conjecture);
  return o;
}

ProveOutcome prove_file(const std::filesystem::path& path, const ProverConfig& cfg) {
  return prove(parse_file(path), cfg);
}

std::string format_outcome(const ProveOutcome& o, const std::string& problem_name, bool proof) {
  std::string out = "% SZS status " + o.szs + " for " + problem_name + "\n";
  if (proof && o.result.status == Status::Refutation) {
    out += "% SZS output start CNFRefutation for " + problem_name + "\n";
    for (const auto& inf : extract_proof(o.result)) out += inf.to_string() + "\n";
    out += "% SZS output end CNFRefutation for " + problem_name + "\n";
  }
  return out;
}

}  // namespace hosup
