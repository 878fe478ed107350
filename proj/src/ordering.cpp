#include "hosup/ordering.hpp"

#include <algorithm>
#include <tuple>

namespace hosup {

OrderingResult reverse(OrderingResult r) {
  switch (r) {
    case OrderingResult::Greater: return OrderingResult::Less;
    case OrderingResult::Less: return OrderingResult::Greater;
    default: return r;
  }
}

const char* to_string(OrderingResult r) {
  switch (r) {
    case OrderingResult::Greater: return "GREATER";
    case OrderingResult::Less: return "LESS";
    case OrderingResult::Equal: return "EQUAL";
    case OrderingResult::Incomparable: return "INCOMPARABLE";
  }
  return "?";
}

namespace {

void count_symbols(const Term& t, std::map<std::string, int, std::less<>>& freq,
                   std::vector<std::string>& order) {
  switch (t.kind()) {
    case Term::Kind::Sym:
      if (freq[t.name()]++ == 0) order.push_back(t.name());
      break;
    case Term::Kind::App:
      count_symbols(t.fun(), freq, order);
      count_symbols(t.arg(), freq, order);
      break;
    case Term::Kind::Lam:
      count_symbols(t.body(), freq, order);
      break;
    default:
      break;
  }
}

// Precedence key of the encoded top symbol: indices < lam < app < signature symbols.
struct SymKey {
  int group;
  int rank;
  std::uint32_t index;
  std::string name;
  auto tie() const { return std::tie(group, rank, index, name); }
};

SymKey key_of(const Term& t, const OrderingConfig& cfg) {
  switch (t.kind()) {
    case Term::Kind::Index:
      return {0, 0, t.db_index(), {}};
    case Term::Kind::Lam:
      return {1, 0, 0, {}};
    case Term::Kind::App:
      return {2, 0, 0, {}};
    case Term::Kind::Sym: {
      auto it = cfg.precedence.find(t.name());
      if (it != cfg.precedence.end()) return {3, it->second, 0, {}};
      return {4, 0, 0, t.name()};
    }
    case Term::Kind::Var:
      break;
  }
  return {-1, 0, 0, {}};
}

void var_counts(const Term& t, std::map<VarId, int>& counts, int delta) {
  if (!t.has_vars()) return;
  switch (t.kind()) {
    case Term::Kind::Var:
      counts[t.var_id()] += delta;
      break;
    case Term::Kind::App:
      var_counts(t.fun(), counts, delta);
      var_counts(t.arg(), counts, delta);
      break;
    case Term::Kind::Lam:
      var_counts(t.body(), counts, delta);
      break;
    default:
      break;
  }
}

int compare_types_total(const Term& s, const Term& t) {
  if (int c = compare(s.type(), t.type())) return c;
  if (s.is_sym() && t.is_sym()) {
    for (std::size_t i = 0; i < std::min(s.type_args().size(), t.type_args().size()); ++i)
      if (int c = compare(s.type_args()[i], t.type_args()[i])) return c;
  }
  if (s.is_lam() && t.is_lam()) return compare(s.binder_type(), t.binder_type());
  return 0;
}

OrderingResult kbo(const Term& s, const Term& t, const OrderingConfig& cfg);

OrderingResult kbo_same_weight(const Term& s, const Term& t, bool s_geq, bool t_geq,
                               const OrderingConfig& cfg) {
  if (s.is_var() || t.is_var()) return OrderingResult::Incomparable;
  auto ks = key_of(s, cfg), kt = key_of(t, cfg);
  if (ks.tie() != kt.tie()) {
    if (ks.tie() > kt.tie()) return s_geq ? OrderingResult::Greater : OrderingResult::Incomparable;
    return t_geq ? OrderingResult::Less : OrderingResult::Incomparable;
  }
  OrderingResult r = OrderingResult::Equal;
  if (s.is_app()) {
    r = kbo(s.fun(), t.fun(), cfg);
    if (r == OrderingResult::Equal) r = kbo(s.arg(), t.arg(), cfg);
  } else if (s.is_lam()) {
    r = kbo(s.body(), t.body(), cfg);
  }
  if (r == OrderingResult::Equal) {
    int c = compare_types_total(s, t);
    if (c > 0) r = OrderingResult::Greater;
    if (c < 0) r = OrderingResult::Less;
  }
  if (r == OrderingResult::Greater) return s_geq ? r : OrderingResult::Incomparable;
  if (r == OrderingResult::Less) return t_geq ? r : OrderingResult::Incomparable;
  return r;
}

OrderingResult kbo(const Term& s, const Term& t, const OrderingConfig& cfg) {
  if (s == t) return OrderingResult::Equal;
  if (s.var_below_lambda() || t.var_below_lambda()) return OrderingResult::Incomparable;
  std::map<VarId, int> counts;
  var_counts(s, counts, 1);
  var_counts(t, counts, -1);
  bool s_geq = true, t_geq = true;
  for (const auto& [v, c] : counts) {
    if (c < 0) s_geq = false;
    if (c > 0) t_geq = false;
  }
  if (s.weight() > t.weight()) return s_geq ? OrderingResult::Greater : OrderingResult::Incomparable;
  if (s.weight() < t.weight()) return t_geq ? OrderingResult::Less : OrderingResult::Incomparable;
  return kbo_same_weight(s, t, s_geq, t_geq, cfg);
}

std::vector<Term> literal_multiset(const Literal& l) {
  if (l.positive) return {l.lhs, l.rhs};
  return {l.lhs, l.lhs, l.rhs, l.rhs};
}

// Dershowitz-Manna extension of a partial order.
OrderingResult compare_multisets(std::vector<Term> m, std::vector<Term> n,
                                 const OrderingConfig& cfg) {
  for (std::size_t i = 0; i < m.size();) {
    auto it = std::find(n.begin(), n.end(), m[i]);
    if (it != n.end()) {
      n.erase(it);
      m.erase(m.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  if (m.empty() && n.empty()) return OrderingResult::Equal;
  auto dominates = [&](const std::vector<Term>& big, const std::vector<Term>& small, bool forward) {
    if (big.empty()) return false;
    for (const auto& y : small) {
      bool found = false;
      for (const auto& x : big) {
        auto r = forward ? kbo(x, y, cfg) : kbo(y, x, cfg);
        if (r == (forward ? OrderingResult::Greater : OrderingResult::Less)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  };
  if (dominates(m, n, true)) return OrderingResult::Greater;
  if (dominates(n, m, true)) return OrderingResult::Less;
  return OrderingResult::Incomparable;
}

}  // namespace

OrderingConfig OrderingConfig::from_clauses(std::span<const std::vector<Literal>> clauses,
                                            PrecedenceMode mode) {
  std::map<std::string, int, std::less<>> freq;
  std::vector<std::string> order;
  for (const auto& c : clauses)
    for (const auto& l : c) {
      count_symbols(l.lhs, freq, order);
      count_symbols(l.rhs, freq, order);
    }
  OrderingConfig cfg;
  if (mode == PrecedenceMode::Occurrence) {
    for (std::size_t i = 0; i < order.size(); ++i) cfg.precedence[order[i]] = static_cast<int>(i);
    return cfg;
  }
  std::vector<std::pair<int, std::string>> ranked;
  for (const auto& [name, f] : freq) ranked.emplace_back(f, name);
  // Most frequent first (smallest); ties by name.
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (std::size_t i = 0; i < ranked.size(); ++i) cfg.precedence[ranked[i].second] = static_cast<int>(i);
  return cfg;
}

OrderingResult compare(const Term& s, const Term& t, const OrderingConfig& cfg) {
  return kbo(s, t, cfg);
}

OrderingResult compare(const Literal& a, const Literal& b, const OrderingConfig& cfg) {
  return compare_multisets(literal_multiset(a), literal_multiset(b), cfg);
}

std::vector<std::size_t> select(const std::vector<Literal>& lits, SelectionMode mode) {
  if (mode == SelectionMode::None) return {};
  std::size_t best = lits.size();
  for (std::size_t i = 0; i < lits.size(); ++i) {
    const auto& l = lits[i];
    if (l.positive || l.is_flex_flex()) continue;
    if (best == lits.size() || l.weight() > lits[best].weight()) best = i;
  }
  if (best == lits.size()) return {};
  return {best};
}

bool is_maximal(const std::vector<Literal>& lits, std::size_t i, bool strict,
                const OrderingConfig& cfg) {
  for (std::size_t j = 0; j < lits.size(); ++j) {
    if (j == i) continue;
    auto r = compare(lits[j], lits[i], cfg);
    if (r == OrderingResult::Greater) return false;
    if (strict && r == OrderingResult::Equal) return false;
  }
  return true;
}

bool eligible(const std::vector<Literal>& lits, std::size_t i, const Substitution& sigma,
              bool strict, SelectionMode mode, const OrderingConfig& cfg) {
  if (lits[i].is_flex_flex()) return false;
  auto sel = select(lits, mode);
  if (!sel.empty()) {
    if (lits[i].positive) return false;
    return std::find(sel.begin(), sel.end(), i) != sel.end();
  }
  if (sigma.empty()) return is_maximal(lits, i, strict, cfg);
  std::vector<Literal> inst;
  inst.reserve(lits.size());
  for (const auto& l : lits) inst.push_back(l.apply(sigma));
  return is_maximal(inst, i, strict, cfg);
}

}  // namespace hosup
