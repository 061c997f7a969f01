#include "adfbn/framework.hpp"

#include <algorithm>

namespace adfbn {

namespace {

constexpr std::size_t max_table_parents = 16;

std::string describe(const std::vector<Diagnostic>& ds) {
  std::string out = "invalid framework";
  for (const auto& d : ds) out += "; " + d.message;
  return out;
}

}  // namespace

InvalidFramework::InvalidFramework(std::vector<Diagnostic> diagnostics)
    : std::invalid_argument(describe(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::vector<Diagnostic> validate(const Signature& sig, const std::vector<std::vector<std::size_t>>& parents,
                                 const std::vector<Formula>& formulas, const Limits& limits) {
  std::vector<Diagnostic> out;
  const std::size_t n = sig.size();
  if (parents.size() != n || formulas.size() != n)
    throw SignatureMismatch("validate: parents/formulas do not cover the signature");

  for (std::size_t a = 0; a < n; ++a) {
    const auto& par = parents[a];
    for (auto b : par)
      if (b >= n)
        out.push_back({Diagnostic::Kind::unknown_argument, a, b,
                       "parent index " + std::to_string(b) + " of " + sig.name(a) + " is outside the signature"});
    for (auto v : formulas[a].vars()) {
      if (v >= n) {
        out.push_back({Diagnostic::Kind::unknown_argument, a, v,
                       "variable index " + std::to_string(v) + " in condition of " + sig.name(a) + " is outside the signature"});
      } else if (std::find(par.begin(), par.end(), v) == par.end()) {
        out.push_back({Diagnostic::Kind::variable_outside_parents, a, v,
                       "condition of " + sig.name(a) + " mentions " + sig.name(v) + ", which is not a parent"});
      }
    }
    for (auto b : par) {
      if (b >= n) continue;
      if (!depends_on(formulas[a], b, limits)) {
        out.push_back({Diagnostic::Kind::non_dependent_parent, a, b,
                       "condition of " + sig.name(a) + " does not depend on " + sig.name(b)});
      }
    }
  }
  return out;
}

Framework::Framework(Signature sig, std::vector<std::vector<std::size_t>> parents, std::vector<Formula> formulas,
                     Validation mode, const Limits& limits)
    : sig_(std::move(sig)), parents_(std::move(parents)), formulas_(std::move(formulas)) {
  const std::size_t n = sig_.size();
  if (parents_.size() != n || formulas_.size() != n)
    throw SignatureMismatch("framework: parents/formulas do not cover the signature");
  for (auto& par : parents_) {
    std::sort(par.begin(), par.end());
    par.erase(std::unique(par.begin(), par.end()), par.end());
  }

  if (mode == Validation::lenient) {
    // Keep only the semantic support; substitute constants for the rest so
    // the formula mentions parents only.
    for (std::size_t a = 0; a < n; ++a) {
      for (auto v : formulas_[a].vars())
        if (v < n && !depends_on(formulas_[a], v, limits)) formulas_[a] = substitute(formulas_[a], v, false);
      auto support = formulas_[a].vars();
      std::vector<std::size_t> kept;
      for (auto v : support)
        if (v < n) kept.push_back(v);
      parents_[a] = std::move(kept);
    }
  }

  if (auto ds = validate(sig_, parents_, formulas_, limits); !ds.empty()) throw InvalidFramework(std::move(ds));

  dnfs_.reserve(n);
  negated_dnfs_.reserve(n);
  tables_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    dnfs_.push_back(to_dnf(formulas_[a]));
    negated_dnfs_.push_back(to_dnf_negation(formulas_[a]));
    const auto& par = parents_[a];
    if (par.size() <= max_table_parents) {
      auto& table = tables_[a];
      table.resize(std::size_t{1} << par.size());
      std::vector<std::uint8_t> local(n, 0);
      for (std::size_t row = 0; row < table.size(); ++row) {
        for (std::size_t j = 0; j < par.size(); ++j) local[par[j]] = (row >> j) & 1U;
        table[row] = formulas_[a].eval([&](std::size_t v) { return local[v] != 0; }) ? 1 : 0;
      }
    }
  }
}

Framework Framework::from_formulas(Signature sig, std::vector<Formula> formulas, Validation mode, const Limits& limits) {
  std::vector<std::vector<std::size_t>> parents;
  parents.reserve(formulas.size());
  for (const auto& f : formulas) parents.push_back(f.vars());
  return Framework(std::move(sig), std::move(parents), std::move(formulas), mode, limits);
}

bool Framework::is_parent(std::size_t a, std::size_t b) const {
  const auto& par = parents_.at(b);
  return std::binary_search(par.begin(), par.end(), a);
}

std::vector<std::pair<std::size_t, std::size_t>> Framework::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t b = 0; b < size(); ++b)
    for (auto a : parents_[b]) out.emplace_back(a, b);
  return out;
}

std::size_t Framework::max_indegree() const {
  std::size_t m = 0;
  for (const auto& p : parents_) m = std::max(m, p.size());
  return m;
}

bool Framework::evaluate(std::size_t a, const TwoValuedState& x) const {
  require_same_size(x.size(), size(), "Framework::evaluate");
  const auto& table = tables_[a];
  if (table.empty()) return formulas_[a].eval([&](std::size_t v) { return x[v]; });
  const auto& par = parents_[a];
  std::size_t row = 0;
  for (std::size_t j = 0; j < par.size(); ++j) row |= static_cast<std::size_t>(x[par[j]]) << j;
  return table[row] != 0;
}

bool Framework::evaluate_index(std::size_t a, std::uint64_t x) const {
  const std::size_t n = size();
  const auto& table = tables_[a];
  if (table.empty()) return formulas_[a].eval([&](std::size_t v) { return (x & index_bit(v, n)) != 0; });
  const auto& par = parents_[a];
  std::size_t row = 0;
  for (std::size_t j = 0; j < par.size(); ++j) row |= static_cast<std::size_t>((x & index_bit(par[j], n)) != 0) << j;
  return table[row] != 0;
}

TwoValuedState Framework::update(const TwoValuedState& x) const {
  TwoValuedState y(size());
  for (std::size_t a = 0; a < size(); ++a) y.set(a, evaluate(a, x));
  return y;
}

std::uint64_t Framework::update_index(std::uint64_t x) const {
  const std::size_t n = size();
  std::uint64_t y = 0;
  for (std::size_t a = 0; a < n; ++a)
    if (evaluate_index(a, x)) y |= index_bit(a, n);
  return y;
}

std::vector<Diagnostic> validate(const Framework& fr) {
  std::vector<std::vector<std::size_t>> parents;
  std::vector<Formula> formulas;
  for (std::size_t a = 0; a < fr.size(); ++a) {
    parents.push_back(fr.parents(a));
    formulas.push_back(fr.formula(a));
  }
  return validate(fr.signature(), parents, formulas);
}

// ---------------------------------------------------------------------------

Interpretation gamma_bruteforce(const Framework& fr, const Interpretation& v, const Limits& limits) {
  require_same_size(v.size(), fr.size(), "gamma_bruteforce");
  const std::size_t n = fr.size();
  std::vector<std::uint8_t> seen_true(n, 0), seen_false(n, 0);
  for (const auto& x : completions(v, limits)) {
    for (std::size_t a = 0; a < n; ++a) {
      if (fr.evaluate(a, x)) seen_true[a] = 1;
      else seen_false[a] = 1;
    }
  }
  Interpretation out(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (seen_true[a] && !seen_false[a]) out.set(a, TruthValue::one);
    else if (seen_false[a] && !seen_true[a]) out.set(a, TruthValue::zero);
  }
  return out;
}

DoubledAssignment sigma_prime(const Interpretation& v) {
  DoubledAssignment sp{std::vector<std::uint8_t>(v.size()), std::vector<std::uint8_t>(v.size())};
  for (std::size_t a = 0; a < v.size(); ++a) {
    sp.p[a] = v[a] != TruthValue::zero;
    sp.n[a] = v[a] != TruthValue::one;
  }
  return sp;
}

bool sigma_eval(const Dnf& dnf, const DoubledAssignment& sp) {
  for (const auto& term : dnf.terms()) {
    bool live = true;
    for (const auto& lit : term) {
      if (!(lit.positive ? sp.p[lit.var] : sp.n[lit.var])) {
        live = false;
        break;
      }
    }
    if (live) return true;
  }
  return false;
}

TruthValue tau(bool positive_live, bool negative_live) {
  if (positive_live && negative_live) return TruthValue::undecided;
  if (positive_live) return TruthValue::one;
  if (negative_live) return TruthValue::zero;
  throw std::logic_error("tau(0,0): DNF pair of a condition and its negation is inconsistent");
}

Interpretation gamma_dnf(const Framework& fr, const Interpretation& v) {
  require_same_size(v.size(), fr.size(), "gamma_dnf");
  const auto sp = sigma_prime(v);
  Interpretation out(fr.size());
  for (std::size_t a = 0; a < fr.size(); ++a)
    out.set(a, tau(sigma_eval(fr.dnf(a), sp), sigma_eval(fr.negated_dnf(a), sp)));
  return out;
}

bool is_admissible(const Framework& fr, const Interpretation& v) { return info_leq(v, gamma_dnf(fr, v)); }

bool is_complete_interpretation(const Framework& fr, const Interpretation& v) { return gamma_dnf(fr, v) == v; }

bool is_conflict_free_interpretation(const Framework& fr, const Interpretation& v) {
  require_same_size(v.size(), fr.size(), "is_conflict_free_interpretation");
  const auto sp = sigma_prime(v);
  for (std::size_t a = 0; a < fr.size(); ++a) {
    if (v[a] == TruthValue::one && !sigma_eval(fr.dnf(a), sp)) return false;
    if (v[a] == TruthValue::zero && !sigma_eval(fr.negated_dnf(a), sp)) return false;
  }
  return true;
}

Interpretation grounded_interpretation(const Framework& fr) {
  Interpretation v = Interpretation::all_undecided(fr.size());
  for (;;) {
    Interpretation next = gamma_dnf(fr, v);
    if (next == v) return v;
    v = std::move(next);
  }
}

void require_interpretation_scan(std::size_t n, const Limits& limits) {
  if (pow3(n) > limits.max_interpretations)
    throw CapExceeded("3^" + std::to_string(n) + " interpretations exceed the scan cap");
}

void sort_interpretations(std::vector<Interpretation>& vs) {
  std::sort(vs.begin(), vs.end(),
            [](const Interpretation& a, const Interpretation& b) { return a.to_string() < b.to_string(); });
}

namespace {

std::vector<Interpretation> from_ordinals(const std::vector<std::uint64_t>& ks, std::size_t n) {
  std::vector<Interpretation> out;
  out.reserve(ks.size());
  for (auto k : ks) out.push_back(Interpretation::from_ordinal(k, n));
  sort_interpretations(out);
  return out;
}

}  // namespace

std::vector<Interpretation> admissible_interpretations_bruteforce(const Framework& fr, Exec exec, const Limits& limits,
                                                                  const Budget& budget) {
  const std::size_t n = fr.size();
  require_interpretation_scan(n, limits);
  auto ks = kernels::select(
      pow3(n), [&](std::uint64_t k) { return is_admissible(fr, Interpretation::from_ordinal(k, n)); }, exec, budget);
  return from_ordinals(ks, n);
}

std::vector<Interpretation> complete_interpretations_bruteforce(const Framework& fr, Exec exec, const Limits& limits,
                                                                const Budget& budget) {
  const std::size_t n = fr.size();
  require_interpretation_scan(n, limits);
  auto ks = kernels::select(
      pow3(n), [&](std::uint64_t k) { return is_complete_interpretation(fr, Interpretation::from_ordinal(k, n)); },
      exec, budget);
  return from_ordinals(ks, n);
}

std::vector<Interpretation> preferred_interpretations_bruteforce(const Framework& fr, Exec exec, const Limits& limits,
                                                                 const Budget& budget) {
  const std::size_t n = fr.size();
  require_interpretation_scan(n, limits);
  std::vector<std::uint8_t> member(pow3(n), 0);
  for (auto k : kernels::select(
           pow3(n), [&](std::uint64_t k) { return is_admissible(fr, Interpretation::from_ordinal(k, n)); }, exec,
           budget))
    member[k] = 1;
  budget.check();
  return from_ordinals(info_maximal_ordinals(n, member), n);
}

}  // namespace adfbn
