#include "adfbn/random.hpp"

#include <algorithm>
#include <numeric>

namespace adfbn {

Signature numbered_signature(std::size_t n, std::string_view prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return Signature(std::move(names));
}

DungFramework random_dung(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<DungFramework::Attack> attacks;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (coin(rng)) attacks.emplace_back(a, b);
  return DungFramework(numbered_signature(n), std::move(attacks));
}

Formula random_function(const std::vector<std::size_t>& vars, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Formula> minterms;
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << vars.size()); ++row) {
    if (!coin(rng)) continue;
    std::vector<Formula> lits;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      const Formula x = Formula::variable(vars[k]);
      lits.push_back((row >> k) & 1U ? x : Formula::negation(x));
    }
    minterms.push_back(Formula::conjunction(lits));
  }
  return Formula::disjunction(minterms);
}

Formula random_formula(const std::vector<std::size_t>& vars, unsigned depth, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 1 : 7);
  const int kind = vars.empty() ? 0 : pick(rng);
  if (kind == 0) {
    std::uniform_int_distribution<std::size_t> leaf(0, vars.size() + (vars.empty() ? 1 : 0));
    const std::size_t k = leaf(rng);
    return k < vars.size() ? Formula::variable(vars[k]) : Formula::constant(k == vars.size());
  }
  if (kind == 1) return Formula::variable(vars[std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(rng)]);
  if (kind == 2) return Formula::negation(random_formula(vars, depth - 1, rng));
  Formula lhs = random_formula(vars, depth - 1, rng);
  Formula rhs = random_formula(vars, depth - 1, rng);
  switch (kind) {
    case 3: return Formula::conjunction(lhs, rhs);
    case 4: return Formula::disjunction(lhs, rhs);
    case 5: return Formula::implication(lhs, rhs);
    case 6: return Formula::equivalence(lhs, rhs);
    default: return Formula::exclusive_or(lhs, rhs);
  }
}

namespace {

Framework sampled_framework(std::size_t n, Rng& rng, auto&& indegree) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<Formula> formulas;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> parents;
    std::sample(all.begin(), all.end(), std::back_inserter(parents), indegree(), rng);
    formulas.push_back(random_function(parents, rng));
  }
  return Framework::from_formulas(numbered_signature(n), std::move(formulas), Validation::lenient);
}

}  // namespace

Framework random_framework(std::size_t n, std::size_t max_indegree, Rng& rng) {
  std::uniform_int_distribution<std::size_t> indegree(0, std::min(max_indegree, n));
  return sampled_framework(n, rng, [&] { return indegree(rng); });
}

Framework random_fixed_indegree_framework(std::size_t n, std::size_t indegree, Rng& rng) {
  return sampled_framework(n, rng, [&] { return std::min(indegree, n); });
}

}  // namespace adfbn
