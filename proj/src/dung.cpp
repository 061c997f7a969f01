#include "adfbn/dung.hpp"

#include <algorithm>
#include <stdexcept>

#include "adfbn/framework.hpp"

namespace adfbn {

DungFramework::DungFramework(Signature sig, std::vector<Attack> attacks)
    : sig_(std::move(sig)), attacks_(std::move(attacks)), attackers_(sig_.size()) {
  const std::size_t n = sig_.size();
  for (const auto& [a, b] : attacks_)
    if (a >= n || b >= n) throw std::out_of_range("attack endpoint outside the signature");
  std::sort(attacks_.begin(), attacks_.end());
  attacks_.erase(std::unique(attacks_.begin(), attacks_.end()), attacks_.end());
  for (const auto& [a, b] : attacks_) attackers_[b].push_back(a);

  if (n <= 63) {
    attacker_masks_.assign(n, 0);
    attacked_masks_.assign(n, 0);
    for (const auto& [a, b] : attacks_) {
      attacker_masks_[b] |= index_bit(a, n);
      attacked_masks_[a] |= index_bit(b, n);
    }
  }
}

const std::vector<std::size_t>& DungFramework::attackers(std::size_t a) const { return attackers_.at(a); }

std::vector<std::size_t> DungFramework::attackers(std::string_view name) const {
  return attackers_.at(sig_.index_of(name));
}

TwoValuedState DungFramework::attacked_by(const TwoValuedState& x) const {
  require_same_size(x.size(), size(), "attacked_by");
  TwoValuedState out(size());
  for (const auto& [a, b] : attacks_)
    if (x[a]) out.set(b, true);
  return out;
}

bool DungFramework::is_conflict_free(const TwoValuedState& x) const {
  require_same_size(x.size(), size(), "is_conflict_free");
  for (const auto& [a, b] : attacks_)
    if (x[a] && x[b]) return false;
  return true;
}

TwoValuedState DungFramework::update_two(const TwoValuedState& x) const {
  require_same_size(x.size(), size(), "update_two");
  TwoValuedState y(size());
  for (std::size_t a = 0; a < size(); ++a) {
    bool in = true;
    for (auto b : attackers_[a])
      if (x[b]) { in = false; break; }
    y.set(a, in);
  }
  return y;
}

TwoValuedState DungFramework::characteristic_two(const TwoValuedState& x) const { return update_two(update_two(x)); }

Interpretation DungFramework::update_three(const Interpretation& v) const {
  require_same_size(v.size(), size(), "update_three");
  Interpretation out(size());
  for (std::size_t a = 0; a < size(); ++a) {
    bool any_one = false, any_undecided = false;
    for (auto b : attackers_[a]) {
      any_one |= v[b] == TruthValue::one;
      any_undecided |= v[b] == TruthValue::undecided;
    }
    if (any_one) out.set(a, TruthValue::zero);
    else if (any_undecided) out.set(a, TruthValue::undecided);
    else out.set(a, TruthValue::one);
  }
  return out;
}

// --- mask kernels (n <= state cap) -------------------------------------------

DungFramework::Mask DungFramework::f_mask(Mask x) const {
  const std::size_t n = size();
  Mask y = 0;
  for (std::size_t a = 0; a < n; ++a)
    if ((attacker_masks_[a] & x) == 0) y |= index_bit(a, n);
  return y;
}

DungFramework::Mask DungFramework::range_mask(Mask x) const {
  const std::size_t n = size();
  Mask r = x;
  for (std::size_t a = 0; a < n; ++a)
    if (x & index_bit(a, n)) r |= attacked_masks_[a];
  return r;
}

bool DungFramework::conflict_free_mask(Mask x) const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    if ((x & index_bit(a, n)) && (attacked_masks_[a] & x)) return false;
  return true;
}

bool DungFramework::stable_mask(Mask x) const { return f_mask(x) == x; }

bool DungFramework::admissible_mask(Mask x) const {
  return conflict_free_mask(x) && (f_mask(f_mask(x)) & x) == x;
}

bool DungFramework::complete_mask(Mask x) const { return conflict_free_mask(x) && f_mask(f_mask(x)) == x; }

std::vector<DungFramework::Mask> DungFramework::scan(bool (DungFramework::*pred)(Mask) const, Exec exec,
                                                     const Limits& limits) const {
  if (size() > limits.max_state_bits)
    throw CapExceeded("2^" + std::to_string(size()) + " subsets exceed the state cap");
  return kernels::select(std::uint64_t{1} << size(), [&](std::uint64_t x) { return (this->*pred)(x); }, exec);
}

std::vector<DungFramework::Mask> DungFramework::conflict_free_masks(Exec exec, const Limits& limits) const {
  return scan(&DungFramework::conflict_free_mask, exec, limits);
}

std::vector<DungFramework::Mask> DungFramework::complete_masks(Exec exec, const Limits& limits) const {
  return scan(&DungFramework::complete_mask, exec, limits);
}

std::vector<TwoValuedState> DungFramework::to_states(const std::vector<Mask>& ms) const {
  std::vector<Mask> sorted = ms;
  std::sort(sorted.begin(), sorted.end());
  std::vector<TwoValuedState> out;
  out.reserve(sorted.size());
  for (auto m : sorted) out.push_back(to_state(m));
  return out;
}

std::vector<std::uint64_t> subset_maximal(const std::vector<std::uint64_t>& masks) {
  std::vector<std::uint64_t> out;
  for (auto m : masks) {
    bool dominated = false;
    for (auto o : masks)
      if (o != m && (m & o) == m) { dominated = true; break; }
    if (!dominated) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

/// Candidates whose range is ⊆-maximal among the candidates' ranges.
template <class Range>
std::vector<std::uint64_t> range_maximal(const std::vector<std::uint64_t>& candidates, Range&& range) {
  std::vector<std::uint64_t> ranges;
  ranges.reserve(candidates.size());
  for (auto c : candidates) ranges.push_back(range(c));
  const auto maximal = subset_maximal(ranges);
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (std::binary_search(maximal.begin(), maximal.end(), ranges[i])) out.push_back(candidates[i]);
  return out;
}

}  // namespace

std::vector<TwoValuedState> DungFramework::stable_extensions(Exec exec, const Limits& limits) const {
  return to_states(scan(&DungFramework::stable_mask, exec, limits));
}

std::vector<TwoValuedState> DungFramework::complete_extensions(Exec exec, const Limits& limits) const {
  return to_states(complete_masks(exec, limits));
}

TwoValuedState DungFramework::grounded_extension() const {
  TwoValuedState x(size());
  for (;;) {
    TwoValuedState next = characteristic_two(x);
    if (next == x) return x;
    x = std::move(next);
  }
}

std::vector<TwoValuedState> DungFramework::preferred_extensions(Exec exec, const Limits& limits) const {
  return to_states(subset_maximal(complete_masks(exec, limits)));
}

std::vector<TwoValuedState> DungFramework::semi_stable_extensions(Exec exec, const Limits& limits) const {
  return to_states(range_maximal(complete_masks(exec, limits), [&](Mask x) { return range_mask(x); }));
}

std::vector<TwoValuedState> DungFramework::naive_extensions(Exec exec, const Limits& limits) const {
  return to_states(subset_maximal(conflict_free_masks(exec, limits)));
}

std::vector<TwoValuedState> DungFramework::stage_extensions(Exec exec, const Limits& limits) const {
  return to_states(range_maximal(conflict_free_masks(exec, limits), [&](Mask x) { return range_mask(x); }));
}

std::vector<TwoValuedState> DungFramework::admissible_extensions(Exec exec, const Limits& limits) const {
  return to_states(scan(&DungFramework::admissible_mask, exec, limits));
}

std::vector<Interpretation> DungFramework::caminada_labelings(Exec exec, const Limits& limits) const {
  const std::size_t n = size();
  require_interpretation_scan(n, limits);
  auto ks = kernels::select(
      pow3(n),
      [&](std::uint64_t k) {
        auto v = Interpretation::from_ordinal(k, n);
        return update_three(v) == v;
      },
      exec);
  std::vector<Interpretation> out;
  for (auto k : ks) out.push_back(Interpretation::from_ordinal(k, n));
  sort_interpretations(out);
  return out;
}

Interpretation DungFramework::labeling_from_extension(const TwoValuedState& x) const {
  require_same_size(x.size(), size(), "labeling_from_extension");
  if (!is_conflict_free(x) || characteristic_two(x) != x)
    throw std::invalid_argument("labeling_from_extension: input is not a complete extension");
  Interpretation v(size());
  for (std::size_t a = 0; a < size(); ++a) {
    if (x[a]) {
      v.set(a, TruthValue::one);
      continue;
    }
    bool attacked = false;
    for (auto b : attackers_[a]) attacked |= x[b];
    v.set(a, attacked ? TruthValue::zero : TruthValue::undecided);
  }
  return v;
}

TwoValuedState DungFramework::extension_from_labeling(const Interpretation& v) const {
  require_same_size(v.size(), size(), "extension_from_labeling");
  if (update_three(v) != v) throw std::invalid_argument("extension_from_labeling: input is not a Caminada labeling");
  TwoValuedState x(size());
  for (std::size_t a = 0; a < size(); ++a) x.set(a, v[a] == TruthValue::one);
  return x;
}

Framework DungFramework::to_framework() const {
  std::vector<Formula> formulas;
  std::vector<std::vector<std::size_t>> parents;
  for (std::size_t a = 0; a < size(); ++a) {
    std::vector<Formula> negs;
    for (auto b : attackers_[a]) negs.push_back(Formula::negation(Formula::variable(b)));
    formulas.push_back(Formula::conjunction(negs));
    parents.push_back(attackers_[a]);
  }
  return Framework(sig_, std::move(parents), std::move(formulas), Validation::strict);
}

}  // namespace adfbn
