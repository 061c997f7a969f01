#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "adfbn/core.hpp"
#include "adfbn/kernels.hpp"

namespace adfbn {

class Framework;

/// Dung argumentation framework (A, R).
///
/// Extension enumerators are exhaustive over the 2^n subsets (3^n for
/// labelings) and act as oracles; results are sorted by decimal index
/// (labelings by subcube string).
class DungFramework {
public:
  using Attack = std::pair<std::size_t, std::size_t>;

  DungFramework(Signature sig, std::vector<Attack> attacks);

  const Signature& signature() const { return sig_; }
  std::size_t size() const { return sig_.size(); }
  const std::vector<Attack>& attacks() const { return attacks_; }

  /// par(a), ascending.
  const std::vector<std::size_t>& attackers(std::size_t a) const;
  std::vector<std::size_t> attackers(std::string_view name) const;

  /// R(X).
  TwoValuedState attacked_by(const TwoValuedState& x) const;
  bool is_conflict_free(const TwoValuedState& x) const;

  /// f_D: a is in iff none of its attackers is.
  TwoValuedState update_two(const TwoValuedState& x) const;
  /// F_D = f_D ∘ f_D.
  TwoValuedState characteristic_two(const TwoValuedState& x) const;
  /// g_D (Caminada labeling update).
  Interpretation update_three(const Interpretation& v) const;

  std::vector<TwoValuedState> stable_extensions(Exec exec = Exec::parallel, const Limits& limits = Limits::defaults()) const;
  std::vector<TwoValuedState> complete_extensions(Exec exec = Exec::parallel, const Limits& limits = Limits::defaults()) const;
  TwoValuedState grounded_extension() const;
  std::vector<TwoValuedState> preferred_extensions(Exec exec = Exec::parallel, const Limits& limits = Limits::defaults()) const;
  std::vector<TwoValuedState> semi_stable_extensions(Exec exec = Exec::parallel, const Limits& limits = Limits::defaults()) const;
  std::vector<TwoValuedState> naive_extensions(Exec exec = Exec::parallel, const Limits& limits = Limits::defaults()) const;
  std::vector<TwoValuedState> stage_extensions(Exec exec = Exec::parallel, const Limits& limits = Limits::defaults()) const;
  /// Conflict-free X with X ⊆ F_D(X) (Dung-admissible sets).
  std::vector<TwoValuedState> admissible_extensions(Exec exec = Exec::parallel, const Limits& limits = Limits::defaults()) const;

  std::vector<Interpretation> caminada_labelings(Exec exec = Exec::parallel, const Limits& limits = Limits::defaults()) const;

  /// Map L: complete extension to its Caminada labeling.
  Interpretation labeling_from_extension(const TwoValuedState& x) const;
  /// Map M: Caminada labeling to its complete extension.
  TwoValuedState extension_from_labeling(const Interpretation& v) const;

  /// Acceptance conditions ⋀_{b ∈ par(a)} ¬b.
  Framework to_framework() const;

  friend bool operator==(const DungFramework& a, const DungFramework& b) {
    return a.sig_ == b.sig_ && a.attacks_ == b.attacks_;
  }

private:
  using Mask = std::uint64_t;

  Mask f_mask(Mask x) const;
  Mask range_mask(Mask x) const;  // X ∪ R(X)
  bool conflict_free_mask(Mask x) const;
  bool stable_mask(Mask x) const;
  bool admissible_mask(Mask x) const;
  bool complete_mask(Mask x) const;
  std::vector<Mask> scan(bool (DungFramework::*pred)(Mask) const, Exec exec, const Limits& limits) const;
  std::vector<Mask> conflict_free_masks(Exec exec, const Limits& limits) const;
  std::vector<Mask> complete_masks(Exec exec, const Limits& limits) const;
  TwoValuedState to_state(Mask m) const { return state_from_index(m, size()); }
  std::vector<TwoValuedState> to_states(const std::vector<Mask>& ms) const;

  Signature sig_;
  std::vector<Attack> attacks_;
  std::vector<std::vector<std::size_t>> attackers_;
  std::vector<Mask> attacker_masks_;  // only when n <= 63
  std::vector<Mask> attacked_masks_;
};

/// Elements of `masks` not strictly contained in another element.
std::vector<std::uint64_t> subset_maximal(const std::vector<std::uint64_t>& masks);

}  // namespace adfbn
