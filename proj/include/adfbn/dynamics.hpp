#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "adfbn/framework.hpp"

namespace adfbn {

enum class UpdateDiscipline { synchronous, asynchronous };

/// Successor states, ascending by index. Asynchronous: one state per unstable
/// coordinate (that coordinate flipped); a fixed point loops on itself.
std::vector<TwoValuedState> successors(const Framework& fr, UpdateDiscipline disc, const TwoValuedState& x);

/// Index-level successor generator used by the graph kernels (n ≤ 63).
template <class Visit>
void for_each_successor(const Framework& fr, UpdateDiscipline disc, std::uint64_t x, Visit&& visit) {
  const std::uint64_t y = fr.update_index(x);
  if (disc == UpdateDiscipline::synchronous || y == x) {
    visit(y);
    return;
  }
  const std::uint64_t diff = x ^ y;
  // ascending successor index: flipping a set bit lowers the index
  std::vector<std::uint64_t> out;
  for (std::uint64_t rest = diff; rest != 0; rest &= rest - 1) out.push_back(x ^ (rest & (~rest + 1)));
  std::sort(out.begin(), out.end());
  for (auto s : out) visit(s);
}

/// Explicit state-transition graph in compressed-row form.
struct StateTransitionGraph {
  std::size_t bits = 0;
  UpdateDiscipline discipline = UpdateDiscipline::synchronous;
  std::vector<std::uint64_t> offsets;  // size 2^n + 1
  std::vector<std::uint64_t> targets;

  std::uint64_t state_count() const { return offsets.empty() ? 0 : offsets.size() - 1; }
};

StateTransitionGraph build_stg(const Framework& fr, UpdateDiscipline disc, Exec exec = Exec::parallel,
                               const Limits& limits = Limits::defaults());

/// Attractor as ascending state indices.
using Attractor = std::vector<std::uint64_t>;

/// Terminal strongly connected components, ordered by smallest state.
std::vector<Attractor> attractors(const Framework& fr, UpdateDiscipline disc, Exec exec = Exec::parallel,
                                  const Limits& limits = Limits::defaults(), const Budget& budget = {});
std::vector<Attractor> attractors(const StateTransitionGraph& stg);

/// ⟦v⟧ closed under the successor relation.
bool is_trap_space(const Framework& fr, UpdateDiscipline disc, const Interpretation& v,
                   const Limits& limits = Limits::defaults());

/// All trap spaces (closure under synchronous successors), sorted by subcube string.
std::vector<Interpretation> trap_spaces_bruteforce(const Framework& fr, Exec exec = Exec::parallel,
                                                   const Limits& limits = Limits::defaults(), const Budget& budget = {});
/// Trap spaces minimal as subcubes (≤_i-maximal).
std::vector<Interpretation> minimal_trap_spaces_bruteforce(const Framework& fr, Exec exec = Exec::parallel,
                                                           const Limits& limits = Limits::defaults(),
                                                           const Budget& budget = {});

}  // namespace adfbn
