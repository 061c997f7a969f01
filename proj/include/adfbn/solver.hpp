#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "adfbn/framework.hpp"
#include "adfbn/sat.hpp"

namespace adfbn {

/// Φ(v) negated, over the original argument variables: the units fixed by v
/// together with "some decided argument's condition disagrees with v".
/// Satisfiable exactly when v is not admissible.
Formula inadmissibility_formula(const Framework& fr, const Interpretation& v);

/// True iff v ≤_i Γ(v), decided by an UNSAT answer on a fresh SAT instance.
bool admissibility_check(const Framework& fr, const Interpretation& v, const Budget& budget = {},
                         sat::SolverOptions options = {});

/// A completion x of v with x(φ_a) != v(a) for some decided a, when v is
/// not admissible (the model of the ¬Φ instance).
std::optional<TwoValuedState> inadmissibility_witness(const Framework& fr, const Interpretation& v,
                                                      const Budget& budget = {}, sat::SolverOptions options = {});

/// Doubled-variable encoding: p_a and n_a per argument, plus auxiliaries.
/// (p,n) = (1,0) means 1, (0,1) means 0, (1,1) means u; (0,0) is excluded.
struct CandidateEncoding {
  static sat::Var p(std::size_t a) { return static_cast<sat::Var>(2 * a); }
  static sat::Var n(std::size_t a) { return static_cast<sat::Var>(2 * a + 1); }

  /// Models are exactly the conflict-free interpretations.
  static sat::Cnf build(const Framework& fr);
  static Interpretation decode(const std::vector<std::uint8_t>& model, std::size_t size);
  /// Clause falsified by v alone.
  static sat::Clause exact_block(const Interpretation& v);
  /// Clause falsified by exactly the w with w ≤_i v.
  static sat::Clause down_set_block(const Interpretation& v);
  /// Clause falsified by every w with w(a) = v(a) that admits x on par(a);
  /// all such w fail admissibility at a when x(φ_a) != v(a).
  static sat::Clause witness_block(const Framework& fr, std::size_t a, const Interpretation& v,
                                   const TwoValuedState& x);
};

/// What to exclude after a candidate fails the admissibility check.
enum class Rejection {
  exact,    // that candidate only
  witness,  // every interpretation refuted by the same witness completion
};

struct EnumerationEvent {
  enum class Kind { candidate, rejected, improved, emitted };
  Kind kind;
  const Interpretation& interpretation;
};

struct EnumerationOptions {
  Budget budget;
  Rejection rejection = Rejection::witness;
  sat::SolverOptions sat;
  std::function<void(const EnumerationEvent&)> observer;
};

struct EnumerationStats {
  std::uint64_t candidates = 0;
  std::uint64_t rejected = 0;
  std::uint64_t improvements = 0;
  std::uint64_t admissibility_checks = 0;
};

/// ≤_i-maximal admissible interpretations by candidate generation, a
/// SAT-based admissibility check and incremental maximization. Sorted by
/// subcube string. Throws BudgetExceeded when the budget runs out.
std::vector<Interpretation> enumerate_preferred(const Framework& fr, const EnumerationOptions& options = {},
                                                EnumerationStats* stats = nullptr);

/// Every admissible interpretation: each conflict-free candidate is checked
/// and then excluded exactly. Sorted by subcube string.
std::vector<Interpretation> enumerate_admissible(const Framework& fr, const EnumerationOptions& options = {},
                                                 EnumerationStats* stats = nullptr);

/// Minimal trap spaces of the network; the same fixpoint problem.
std::vector<Interpretation> enumerate_minimal_trap_spaces(const Framework& fr, const EnumerationOptions& options = {},
                                                          EnumerationStats* stats = nullptr);

}  // namespace adfbn
