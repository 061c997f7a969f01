#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adfbn/core.hpp"
#include "adfbn/formula.hpp"
#include "adfbn/kernels.hpp"

namespace adfbn {

/// How construction treats parents the formula does not semantically use.
enum class Validation {
  strict,   // reject with diagnostics
  lenient,  // prune the parent set to the semantic support
};

struct Diagnostic {
  enum class Kind { variable_outside_parents, non_dependent_parent, unknown_argument };
  Kind kind;
  std::size_t argument;
  std::size_t other;
  std::string message;
};

class InvalidFramework : public std::invalid_argument {
public:
  explicit InvalidFramework(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
  std::vector<Diagnostic> diagnostics_;
};

/// The shared model: an ADF read as (A, R, {φ_a}) or a Boolean network read
/// as genes with regulatory functions. Immutable once built; the DNFs of φ_a
/// and ¬φ_a are computed at construction.
class Framework {
public:
  Framework(Signature sig, std::vector<std::vector<std::size_t>> parents, std::vector<Formula> formulas,
            Validation mode = Validation::strict, const Limits& limits = Limits::defaults());

  /// Parents taken from each formula's syntactic variables.
  static Framework from_formulas(Signature sig, std::vector<Formula> formulas, Validation mode = Validation::strict,
                                 const Limits& limits = Limits::defaults());

  const Signature& signature() const { return sig_; }
  std::size_t size() const { return sig_.size(); }
  const std::vector<std::size_t>& parents(std::size_t a) const { return parents_.at(a); }
  const Formula& formula(std::size_t a) const { return formulas_.at(a); }
  const Dnf& dnf(std::size_t a) const { return dnfs_.at(a); }
  const Dnf& negated_dnf(std::size_t a) const { return negated_dnfs_.at(a); }

  bool is_parent(std::size_t a, std::size_t b) const;  // a ∈ par(b)
  /// (a, b) pairs with a ∈ par(b), ordered by b then a.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t max_indegree() const;

  /// x(φ_a).
  bool evaluate(std::size_t a, const TwoValuedState& x) const;
  /// x(φ_a) where x is given by its decimal index (n ≤ 63).
  bool evaluate_index(std::size_t a, std::uint64_t x) const;
  /// Synchronous map y(a) = x(φ_a).
  TwoValuedState update(const TwoValuedState& x) const;
  std::uint64_t update_index(std::uint64_t x) const;

  friend bool operator==(const Framework& a, const Framework& b) {
    return a.sig_ == b.sig_ && a.parents_ == b.parents_ && a.formulas_ == b.formulas_;
  }

private:
  Signature sig_;
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<Formula> formulas_;
  std::vector<Dnf> dnfs_;
  std::vector<Dnf> negated_dnfs_;
  // truth table of φ_a over par(a); bit j of the row = parent j
  std::vector<std::vector<std::uint8_t>> tables_;
};

/// Per-argument diagnostics; empty means well-formed.
std::vector<Diagnostic> validate(const Signature& sig, const std::vector<std::vector<std::size_t>>& parents,
                                 const std::vector<Formula>& formulas, const Limits& limits = Limits::defaults());
std::vector<Diagnostic> validate(const Framework& fr);

// ---------------------------------------------------------------------------
// Characteristic operator

/// Γ(v) by evaluating every φ_a on every completion of v.
Interpretation gamma_bruteforce(const Framework& fr, const Interpretation& v, const Limits& limits = Limits::defaults());

/// σ′(v): the doubled-variable assignment (p_a, n_a).
struct DoubledAssignment {
  std::vector<std::uint8_t> p;
  std::vector<std::uint8_t> n;
};
DoubledAssignment sigma_prime(const Interpretation& v);

/// σ′(v)σ(dnf): replace a by p_a and ¬a by n_a, evaluate under `sp`.
bool sigma_eval(const Dnf& dnf, const DoubledAssignment& sp);

/// τ(1,0)=1, τ(0,1)=0, τ(1,1)=u; τ(0,0) is a logic_error.
TruthValue tau(bool positive_live, bool negative_live);

/// Γ(v) via τ(σ′(v)σ(DNF(φ_a)), σ′(v)σ(DNF(¬φ_a))); no completion enumeration.
Interpretation gamma_dnf(const Framework& fr, const Interpretation& v);

bool is_admissible(const Framework& fr, const Interpretation& v);
bool is_complete_interpretation(const Framework& fr, const Interpretation& v);
bool is_conflict_free_interpretation(const Framework& fr, const Interpretation& v);

/// Least fixpoint of Γ, iterated from all-u.
Interpretation grounded_interpretation(const Framework& fr);

std::vector<Interpretation> admissible_interpretations_bruteforce(const Framework& fr, Exec exec = Exec::parallel,
                                                                  const Limits& limits = Limits::defaults(),
                                                                  const Budget& budget = {});
std::vector<Interpretation> complete_interpretations_bruteforce(const Framework& fr, Exec exec = Exec::parallel,
                                                                const Limits& limits = Limits::defaults(),
                                                                const Budget& budget = {});
/// ≤_i-maximal admissible interpretations.
std::vector<Interpretation> preferred_interpretations_bruteforce(const Framework& fr, Exec exec = Exec::parallel,
                                                                 const Limits& limits = Limits::defaults(),
                                                                 const Budget& budget = {});

/// Interpretations sorted by subcube string ('-' < '0' < '1').
void sort_interpretations(std::vector<Interpretation>& vs);

/// Throws CapExceeded when 3^n exceeds the interpretation cap.
void require_interpretation_scan(std::size_t n, const Limits& limits);

}  // namespace adfbn
