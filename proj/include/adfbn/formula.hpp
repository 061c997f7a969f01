#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adfbn/core.hpp"

namespace adfbn {

/// Immutable propositional formula over argument indices.
class Formula {
public:
  enum class Kind : std::uint8_t { constant, variable, negation, conjunction, disjunction, implication, equivalence, exclusive_or };

  Formula() : Formula(constant(false)) {}

  static Formula constant(bool value);
  static Formula variable(std::size_t var);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula equivalence(Formula a, Formula b);
  static Formula exclusive_or(Formula a, Formula b);
  /// n-ary helpers; empty conjunction is true, empty disjunction is false.
  static Formula conjunction(const std::vector<Formula>& fs);
  static Formula disjunction(const std::vector<Formula>& fs);

  Kind kind() const;
  bool value() const;        // constant only
  std::size_t var() const;   // variable only
  const Formula& lhs() const;
  const Formula& rhs() const;
  bool is_constant() const { return kind() == Kind::constant; }

  /// Two-valued evaluation; `get(var)` yields the variable's bit.
  template <class Get>
  bool eval(Get&& get) const;

  /// Syntactic variables, ascending.
  std::vector<std::size_t> vars() const;
  std::size_t max_var_plus_one() const;
  std::size_t node_count() const;

  /// Debug / serialization helper; names via `sig`.
  std::string to_string(const Signature& sig) const;

  friend bool operator==(const Formula& a, const Formula& b);

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  bool value = false;
  std::size_t var = 0;
  Formula a{nullptr};
  Formula b{nullptr};
};

template <class Get>
bool Formula::eval(Get&& get) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::constant: return n.value;
    case Kind::variable: return get(n.var);
    case Kind::negation: return !n.a.eval(get);
    case Kind::conjunction: return n.a.eval(get) && n.b.eval(get);
    case Kind::disjunction: return n.a.eval(get) || n.b.eval(get);
    case Kind::implication: return !n.a.eval(get) || n.b.eval(get);
    case Kind::equivalence: return n.a.eval(get) == n.b.eval(get);
    case Kind::exclusive_or: return n.a.eval(get) != n.b.eval(get);
  }
  return false;
}

bool evaluate(const Formula& phi, const TwoValuedState& x);

/// Semantic dependence: some pair of states differing only at `var` gets
/// different values. Scans the truth table over vars(phi).
bool depends_on(const Formula& phi, std::size_t var, const Limits& limits = Limits::defaults());

/// A state x (over `n` arguments) with x(phi) != x[var flipped](phi), if any.
std::optional<TwoValuedState> dependence_witness(const Formula& phi, std::size_t var, std::size_t n,
                                                 const Limits& limits = Limits::defaults());

/// Variables phi semantically depends on, ascending.
std::vector<std::size_t> semantic_support(const Formula& phi, const Limits& limits = Limits::defaults());

/// phi with `var` replaced by a constant, constants folded.
Formula substitute(const Formula& phi, std::size_t var, bool value);
Formula simplify(const Formula& phi);

/// imp/iff/xor rewritten to and/or/not.
Formula desugar(const Formula& phi);

// ---------------------------------------------------------------------------

struct Literal {
  std::size_t var;
  bool positive;
  auto operator<=>(const Literal&) const = default;
};

/// Conjunction of literals, sorted by variable, consistent.
using Term = std::vector<Literal>;

/// Disjunction of terms: subsumption-free, no contradictory term.
/// No terms = false; one empty term = true.
class Dnf {
public:
  Dnf() = default;
  explicit Dnf(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_false() const { return terms_.empty(); }
  bool is_true() const { return terms_.size() == 1 && terms_.front().empty(); }

  template <class Get>
  bool eval(Get&& get) const {
    for (const auto& t : terms_) {
      bool ok = true;
      for (const auto& l : t)
        if (get(l.var) != l.positive) { ok = false; break; }
      if (ok) return true;
    }
    return false;
  }

  std::string to_string(const Signature& sig) const;

  friend bool operator==(const Dnf&, const Dnf&) = default;

private:
  std::vector<Term> terms_;
};

bool evaluate(const Dnf& dnf, const TwoValuedState& x);

Dnf to_dnf(const Formula& phi);
Dnf to_dnf_negation(const Formula& phi);

/// True iff no term is contradictory and none subsumes another.
bool is_reduced(const Dnf& dnf);

}  // namespace adfbn
