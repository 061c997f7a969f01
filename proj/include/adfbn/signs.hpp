#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adfbn/framework.hpp"

namespace adfbn {

/// x^{a↦1}(φ_b) − x^{a↦0}(φ_b) ∈ {−1, 0, +1}.
int boolean_derivative(const Framework& fr, std::size_t a, std::size_t b, const TwoValuedState& x);

struct SignFlags {
  bool m_plus = false;   // supporting: monotone in a
  bool m_minus = false;  // attacking: anti-monotone in a
  bool d_plus = false;   // activation: some positive derivative
  bool d_minus = false;  // inhibition: some negative derivative

  /// Bit 0 M+, bit 1 M-, bit 2 D+, bit 3 D-.
  unsigned code() const;
  static SignFlags from_code(unsigned code);
  /// Flags assigned to a pair that is not an edge: trivially monotone both
  /// ways, no derivative either way.
  static SignFlags absent() { return {true, true, false, false}; }
  /// "M-:1 M+:0 D-:1 D+:0".
  std::string to_string() const;

  friend bool operator==(const SignFlags&, const SignFlags&) = default;
};

struct SignRecord {
  std::size_t source = 0;
  std::size_t target = 0;
  SignFlags flags;
  /// x (with x(a)=0) where the derivative is +1: shows D+ and refutes M-.
  std::optional<TwoValuedState> positive_witness;
  /// x (with x(a)=0) where the derivative is −1: shows D- and refutes M+.
  std::optional<TwoValuedState> negative_witness;
};

/// Signs of the edge a → b over the 2^|par(b)| cofactor states. M± by a
/// universal scan, D± by a separate existential scan; the two are required
/// to satisfy D+ = ¬M- and D- = ¬M+ (logic_error otherwise).
SignRecord edge_signs(const Framework& fr, std::size_t a, std::size_t b, const Limits& limits = Limits::defaults());

/// Every edge, ordered by target then source.
std::vector<SignRecord> all_edge_signs(const Framework& fr, const Limits& limits = Limits::defaults());

bool is_bipolar(const Framework& fr, const Limits& limits = Limits::defaults());

// ---------------------------------------------------------------------------
// Flag expressions and the label tables

/// Boolean function of the four flags, as a 16-entry truth table indexed by
/// SignFlags::code().
class FlagFunction {
public:
  FlagFunction() = default;
  explicit FlagFunction(std::uint16_t table) : table_(table) {}

  /// Tokens M+ M- D+ D- true false, operators ! & | and parentheses
  /// (precedence ! > & > |). Throws ParseError (column set) when malformed.
  static FlagFunction parse(std::string_view text);

  bool operator()(const SignFlags& f) const { return (table_ >> f.code()) & 1U; }
  std::uint16_t table() const { return table_; }

  friend bool operator==(const FlagFunction&, const FlagFunction&) = default;

private:
  std::uint16_t table_ = 0;
};

enum class Vocabulary { monotonicity, derivative };

struct EdgeLabel {
  std::string_view name;
  std::string_view expression;
  FlagFunction function;
  std::size_t row;       // 1-based row within its table
  unsigned specificity;  // lower is more specific
};

/// The fifteen labels of a vocabulary, in table row order.
const std::vector<EdgeLabel>& label_table(Vocabulary vocabulary);

/// The most specific label satisfied by the edge's flags.
const EdgeLabel& classify_edge(const SignRecord& record, Vocabulary vocabulary);
const EdgeLabel& classify_edge(const Framework& fr, std::size_t a, std::size_t b, Vocabulary vocabulary,
                               const Limits& limits = Limits::defaults());

/// Name of the label in the other vocabulary ("non-mon." ↔ "dual").
std::string corresponding_label_name(std::string_view name, Vocabulary from);

/// Rewrites a monotonicity-vocabulary function into derivative flags by
/// M+ ↦ ¬D-, M- ↦ ¬D+ (the equivalence laws on real edges).
FlagFunction to_derivative_flags(const FlagFunction& monotonicity_function);

/// A table name of either vocabulary, or a raw flag expression.
FlagFunction resolve_label(std::string_view label);

// ---------------------------------------------------------------------------
// R-graph constraints

struct RGraphConstraint {
  std::size_t source;
  std::size_t target;
  std::string label;
  FlagFunction function;
};

/// One constraint per non-blank line: `source target LABEL`; `#` starts a comment.
std::vector<RGraphConstraint> parse_rgraph(std::string_view text, const Signature& sig);

struct RGraphVerdict {
  RGraphConstraint constraint;
  bool edge_present;
  SignRecord record;  // flags are SignFlags::absent() for a missing edge
  bool satisfied;
};

std::vector<RGraphVerdict> check_rgraph(const Framework& fr, const std::vector<RGraphConstraint>& constraints,
                                        const Limits& limits = Limits::defaults());

}  // namespace adfbn
