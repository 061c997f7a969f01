#pragma once

// Self-contained DPLL engine: two-watched-literal unit propagation,
// lowest-index-first branching (true first). Two backtracking modes:
// plain chronological DPLL, and conflict-driven clause learning with
// non-chronological backjumping. Both are deterministic.

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <string>
#include <string_view>
#include <vector>

#include "adfbn/errors.hpp"
#include "adfbn/formula.hpp"

namespace adfbn::sat {

using Var = std::uint32_t;

class Lit {
public:
  Lit() = default;
  static Lit pos(Var v) { return Lit(v << 1); }
  static Lit neg(Var v) { return Lit((v << 1) | 1U); }
  static Lit make(Var v, bool positive) { return positive ? pos(v) : neg(v); }

  Var var() const { return code_ >> 1; }
  bool negated() const { return code_ & 1U; }
  std::uint32_t code() const { return code_; }
  Lit operator~() const { return Lit(code_ ^ 1U); }

  auto operator<=>(const Lit&) const = default;

private:
  explicit Lit(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

using Clause = std::vector<Lit>;

class Cnf {
public:
  Cnf() = default;
  explicit Cnf(std::size_t num_vars) : num_vars_(num_vars) {}

  Var new_var() { return static_cast<Var>(num_vars_++); }
  std::size_t num_vars() const { return num_vars_; }
  void reserve_vars(std::size_t n) { num_vars_ = std::max(num_vars_, n); }

  /// Sorts, deduplicates, drops tautologies. An empty clause makes the CNF false.
  void add_clause(Clause clause);
  const std::vector<Clause>& clauses() const { return clauses_; }

  bool satisfied_by(const std::vector<std::uint8_t>& model) const;

private:
  std::size_t num_vars_ = 0;
  std::vector<Clause> clauses_;
};

enum class Status { satisfiable, unsatisfiable };

struct SatResult {
  Status status = Status::unsatisfiable;
  std::vector<std::uint8_t> model;  // total over the solver's variables when satisfiable

  bool sat() const { return status == Status::satisfiable; }
  bool value(Var v) const { return model.at(v) != 0; }
};

struct SolverStats {
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t propagations = 0;
  std::uint64_t solves = 0;
};

enum class Backtracking { chronological, learning };

struct SolverOptions {
  Backtracking backtracking = Backtracking::learning;
};

/// Incremental solver session: clauses may be added between solve() calls.
/// Not thread-safe; one session per thread.
class Solver {
public:
  explicit Solver(SolverOptions options = {}) : options_(options) {}
  explicit Solver(const Cnf& cnf, SolverOptions options = {});

  Var new_var();
  std::size_t num_vars() const { return values_.size(); }
  void reserve_vars(std::size_t n);
  void add_clause(Clause clause);
  void add_cnf(const Cnf& cnf);

  /// Satisfiability under the given assumption literals. Throws
  /// BudgetExceeded when `budget` runs out.
  SatResult solve(std::span<const Lit> assumptions = {}, const Budget& budget = {});

  const SolverStats& stats() const { return stats_; }
  std::size_t learned_clauses() const { return learned_; }

private:
  struct Level {
    enum class Kind : std::uint8_t { assumption, decision, flipped };
    std::size_t trail_start;
    Lit decision;
    Kind kind;
  };

  bool value_true(Lit l) const { return values_[l.var()] == (l.negated() ? 0 : 1); }
  bool value_false(Lit l) const { return values_[l.var()] == (l.negated() ? 1 : 0); }
  bool unassigned(Lit l) const { return values_[l.var()] < 0; }
  void assign(Lit l, std::int32_t reason = -1);
  std::int32_t propagate();  // conflicting clause id, or -1
  void backtrack_to(std::size_t level_count);
  bool resolve_conflict();  // chronological: false when no flippable decision remains
  /// Learning: 1UIP clause (asserting literal first) and backjump level.
  std::pair<Clause, std::size_t> analyze(std::int32_t conflict);
  std::uint32_t attach(Clause clause);
  std::int32_t pick_branch_var() const;
  SatResult finish_sat();
  SatResult solve_chronological(std::span<const Lit> assumptions, const Budget& budget);
  SatResult solve_learning(std::span<const Lit> assumptions, const Budget& budget);
  bool load_units();
  void count_decision(std::uint64_t& local, const Budget& budget);

  SolverOptions options_;
  std::vector<Clause> clauses_;
  std::vector<std::vector<std::uint32_t>> watches_;  // literal code -> clause ids
  std::vector<Lit> units_;
  bool has_empty_clause_ = false;

  std::vector<std::int8_t> values_;
  std::vector<std::uint32_t> level_of_;
  std::vector<std::int32_t> reason_;
  std::vector<std::uint8_t> seen_;
  std::size_t learned_ = 0;
  std::vector<Lit> trail_;
  std::size_t queue_head_ = 0;
  std::vector<Level> levels_;
  SolverStats stats_;
};

SatResult solve(const Cnf& cnf, const Budget& budget = {}, SolverOptions options = {});

/// Every model projected onto `projection`, each exactly once, in the
/// engine's deterministic order. Blocking clauses are added per model.
std::vector<std::vector<std::uint8_t>> solve_all(const Cnf& cnf, const std::vector<Var>& projection,
                                                 const Budget& budget = {}, SolverOptions options = {});

/// Structural (Tseitin) transformation of a formula whose variables are
/// solver variable ids. Auxiliary variables are allocated above `num_vars`
/// (or above the formula's largest variable).
Cnf to_cnf(const Formula& phi, std::size_t num_vars = 0);
/// Appends the encoding of `phi` as a top-level constraint to `cnf`.
void add_formula(Cnf& cnf, const Formula& phi);

std::string to_dimacs(const Cnf& cnf);
Cnf parse_dimacs(std::string_view text);

}  // namespace adfbn::sat
