#include "adfbn/sat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace adfbn::sat {

void Cnf::add_clause(Clause clause) {
  std::sort(clause.begin(), clause.end());
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  for (std::size_t i = 1; i < clause.size(); ++i)
    if (clause[i].var() == clause[i - 1].var()) return;  // tautology
  for (auto l : clause) num_vars_ = std::max<std::size_t>(num_vars_, l.var() + 1);
  clauses_.push_back(std::move(clause));
}

bool Cnf::satisfied_by(const std::vector<std::uint8_t>& model) const {
  for (const auto& c : clauses_) {
    bool ok = false;
    for (auto l : c)
      if (l.var() < model.size() && (model[l.var()] != 0) != l.negated()) { ok = true; break; }
    if (!ok) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Solver::Solver(const Cnf& cnf, SolverOptions options) : options_(options) { add_cnf(cnf); }

Var Solver::new_var() {
  values_.push_back(-1);
  level_of_.push_back(0);
  reason_.push_back(-1);
  seen_.push_back(0);
  watches_.resize(values_.size() * 2);
  return static_cast<Var>(values_.size() - 1);
}

void Solver::reserve_vars(std::size_t n) {
  while (values_.size() < n) new_var();
}

std::uint32_t Solver::attach(Clause clause) {
  const auto id = static_cast<std::uint32_t>(clauses_.size());
  watches_[clause[0].code()].push_back(id);
  watches_[clause[1].code()].push_back(id);
  clauses_.push_back(std::move(clause));
  return id;
}

void Solver::add_clause(Clause clause) {
  std::sort(clause.begin(), clause.end());
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  for (std::size_t i = 1; i < clause.size(); ++i)
    if (clause[i].var() == clause[i - 1].var()) return;
  for (auto l : clause) reserve_vars(l.var() + 1);

  if (clause.empty()) {
    has_empty_clause_ = true;
  } else if (clause.size() == 1) {
    units_.push_back(clause.front());
  } else {
    attach(std::move(clause));
  }
}

void Solver::add_cnf(const Cnf& cnf) {
  reserve_vars(cnf.num_vars());
  for (const auto& c : cnf.clauses()) add_clause(c);
}

void Solver::assign(Lit l, std::int32_t reason) {
  values_[l.var()] = l.negated() ? 0 : 1;
  level_of_[l.var()] = static_cast<std::uint32_t>(levels_.size());
  reason_[l.var()] = reason;
  trail_.push_back(l);
}

std::int32_t Solver::propagate() {
  while (queue_head_ < trail_.size()) {
    const Lit false_lit = ~trail_[queue_head_++];
    auto& ws = watches_[false_lit.code()];
    std::size_t keep = 0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const std::uint32_t id = ws[i];
      Clause& c = clauses_[id];
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (value_true(c[0])) {
        ws[keep++] = id;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (!value_false(c[k])) {
          std::swap(c[1], c[k]);
          watches_[c[1].code()].push_back(id);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[keep++] = id;
      if (value_false(c[0])) {
        for (std::size_t r = i + 1; r < ws.size(); ++r) ws[keep++] = ws[r];
        ws.resize(keep);
        return static_cast<std::int32_t>(id);
      }
      ++stats_.propagations;
      assign(c[0], static_cast<std::int32_t>(id));
    }
    ws.resize(keep);
  }
  return -1;
}

void Solver::backtrack_to(std::size_t level_count) {
  if (level_count >= levels_.size()) return;
  const std::size_t start = levels_[level_count].trail_start;
  for (std::size_t i = start; i < trail_.size(); ++i) values_[trail_[i].var()] = -1;
  trail_.resize(start);
  levels_.resize(level_count);
  queue_head_ = std::min(queue_head_, trail_.size());
}

bool Solver::resolve_conflict() {
  while (!levels_.empty()) {
    const Level top = levels_.back();
    if (top.kind == Level::Kind::assumption) return false;
    backtrack_to(levels_.size() - 1);
    if (top.kind == Level::Kind::decision) {
      levels_.push_back({trail_.size(), ~top.decision, Level::Kind::flipped});
      assign(~top.decision);
      return true;
    }
  }
  return false;
}

std::pair<Clause, std::size_t> Solver::analyze(std::int32_t conflict) {
  const auto current = static_cast<std::uint32_t>(levels_.size());
  Clause learnt{Lit{}};
  std::vector<Var> touched;
  int pending = 0;
  bool have_p = false;
  Lit p;
  std::size_t idx = trail_.size();
  std::int32_t reason = conflict;
  for (;;) {
    const Clause& c = clauses_[static_cast<std::size_t>(reason)];
    for (std::size_t k = have_p ? 1 : 0; k < c.size(); ++k) {
      const Var v = c[k].var();
      if (seen_[v] || level_of_[v] == 0) continue;
      seen_[v] = 1;
      touched.push_back(v);
      if (level_of_[v] == current) ++pending;
      else learnt.push_back(c[k]);
    }
    do --idx;
    while (!seen_[trail_[idx].var()]);
    p = trail_[idx];
    have_p = true;
    seen_[p.var()] = 0;
    if (--pending == 0) break;
    reason = reason_[p.var()];
  }
  for (auto v : touched) seen_[v] = 0;
  learnt[0] = ~p;

  std::size_t back = 0;
  if (learnt.size() > 1) {
    std::size_t best = 1;
    for (std::size_t k = 2; k < learnt.size(); ++k)
      if (level_of_[learnt[k].var()] > level_of_[learnt[best].var()]) best = k;
    std::swap(learnt[1], learnt[best]);
    back = level_of_[learnt[1].var()];
  }
  return {std::move(learnt), back};
}

std::int32_t Solver::pick_branch_var() const {
  for (std::size_t v = 0; v < values_.size(); ++v)
    if (values_[v] < 0) return static_cast<std::int32_t>(v);
  return -1;
}

void Solver::count_decision(std::uint64_t& local, const Budget& budget) {
  ++stats_.decisions;
  ++local;
  if (budget.max_decisions && local > budget.max_decisions) throw BudgetExceeded("SAT decision budget exhausted");
  if (local % 1024 == 0) budget.check();
}

bool Solver::load_units() {
  for (auto u : units_) {
    if (value_false(u)) return false;
    if (unassigned(u)) assign(u);
  }
  return propagate() < 0;
}

SatResult Solver::finish_sat() {
  SatResult result{Status::satisfiable, std::vector<std::uint8_t>(values_.size())};
  for (std::size_t v = 0; v < values_.size(); ++v) result.model[v] = values_[v] == 1;
  for (const auto& c : clauses_) {
    bool ok = false;
    for (auto l : c) ok |= value_true(l);
    if (!ok) throw std::logic_error("SAT model violates a clause");
  }
  for (auto u : units_)
    if (!value_true(u)) throw std::logic_error("SAT model violates a unit clause");
  return result;
}

SatResult Solver::solve(std::span<const Lit> assumptions, const Budget& budget) {
  ++stats_.solves;
  budget.check();
  for (auto a : assumptions) reserve_vars(a.var() + 1);
  SatResult r{Status::unsatisfiable, {}};
  if (!has_empty_clause_) {
    r = options_.backtracking == Backtracking::learning ? solve_learning(assumptions, budget)
                                                         : solve_chronological(assumptions, budget);
  }
  backtrack_to(0);
  std::fill(values_.begin(), values_.end(), std::int8_t{-1});
  trail_.clear();
  queue_head_ = 0;
  return r;
}

SatResult Solver::solve_chronological(std::span<const Lit> assumptions, const Budget& budget) {
  const SatResult unsat{Status::unsatisfiable, {}};
  if (!load_units()) return unsat;
  for (auto a : assumptions) {
    if (value_false(a)) return unsat;
    if (value_true(a)) continue;
    levels_.push_back({trail_.size(), a, Level::Kind::assumption});
    assign(a);
    if (propagate() >= 0) return unsat;
  }

  std::uint64_t local = 0;
  for (std::int32_t v; (v = pick_branch_var()) >= 0;) {
    count_decision(local, budget);
    const Lit d = Lit::pos(static_cast<Var>(v));
    levels_.push_back({trail_.size(), d, Level::Kind::decision});
    assign(d);
    while (propagate() >= 0) {
      ++stats_.conflicts;
      if (!resolve_conflict()) return unsat;
    }
  }
  return finish_sat();
}

SatResult Solver::solve_learning(std::span<const Lit> assumptions, const Budget& budget) {
  const SatResult unsat{Status::unsatisfiable, {}};
  if (!load_units()) {
    has_empty_clause_ = true;
    return unsat;
  }

  std::uint64_t local = 0;
  for (;;) {
    const std::int32_t conflict = propagate();
    if (conflict >= 0) {
      ++stats_.conflicts;
      if (levels_.empty()) {
        has_empty_clause_ = true;
        return unsat;
      }
      auto [learnt, back] = analyze(conflict);
      backtrack_to(back);
      ++learned_;
      if (learnt.size() == 1) {
        units_.push_back(learnt[0]);
        assign(learnt[0]);
      } else {
        const Lit asserting = learnt[0];
        const auto id = attach(std::move(learnt));
        assign(asserting, static_cast<std::int32_t>(id));
      }
      continue;
    }

    if (levels_.size() < assumptions.size()) {
      const Lit a = assumptions[levels_.size()];
      if (value_false(a)) return unsat;
      levels_.push_back({trail_.size(), a, Level::Kind::assumption});
      if (unassigned(a)) assign(a);
      continue;
    }

    const std::int32_t v = pick_branch_var();
    if (v < 0) return finish_sat();
    count_decision(local, budget);
    const Lit d = Lit::pos(static_cast<Var>(v));
    levels_.push_back({trail_.size(), d, Level::Kind::decision});
    assign(d);
  }
}

SatResult solve(const Cnf& cnf, const Budget& budget, SolverOptions options) {
  Solver s(cnf, options);
  s.reserve_vars(cnf.num_vars());
  return s.solve({}, budget);
}

std::vector<std::vector<std::uint8_t>> solve_all(const Cnf& cnf, const std::vector<Var>& projection,
                                                 const Budget& budget, SolverOptions options) {
  Solver s(cnf, options);
  s.reserve_vars(cnf.num_vars());
  for (auto v : projection) s.reserve_vars(v + 1);
  std::vector<std::vector<std::uint8_t>> out;
  for (;;) {
    auto r = s.solve({}, budget);
    if (!r.sat()) break;
    std::vector<std::uint8_t> projected;
    Clause block;
    for (auto v : projection) {
      projected.push_back(r.model[v]);
      block.push_back(Lit::make(v, r.model[v] == 0));
    }
    out.push_back(std::move(projected));
    if (block.empty()) break;
    s.add_clause(std::move(block));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class Tseitin {
public:
  explicit Tseitin(Cnf& cnf) : cnf_(cnf) {}

  Lit encode(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::variable:
        cnf_.reserve_vars(f.var() + 1);
        return Lit::pos(static_cast<Var>(f.var()));
      case K::negation: return ~encode(f.lhs());
      case K::constant: throw std::logic_error("Tseitin: constants must be folded first");
      default: break;
    }
    const Lit a = encode(f.lhs());
    const Lit b = encode(f.rhs());
    const Lit t = Lit::pos(cnf_.new_var());
    switch (f.kind()) {
      case K::conjunction:
        cnf_.add_clause({~t, a});
        cnf_.add_clause({~t, b});
        cnf_.add_clause({t, ~a, ~b});
        break;
      case K::disjunction:
        cnf_.add_clause({~t, a, b});
        cnf_.add_clause({t, ~a});
        cnf_.add_clause({t, ~b});
        break;
      case K::implication:
        cnf_.add_clause({~t, ~a, b});
        cnf_.add_clause({t, a});
        cnf_.add_clause({t, ~b});
        break;
      case K::equivalence:
        cnf_.add_clause({~t, ~a, b});
        cnf_.add_clause({~t, a, ~b});
        cnf_.add_clause({t, a, b});
        cnf_.add_clause({t, ~a, ~b});
        break;
      case K::exclusive_or:
        cnf_.add_clause({~t, a, b});
        cnf_.add_clause({~t, ~a, ~b});
        cnf_.add_clause({t, ~a, b});
        cnf_.add_clause({t, a, ~b});
        break;
      default: break;
    }
    return t;
  }

  /// Top-level: split conjunctions, turn disjunctions into one clause.
  void assert_true(const Formula& f) {
    using K = Formula::Kind;
    if (f.kind() == K::conjunction) {
      assert_true(f.lhs());
      assert_true(f.rhs());
      return;
    }
    if (f.kind() == K::disjunction) {
      Clause c;
      collect_disjuncts(f, c);
      cnf_.add_clause(std::move(c));
      return;
    }
    cnf_.add_clause({encode(f)});
  }

private:
  void collect_disjuncts(const Formula& f, Clause& c) {
    if (f.kind() == Formula::Kind::disjunction) {
      collect_disjuncts(f.lhs(), c);
      collect_disjuncts(f.rhs(), c);
      return;
    }
    c.push_back(encode(f));
  }

  Cnf& cnf_;
};

}  // namespace

void add_formula(Cnf& cnf, const Formula& phi) {
  const Formula f = simplify(phi);
  cnf.reserve_vars(f.max_var_plus_one());
  if (f.is_constant()) {
    if (!f.value()) cnf.add_clause({});
    return;
  }
  Tseitin(cnf).assert_true(f);
}

Cnf to_cnf(const Formula& phi, std::size_t num_vars) {
  Cnf cnf(std::max(num_vars, phi.max_var_plus_one()));
  add_formula(cnf, phi);
  return cnf;
}

std::string to_dimacs(const Cnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars() << ' ' << cnf.clauses().size() << '\n';
  for (const auto& c : cnf.clauses()) {
    for (auto l : c) out << (l.negated() ? -1 : 1) * static_cast<long long>(l.var() + 1) << ' ';
    out << "0\n";
  }
  return out.str();
}

Cnf parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Cnf cnf;
  bool header = false;
  std::size_t line_no = 0;
  Clause current;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      std::size_t vars = 0, clauses = 0;
      if (!(ls >> p >> fmt >> vars >> clauses) || fmt != "cnf") throw ParseError("bad DIMACS header", line_no);
      cnf.reserve_vars(vars);
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before DIMACS header", line_no);
    long long x;
    while (ls >> x) {
      if (x == 0) {
        cnf.add_clause(std::move(current));
        current.clear();
      } else {
        const auto v = static_cast<Var>((x < 0 ? -x : x) - 1);
        current.push_back(Lit::make(v, x > 0));
      }
    }
    if (!ls.eof()) throw ParseError("bad DIMACS literal", line_no);
  }
  if (!current.empty()) throw ParseError("unterminated DIMACS clause", line_no);
  return cnf;
}

}  // namespace adfbn::sat
