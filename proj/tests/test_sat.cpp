#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "adfbn/random.hpp"
#include "adfbn/sat.hpp"

using namespace adfbn;
using namespace adfbn::sat;

namespace {

constexpr SolverOptions kChrono{Backtracking::chronological};
constexpr SolverOptions kLearn{Backtracking::learning};

Lit p(Var v) { return Lit::pos(v); }
Lit n(Var v) { return Lit::neg(v); }

bool clause_holds(const Clause& c, std::uint64_t assignment) {
  for (auto l : c)
    if (((assignment >> l.var()) & 1U) == (l.negated() ? 0U : 1U)) return true;
  return false;
}

/// Every satisfying total assignment, as bit masks (bit v = variable v).
std::vector<std::uint64_t> truth_table(const Cnf& cnf) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << cnf.num_vars()); ++x) {
    bool ok = true;
    for (const auto& c : cnf.clauses()) ok = ok && clause_holds(c, x);
    if (ok) out.push_back(x);
  }
  return out;
}

std::uint64_t mask(const std::vector<std::uint8_t>& model) {
  std::uint64_t x = 0;
  for (std::size_t v = 0; v < model.size(); ++v)
    if (model[v]) x |= std::uint64_t{1} << v;
  return x;
}

Cnf random_cnf(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> nv(1, 12), width(1, 4);
  const std::size_t vars = nv(rng);
  std::uniform_int_distribution<std::size_t> nc(0, vars * 5);
  std::uniform_int_distribution<Var> pick(0, static_cast<Var>(vars - 1));
  std::bernoulli_distribution sign(0.5);
  Cnf cnf(vars);
  const std::size_t clauses = nc(rng);
  for (std::size_t i = 0; i < clauses; ++i) {
    Clause c;
    for (std::size_t k = width(rng); k > 0; --k) c.push_back(Lit::make(pick(rng), sign(rng)));
    cnf.add_clause(c);
  }
  return cnf;
}

}  // namespace

TEST_CASE("literal encoding") {
  CHECK(p(3).var() == 3);
  CHECK_FALSE(p(3).negated());
  CHECK(n(3).negated());
  CHECK(~p(3) == n(3));
  CHECK(Lit::make(2, false) == n(2));
}

TEST_CASE("clause normalisation") {
  Cnf cnf(3);
  cnf.add_clause({p(0), n(0)});
  CHECK(cnf.clauses().empty());
  cnf.add_clause({p(2), p(1), p(2)});
  REQUIRE(cnf.clauses().size() == 1);
  CHECK(cnf.clauses()[0] == Clause{p(1), p(2)});
}

TEST_CASE("small instances") {
  for (auto opt : {kChrono, kLearn}) {
    Cnf contradiction(1);
    contradiction.add_clause({p(0)});
    contradiction.add_clause({n(0)});
    CHECK_FALSE(solve(contradiction, {}, opt).sat());

    Cnf either(2);
    either.add_clause({p(0), p(1)});
    const auto r = solve(either, {}, opt);
    REQUIRE(r.sat());
    CHECK(either.satisfied_by(r.model));
    CHECK(solve_all(either, {0, 1}, {}, opt).size() == 3);

    const auto empty = solve(Cnf(3), {}, opt);
    REQUIRE(empty.sat());
    CHECK(empty.model.size() == 3);
    CHECK(solve(Cnf(), {}, opt).sat());

    Cnf falsum(1);
    falsum.add_clause({});
    CHECK_FALSE(solve(falsum, {}, opt).sat());
  }
}

TEST_CASE("branching is lowest index first, true first") {
  Cnf cnf(3);
  cnf.add_clause({p(0), p(1), p(2)});
  for (auto opt : {kChrono, kLearn}) {
    const auto models = solve_all(cnf, {0, 1, 2}, {}, opt);
    REQUIRE(models.size() == 7);
    CHECK(models.front() == std::vector<std::uint8_t>{1, 1, 1});
    CHECK(solve(cnf, {}, opt).model == std::vector<std::uint8_t>{1, 1, 1});
  }
}

TEST_CASE("agreement with truth tables on random CNFs") {
  std::mt19937_64 rng(51);
  std::size_t unsat = 0;
  for (int i = 0; i < 1000; ++i) {
    const Cnf cnf = random_cnf(rng);
    const auto table = truth_table(cnf);
    const std::set<std::uint64_t> expected(table.begin(), table.end());
    std::vector<Var> all(cnf.num_vars());
    for (Var v = 0; v < all.size(); ++v) all[v] = v;
    unsat += table.empty();
    for (auto opt : {kChrono, kLearn}) {
      const auto r = solve(cnf, {}, opt);
      CHECK(r.sat() == !table.empty());
      if (r.sat()) CHECK(expected.count(mask(r.model)));
      std::set<std::uint64_t> got;
      const auto models = solve_all(cnf, all, {}, opt);
      for (const auto& m : models) got.insert(mask(m));
      CHECK(got.size() == models.size());
      CHECK(got == expected);
    }
  }
  CHECK(unsat > 50);  // the generator produces both outcomes
}

TEST_CASE("projected enumeration") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 300; ++i) {
    const Cnf cnf = random_cnf(rng);
    const std::size_t k = (cnf.num_vars() + 1) / 2;
    std::vector<Var> proj(k);
    for (Var v = 0; v < k; ++v) proj[v] = v;
    std::set<std::uint64_t> expected;
    for (auto x : truth_table(cnf)) expected.insert(x & ((std::uint64_t{1} << k) - 1));
    for (auto opt : {kChrono, kLearn}) {
      const auto models = solve_all(cnf, proj, {}, opt);
      std::set<std::uint64_t> got;
      for (const auto& m : models) got.insert(mask(m));
      CHECK(got.size() == models.size());
      CHECK(got == expected);
    }
  }
}

TEST_CASE("assumptions and incremental solving") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 300; ++i) {
    const Cnf cnf = random_cnf(rng);
    const auto table = truth_table(cnf);
    for (auto opt : {kChrono, kLearn}) {
      Solver s(cnf, opt);
      for (Var v = 0; v < cnf.num_vars(); ++v) {
        for (bool val : {true, false}) {
          const Lit a = Lit::make(v, val);
          const bool expected = std::any_of(table.begin(), table.end(), [&](auto x) { return ((x >> v) & 1U) == val; });
          const auto r = s.solve(std::span<const Lit>(&a, 1));
          CHECK(r.sat() == expected);
          if (r.sat()) CHECK(r.value(v) == val);
        }
      }
      // the session stays usable after assumption solves
      CHECK(s.solve().sat() == !table.empty());
    }
  }
}

TEST_CASE("deterministic enumeration order") {
  std::mt19937_64 rng(54);
  for (int i = 0; i < 30; ++i) {
    const Cnf cnf = random_cnf(rng);
    std::vector<Var> all(cnf.num_vars());
    for (Var v = 0; v < all.size(); ++v) all[v] = v;
    for (auto opt : {kChrono, kLearn}) CHECK(solve_all(cnf, all, {}, opt) == solve_all(cnf, all, {}, opt));
  }
}

TEST_CASE("structural transformation") {
  const auto a = Formula::variable(0), b = Formula::variable(1);
  const Cnf unit = to_cnf(a);
  REQUIRE(unit.clauses().size() == 1);
  CHECK(unit.clauses()[0] == Clause{p(0)});
  CHECK_FALSE(solve(to_cnf(Formula::constant(false))).sat());

  const auto phi = Formula::conjunction(Formula::disjunction(a, b), Formula::negation(a));
  const auto models = solve_all(to_cnf(phi), {0, 1});
  CHECK(models == std::vector<std::vector<std::uint8_t>>{{0, 1}});

  // equisatisfiable with the same projected models on random formulas
  Rng rng(55);
  for (int i = 0; i < 300; ++i) {
    const std::size_t vars = 1 + i % 5;
    std::vector<std::size_t> ids(vars);
    for (std::size_t v = 0; v < vars; ++v) ids[v] = v;
    const Formula f = random_formula(ids, 4, rng);
    std::set<std::uint64_t> expected;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << vars); ++x)
      if (f.eval([&](std::size_t v) { return ((x >> v) & 1U) != 0; })) expected.insert(x);
    std::vector<Var> proj(vars);
    for (Var v = 0; v < vars; ++v) proj[v] = v;
    std::set<std::uint64_t> got;
    for (const auto& m : solve_all(to_cnf(f, vars), proj)) got.insert(mask(m));
    CHECK(got == expected);
  }
}

TEST_CASE("DIMACS round trip and errors") {
  std::mt19937_64 rng(56);
  for (int i = 0; i < 50; ++i) {
    const Cnf cnf = random_cnf(rng);
    const Cnf back = parse_dimacs(to_dimacs(cnf));
    CHECK(back.num_vars() == cnf.num_vars());
    CHECK(back.clauses() == cnf.clauses());
  }
  CHECK(parse_dimacs("c comment\np cnf 2 1\n1 -2 0\n").clauses().size() == 1);
  CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p dnf 1 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 x 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);
}

TEST_CASE("resource budgets are distinct from unsatisfiability") {
  // pigeonhole 7 into 6: hard for plain DPLL
  const std::size_t holes = 6, pigeons = 7;
  Cnf cnf(holes * pigeons);
  auto x = [&](std::size_t i, std::size_t j) { return static_cast<Var>(i * holes + j); };
  for (std::size_t i = 0; i < pigeons; ++i) {
    Clause c;
    for (std::size_t j = 0; j < holes; ++j) c.push_back(p(x(i, j)));
    cnf.add_clause(c);
  }
  for (std::size_t j = 0; j < holes; ++j)
    for (std::size_t i = 0; i < pigeons; ++i)
      for (std::size_t k = i + 1; k < pigeons; ++k) cnf.add_clause({n(x(i, j)), n(x(k, j))});

  for (auto opt : {kChrono, kLearn}) {
    Budget few;
    few.max_decisions = 10;
    CHECK_THROWS_AS(solve(cnf, few, opt), BudgetExceeded);
    Budget past;
    past.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    CHECK_THROWS_AS(solve(cnf, past, opt), BudgetExceeded);
  }
  CHECK_FALSE(solve(cnf, {}, kLearn).sat());
}

TEST_CASE("learning mode records clauses") {
  Cnf cnf(4);
  cnf.add_clause({p(0), p(1)});
  cnf.add_clause({p(0), n(1)});
  cnf.add_clause({n(0), p(2)});
  cnf.add_clause({n(0), n(2), p(3)});
  cnf.add_clause({n(0), n(2), n(3)});
  Solver s(cnf, kLearn);
  CHECK_FALSE(s.solve().sat());
  Solver c(cnf, kChrono);
  CHECK_FALSE(c.solve().sat());
  CHECK(c.learned_clauses() == 0);
}
