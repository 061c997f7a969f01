#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace adfbn;
using fixtures::iv;
using fixtures::neg;
using fixtures::st;
using fixtures::var;

namespace {

// Fixed points of Γ by direct scan.
std::set<Interpretation> complete_oracle(const Framework& fr) {
  std::set<Interpretation> out;
  for (const auto& v : fixtures::all_interpretations(fr.size()))
    if (fixtures::gamma_oracle(fr, v) == v) out.insert(v);
  return out;
}

// Each decided argument has some completion that reproduces its value.
bool conflict_free_oracle(const Framework& fr, const Interpretation& v) {
  const std::size_t n = fr.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!is_decided(v[a])) continue;
    bool witnessed = false;
    for (std::uint64_t x = 0; x < fixtures::states(n) && !witnessed; ++x)
      witnessed = fixtures::matches(v, x) && evaluate(fr.formula(a), state_from_index(x, n)) == (v[a] == TruthValue::one);
    if (!witnessed) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("validation diagnostics") {
  const Signature sig({"a", "b", "c"});
  // φ_b mentions c, which is not a parent of b
  const auto outside = validate(sig, {{}, {0}, {}},
                                {Formula::constant(true), Formula::conjunction(var(0), var(2)), Formula::constant(true)});
  REQUIRE(outside.size() == 1);
  CHECK(outside[0].kind == Diagnostic::Kind::variable_outside_parents);
  CHECK(outside[0].argument == 1);
  CHECK(outside[0].other == 2);

  // φ_c = (a∧b)∨(¬a∧b) does not depend on a
  const Formula redundant = Formula::disjunction(Formula::conjunction(var(0), var(1)), Formula::conjunction(neg(var(0)), var(1)));
  const auto nondep = validate(sig, {{}, {}, {0, 1}}, {Formula::constant(true), Formula::constant(true), redundant});
  REQUIRE(nondep.size() == 1);
  CHECK(nondep[0].kind == Diagnostic::Kind::non_dependent_parent);
  CHECK(nondep[0].argument == 2);
  CHECK(nondep[0].other == 0);

  CHECK(validate(fixtures::running_framework()).empty());

  CHECK_THROWS_AS(Framework(sig, {{}, {}, {0, 1}}, {Formula::constant(true), Formula::constant(true), redundant}),
                  InvalidFramework);
  const Framework pruned(sig, {{}, {}, {0, 1}}, {Formula::constant(true), Formula::constant(true), redundant},
                         Validation::lenient);
  CHECK(pruned.parents(2) == std::vector<std::size_t>{1});
  for (std::uint64_t x = 0; x < 8; ++x) {
    const auto s = state_from_index(x, 3);
    CHECK(pruned.evaluate(2, s) == evaluate(redundant, s));
  }
}

TEST_CASE("framework accessors") {
  const auto fr = fixtures::running_framework();
  CHECK(fr.is_parent(1, 2));
  CHECK_FALSE(fr.is_parent(0, 2));
  CHECK(fr.max_indegree() == 2);
  CHECK(fr.edges().size() == 4);
  CHECK(fr.update(st("1000")) == st("1011"));
  CHECK(fr.update_index(8) == 11);
  CHECK(fr.dnf(0).is_true());
  CHECK(fr.negated_dnf(0).is_false());
}

TEST_CASE("sigma prime and tau") {
  const auto sp = sigma_prime(iv("10-"));
  CHECK(sp.p == std::vector<std::uint8_t>{1, 0, 1});
  CHECK(sp.n == std::vector<std::uint8_t>{0, 1, 1});
  CHECK(tau(true, false) == TruthValue::one);
  CHECK(tau(false, true) == TruthValue::zero);
  CHECK(tau(true, true) == TruthValue::undecided);
  CHECK_THROWS_AS(tau(false, false), std::logic_error);
}

TEST_CASE("characteristic operator examples") {
  const auto fr = fixtures::running_framework();
  const auto v = iv("-1--");
  CHECK(gamma_bruteforce(fr, v)[2] == TruthValue::zero);
  const auto sp = sigma_prime(v);
  CHECK_FALSE(sigma_eval(fr.dnf(2), sp));
  CHECK(sigma_eval(fr.negated_dnf(2), sp));
  CHECK(gamma_dnf(fr, v)[2] == TruthValue::zero);

  CHECK(gamma_bruteforce(fr, iv("----")) == iv("1---"));
  CHECK(gamma_dnf(fr, iv("----")) == iv("1---"));
  for (std::uint64_t x = 0; x < 16; ++x) {
    const auto s = state_from_index(x, 4);
    Interpretation decided(4);
    for (std::size_t a = 0; a < 4; ++a) decided.set(a, truth(s[a]));
    CHECK(gamma_bruteforce(fr, decided) == gamma_dnf(fr, decided));
    for (std::size_t a = 0; a < 4; ++a) CHECK(gamma_dnf(fr, decided)[a] == truth(fr.evaluate(a, s)));
  }

  // φ_b = a with a undecided
  const auto copy = Framework::from_formulas(Signature({"a", "b"}), {Formula::constant(true), var(0)});
  const auto spc = sigma_prime(iv("--"));
  CHECK(sigma_eval(copy.dnf(1), spc));
  CHECK(sigma_eval(copy.negated_dnf(1), spc));
  CHECK(gamma_dnf(copy, iv("--")) == iv("1-"));

  Limits tight;
  tight.max_completion_bits = 2;
  CHECK_THROWS_AS(gamma_bruteforce(fr, iv("----"), tight), CapExceeded);
}

TEST_CASE("admissible, complete, grounded examples") {
  const auto fr = fixtures::running_framework();
  CHECK(is_admissible(fr, iv("10--")));
  CHECK_FALSE(is_admissible(fr, iv("0---")));
  CHECK(is_admissible(fr, iv("----")));
  CHECK(is_complete_interpretation(fr, iv("10--")));
  CHECK(is_complete_interpretation(fr, iv("1001")));
  CHECK_FALSE(is_complete_interpretation(fr, iv("----")));
  CHECK(grounded_interpretation(fr) == iv("10--"));
  CHECK(grounded_interpretation(fixtures::self_loop()) == iv("-"));
  CHECK(grounded_interpretation(Framework::from_formulas(Signature({"a"}), {Formula::constant(true)})) == iv("1"));

  CHECK(preferred_interpretations_bruteforce(fr) == std::vector{iv("1001"), iv("1010")});
  CHECK(preferred_interpretations_bruteforce(fixtures::self_loop()) == std::vector{iv("-")});
  CHECK(preferred_interpretations_bruteforce(fixtures::toggle_switch()) == std::vector{iv("01"), iv("10")});

  CHECK_FALSE(is_conflict_free_interpretation(fixtures::self_loop(), iv("1")));
  CHECK(is_conflict_free_interpretation(fr, iv("----")));
  for (const auto& v : admissible_interpretations_bruteforce(fr)) CHECK(is_conflict_free_interpretation(fr, v));
}

TEST_CASE("characteristic operator agrees with the cube scan (random frameworks)") {
  for (const auto& fr : fixtures::random_suite(120, 5, 31)) {
    for (const auto& v : fixtures::all_interpretations(fr.size())) {
      const auto expected = fixtures::gamma_oracle(fr, v);
      CHECK(gamma_dnf(fr, v) == expected);
      CHECK(gamma_bruteforce(fr, v) == expected);
    }
  }
}

TEST_CASE("semantics agree with oracles (random frameworks)") {
  for (const auto& fr : fixtures::random_suite(120, 5, 32)) {
    const auto admissible = fixtures::admissible_oracle(fr);
    const auto complete = complete_oracle(fr);
    for (auto exec : {Exec::serial, Exec::parallel}) {
      CHECK(fixtures::as_set(admissible_interpretations_bruteforce(fr, exec)) == admissible);
      CHECK(fixtures::as_set(complete_interpretations_bruteforce(fr, exec)) == complete);
      CHECK(fixtures::as_set(preferred_interpretations_bruteforce(fr, exec)) == fixtures::maximal_oracle(admissible));
    }
    // grounded: the ≤_i-least complete interpretation
    const auto grounded = grounded_interpretation(fr);
    CHECK(complete.count(grounded));
    for (const auto& c : complete) CHECK(info_leq(grounded, c));

    for (const auto& v : fixtures::all_interpretations(fr.size())) {
      CHECK(is_admissible(fr, v) == admissible.count(v));
      CHECK(is_complete_interpretation(fr, v) == complete.count(v));
      CHECK(is_conflict_free_interpretation(fr, v) == conflict_free_oracle(fr, v));
      if (complete.count(v)) CHECK(admissible.count(v));
      if (admissible.count(v)) CHECK(conflict_free_oracle(fr, v));
    }
  }
}

TEST_CASE("characteristic operator is monotone") {
  for (const auto& fr : fixtures::random_suite(60, 4, 33)) {
    const auto vs = fixtures::all_interpretations(fr.size());
    for (const auto& v : vs)
      for (const auto& w : vs)
        if (info_leq(v, w)) CHECK(info_leq(gamma_dnf(fr, v), gamma_dnf(fr, w)));
  }
}

TEST_CASE("Dung frameworks as ADFs: complete interpretations are the Caminada labelings") {
  for (const auto& af : fixtures::random_dung_suite(100, 5, 34)) {
    const auto fr = af.to_framework();
    CHECK(complete_interpretations_bruteforce(fr) == af.caminada_labelings());
    for (const auto& v : fixtures::all_interpretations(af.size())) CHECK(gamma_dnf(fr, v) == af.update_three(v));
    std::set<std::uint64_t> preferred;
    for (const auto& v : preferred_interpretations_bruteforce(fr)) preferred.insert(state_index(af.extension_from_labeling(v)));
    CHECK(preferred == fixtures::as_set(fixtures::indices(af.preferred_extensions())));
  }
}

TEST_CASE("interpretation scan cap") {
  Limits tight;
  tight.max_interpretations = 80;
  CHECK_THROWS_AS(admissible_interpretations_bruteforce(fixtures::running_framework(), Exec::serial, tight), CapExceeded);
  CHECK_NOTHROW(require_interpretation_scan(4, Limits::defaults()));
}
