#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "adfbn/signs.hpp"

using namespace adfbn;
using fixtures::neg;
using fixtures::st;
using fixtures::var;

namespace {

constexpr auto kMono = Vocabulary::monotonicity;
constexpr auto kDeriv = Vocabulary::derivative;

Framework xor_network() {
  // a = (b ∧ ¬c) ∨ (¬b ∧ c), b = a ∨ c, c = ¬a
  return Framework::from_formulas(
      Signature({"a", "b", "c"}),
      {Formula::exclusive_or(var(1), var(2)), Formula::disjunction(var(0), var(2)), neg(var(0))});
}

Framework identity() { return Framework::from_formulas(Signature({"a", "b"}), {var(1), var(1)}); }

/// Flags from the contingencies observed over the full state cube.
SignFlags flags_oracle(const Framework& fr, std::size_t a, std::size_t b) {
  const std::size_t n = fr.size();
  bool rise = false, fall = false;  // 0→1 and 1→0 contingencies as a goes 0→1
  for (std::uint64_t x = 0; x < fixtures::states(n); ++x) {
    const std::uint64_t bit = index_bit(a, n);
    if (x & bit) continue;
    const bool lo = evaluate(fr.formula(b), state_from_index(x, n));
    const bool hi = evaluate(fr.formula(b), state_from_index(x | bit, n));
    rise = rise || (!lo && hi);
    fall = fall || (lo && !hi);
  }
  return {!fall, !rise, rise, fall};
}

const EdgeLabel& row_named(Vocabulary v, std::string_view name) {
  for (const auto& l : label_table(v))
    if (l.name == name) return l;
  FAIL("no such label");
  return label_table(v).front();
}

}  // namespace

TEST_CASE("Boolean derivative examples") {
  const auto fr = fixtures::running_framework();
  CHECK(boolean_derivative(fr, 1, 2, st("0000")) == -1);
  CHECK(boolean_derivative(fr, 1, 2, st("0001")) == 0);
  const auto id = identity();
  for (std::uint64_t x = 0; x < 4; ++x) CHECK(boolean_derivative(id, 1, 0, state_from_index(x, 2)) == 1);
  CHECK_THROWS_AS(boolean_derivative(fr, 0, 2, st("0000")), std::invalid_argument);
}

TEST_CASE("edge sign examples") {
  const auto toggle = edge_signs(fixtures::toggle_switch(), 1, 0);
  CHECK(toggle.flags == SignFlags{false, true, false, true});
  CHECK_FALSE(toggle.positive_witness);
  REQUIRE(toggle.negative_witness);
  CHECK((*toggle.negative_witness)[1] == false);

  CHECK(edge_signs(identity(), 1, 0).flags == SignFlags{true, false, true, false});

  const auto x = edge_signs(xor_network(), 1, 0);
  CHECK(x.flags == SignFlags{false, false, true, true});
  CHECK(x.positive_witness);
  CHECK(x.negative_witness);

  CHECK_THROWS_AS(edge_signs(fixtures::running_framework(), 0, 2), std::invalid_argument);
  CHECK(toggle.flags.to_string() == "M-:1 M+:0 D-:1 D+:0");
  for (unsigned c = 0; c < 16; ++c) CHECK(SignFlags::from_code(c).code() == c);
}

TEST_CASE("classification examples") {
  const auto toggle = fixtures::toggle_switch();
  CHECK(classify_edge(toggle, 1, 0, kMono).name == "strict, mandatory, negative");
  CHECK(classify_edge(toggle, 1, 0, kDeriv).name == "strict, mandatory, negative");
  CHECK(classify_edge(xor_network(), 1, 0, kDeriv).name == "dual, mandatory");
  CHECK(classify_edge(xor_network(), 1, 0, kMono).name == "non-mon., mandatory");
  CHECK(classify_edge(identity(), 1, 0, kMono).name == "strict, mandatory, positive");
}

TEST_CASE("bipolarity") {
  CHECK(is_bipolar(fixtures::running_framework()));
  CHECK(is_bipolar(fixtures::toggle_switch()));
  CHECK_FALSE(is_bipolar(xor_network()));
  for (const auto& af : fixtures::random_dung_suite(30, 6, 71)) {
    const auto fr = af.to_framework();
    CHECK(is_bipolar(fr));
    for (const auto& r : all_edge_signs(fr)) CHECK(r.flags == SignFlags{false, true, false, true});
  }
}

TEST_CASE("sign laws on random frameworks") {
  Rng rng(72);
  for (int i = 0; i < 120; ++i) {
    const auto fr = random_framework(2 + i % 9, 1 + i % 8, rng);
    const auto records = all_edge_signs(fr);
    CHECK(records.size() == fr.edges().size());
    for (const auto& r : records) {
      const auto f = r.flags;
      CHECK(f == flags_oracle(fr, r.source, r.target));
      CHECK(f.d_plus == !f.m_minus);
      CHECK(f.d_minus == !f.m_plus);
      if (f.m_minus) CHECK(f.d_minus);
      if (f.m_plus) CHECK(f.d_plus);
      CHECK((f.m_plus && !f.m_minus) == (!f.d_minus && f.d_plus));
      CHECK_FALSE((f.m_plus && f.m_minus));
      CHECK(r.positive_witness.has_value() == f.d_plus);
      CHECK(r.negative_witness.has_value() == f.d_minus);
      if (r.positive_witness) CHECK(boolean_derivative(fr, r.source, r.target, *r.positive_witness) == 1);
      if (r.negative_witness) CHECK(boolean_derivative(fr, r.source, r.target, *r.negative_witness) == -1);

      // the chosen label holds, and nothing more specific does
      for (auto voc : {kMono, kDeriv}) {
        const auto& chosen = classify_edge(r, voc);
        CHECK(chosen.function(f));
        for (const auto& l : label_table(voc))
          if (l.function(f)) CHECK(chosen.specificity <= l.specificity);
      }
    }
    for (std::size_t k = 1; k < records.size(); ++k)
      CHECK(std::pair(records[k - 1].target, records[k - 1].source) < std::pair(records[k].target, records[k].source));
  }
}

TEST_CASE("flag expressions") {
  CHECK(FlagFunction::parse("true").table() == 0xFFFF);
  CHECK(FlagFunction::parse("false").table() == 0);
  CHECK(FlagFunction::parse("M+ | M- & D+") == FlagFunction::parse("M+ | (M- & D+)"));
  CHECK(FlagFunction::parse("!M+ & M-") == FlagFunction::parse("(!M+) & M-"));
  for (unsigned c = 0; c < 16; ++c) {
    const auto f = SignFlags::from_code(c);
    CHECK(FlagFunction::parse("M+")(f) == f.m_plus);
    CHECK(FlagFunction::parse("!D-")(f) == !f.d_minus);
    CHECK(FlagFunction::parse("(D- & !D+) | (!D- & D+)")(f) == (f.d_minus != f.d_plus));
  }
  CHECK_THROWS_AS(FlagFunction::parse("M+ &"), ParseError);
  CHECK_THROWS_AS(FlagFunction::parse("(M+"), ParseError);
  CHECK_THROWS_AS(FlagFunction::parse("X+"), ParseError);
  try {
    FlagFunction::parse("M+ & Q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 6);
  }
}

TEST_CASE("label tables") {
  for (auto voc : {kMono, kDeriv}) {
    const auto& table = label_table(voc);
    REQUIRE(table.size() == 15);
    std::set<std::uint16_t> functions;
    for (std::size_t i = 0; i < table.size(); ++i) {
      CHECK(table[i].row == i + 1);
      functions.insert(table[i].function.table());
      CHECK(resolve_label(table[i].expression) == table[i].function);
    }
    CHECK(functions.size() == 15);
    CHECK(table.back().function.table() == 0xFFFF);
  }
  // each monotonicity label equals its derivative counterpart under the laws
  for (const auto& l : label_table(kMono)) {
    const auto& d = row_named(kDeriv, corresponding_label_name(l.name, kMono));
    CHECK(to_derivative_flags(l.function) == d.function);
    CHECK(corresponding_label_name(d.name, kDeriv) == l.name);
  }
  CHECK(row_named(kMono, "strict, mandatory, positive").specificity == 0);
  CHECK(row_named(kMono, "non-mon., mandatory").specificity == 1);
  CHECK(row_named(kDeriv, "dual, mandatory").specificity == 1);
  CHECK(row_named(kMono, "strict, optional, negative").specificity == 2);
  CHECK(row_named(kDeriv, "strict, optional, negative").specificity == 2);
  CHECK(row_named(kMono, "irrelevant").specificity == 3);
}

TEST_CASE("R-graph constraints") {
  const auto toggle = fixtures::toggle_switch();
  const auto constraints = parse_rgraph(
      "# toggle switch\n"
      "b a strict, mandatory, negative\n"
      "\n"
      "b a strict, mandatory, positive   # wrong sign\n"
      "a a strict, optional, positive\n"
      "a b D- & !D+\n",
      toggle.signature());
  REQUIRE(constraints.size() == 4);
  CHECK(constraints[0].source == 1);
  CHECK(constraints[0].target == 0);
  CHECK(constraints[1].label == "strict, mandatory, positive");
  const auto verdicts = check_rgraph(toggle, constraints);
  CHECK(verdicts[0].satisfied);
  CHECK_FALSE(verdicts[1].satisfied);
  CHECK_FALSE(verdicts[2].edge_present);
  CHECK(verdicts[2].record.flags == SignFlags::absent());
  CHECK(verdicts[2].satisfied);
  CHECK(verdicts[3].satisfied);

  // an absent edge meets optional labels and fails mandatory ones
  const auto& absent = SignFlags::absent();
  for (auto voc : {kMono, kDeriv})
    for (const auto& l : label_table(voc)) {
      const bool mandatory = l.name.find("mandatory") != std::string_view::npos;
      if (mandatory) CHECK_FALSE(l.function(absent));
    }
  CHECK(row_named(kMono, "irrelevant").function(absent));
  CHECK(row_named(kDeriv, "irrelevant").function(absent));

  CHECK_THROWS_AS(parse_rgraph("a z M+\n", toggle.signature()), ParseError);
  CHECK_THROWS_AS(parse_rgraph("a b\n", toggle.signature()), ParseError);
  CHECK_THROWS_AS(parse_rgraph("a b M+ &&\n", toggle.signature()), ParseError);
}

TEST_CASE("cofactor cap") {
  Limits tight;
  tight.max_state_bits = 1;
  CHECK_THROWS_AS(edge_signs(fixtures::running_framework(), 1, 2, tight), CapExceeded);
}
