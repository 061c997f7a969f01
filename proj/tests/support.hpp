#pragma once

// Fixtures and independent brute-force oracles shared by the test binaries.
// The oracles restate each definition directly over all 2^n states / 3^n
// interpretations and avoid the library's fast paths.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "adfbn/dung.hpp"
#include "adfbn/framework.hpp"
#include "adfbn/random.hpp"

namespace fixtures {

using namespace adfbn;

inline Interpretation iv(std::string_view s) { return Interpretation::from_string(s); }
inline TwoValuedState st(std::string_view s) { return TwoValuedState::from_string(s); }

/// A = {a,b,c,d}, R = {(a,b),(b,c),(c,d),(d,c)}.
inline DungFramework running_dung() {
  return DungFramework(Signature({"a", "b", "c", "d"}), {{0, 1}, {1, 2}, {2, 3}, {3, 2}});
}
inline Framework running_framework() { return running_dung().to_framework(); }

inline DungFramework self_attacker() { return DungFramework(Signature({"a"}), {{0, 0}}); }
inline DungFramework isolated(std::size_t n = 1) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return DungFramework(Signature(names), {});
}

inline Formula var(std::size_t i) { return Formula::variable(i); }
inline Formula neg(Formula f) { return Formula::negation(std::move(f)); }

/// a = ¬b, b = ¬a.
inline Framework toggle_switch() { return Framework::from_formulas(Signature({"a", "b"}), {neg(var(1)), neg(var(0))}); }
inline Framework self_loop() { return Framework::from_formulas(Signature({"a"}), {neg(var(0))}); }

// ---------------------------------------------------------------------------
// Oracles

inline std::uint64_t states(std::size_t n) { return std::uint64_t{1} << n; }

inline bool matches(const Interpretation& v, std::uint64_t x) {
  const std::size_t n = v.size();
  for (std::size_t a = 0; a < n; ++a) {
    const bool bit = (x >> (n - 1 - a)) & 1U;
    if (v[a] == TruthValue::one && !bit) return false;
    if (v[a] == TruthValue::zero && bit) return false;
  }
  return true;
}

/// Γ(v) by scanning every state of the cube.
inline Interpretation gamma_oracle(const Framework& fr, const Interpretation& v) {
  const std::size_t n = fr.size();
  Interpretation out(n);
  for (std::size_t a = 0; a < n; ++a) {
    bool seen0 = false, seen1 = false;
    for (std::uint64_t x = 0; x < states(n); ++x) {
      if (!matches(v, x)) continue;
      (evaluate(fr.formula(a), state_from_index(x, n)) ? seen1 : seen0) = true;
    }
    out.set(a, seen0 && seen1 ? TruthValue::undecided : truth(seen1));
  }
  return out;
}

inline bool leq_oracle(const Interpretation& v, const Interpretation& w) {
  for (std::size_t a = 0; a < v.size(); ++a)
    if (v[a] != TruthValue::undecided && v[a] != w[a]) return false;
  return true;
}

inline std::vector<Interpretation> all_interpretations(std::size_t n) {
  std::vector<Interpretation> out;
  for (std::uint64_t k = 0; k < pow3(n); ++k) out.push_back(Interpretation::from_ordinal(k, n));
  return out;
}

inline std::set<Interpretation> admissible_oracle(const Framework& fr) {
  std::set<Interpretation> out;
  for (const auto& v : all_interpretations(fr.size()))
    if (leq_oracle(v, gamma_oracle(fr, v))) out.insert(v);
  return out;
}

/// Elements with no strictly ≤_i-greater element, by pairwise comparison.
inline std::set<Interpretation> maximal_oracle(const std::set<Interpretation>& s) {
  std::set<Interpretation> out;
  for (const auto& v : s) {
    bool dominated = false;
    for (const auto& w : s) dominated = dominated || (v != w && leq_oracle(v, w));
    if (!dominated) out.insert(v);
  }
  return out;
}

/// Closure of the subcube under synchronous and asynchronous successors.
inline bool trap_oracle(const Framework& fr, const Interpretation& v, bool asynchronous) {
  const std::size_t n = fr.size();
  for (std::uint64_t x = 0; x < states(n); ++x) {
    if (!matches(v, x)) continue;
    const auto s = state_from_index(x, n);
    std::uint64_t y = 0;
    for (std::size_t a = 0; a < n; ++a)
      if (evaluate(fr.formula(a), s)) y |= std::uint64_t{1} << (n - 1 - a);
    if (!asynchronous) {
      if (!matches(v, y)) return false;
      continue;
    }
    for (std::size_t a = 0; a < n; ++a) {
      const std::uint64_t bit = std::uint64_t{1} << (n - 1 - a);
      if ((x & bit) != (y & bit) && !matches(v, x ^ bit)) return false;
    }
  }
  return true;
}

template <class T>
std::set<T> as_set(const std::vector<T>& v) {
  return {v.begin(), v.end()};
}

inline std::vector<std::uint64_t> indices(const std::vector<TwoValuedState>& xs) {
  std::vector<std::uint64_t> out;
  for (const auto& x : xs) out.push_back(state_index(x));
  return out;
}

/// Deterministic random suite of frameworks with n in [1, max_n].
inline std::vector<Framework> random_suite(std::size_t count, std::size_t max_n, std::uint64_t seed,
                                           std::size_t max_indegree = 3) {
  Rng rng(seed);
  std::vector<Framework> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + i % max_n;
    out.push_back(random_framework(n, max_indegree, rng));
  }
  return out;
}

inline std::vector<DungFramework> random_dung_suite(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<DungFramework> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_dung(1 + i % max_n, 0.3, rng));
  return out;
}

}  // namespace fixtures
