#include "adfbn/solver.hpp"

namespace adfbn {

using sat::Lit;

Formula inadmissibility_formula(const Framework& fr, const Interpretation& v) {
  require_same_size(v.size(), fr.size(), "inadmissibility_formula");
  std::vector<Formula> units;
  std::vector<Formula> violations;
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (!is_decided(v[a])) continue;
    const Formula x = Formula::variable(a);
    if (v[a] == TruthValue::one) {
      units.push_back(x);
      violations.push_back(Formula::negation(fr.formula(a)));
    } else {
      units.push_back(Formula::negation(x));
      violations.push_back(fr.formula(a));
    }
  }
  units.push_back(Formula::disjunction(violations));
  return Formula::conjunction(units);
}

std::optional<TwoValuedState> inadmissibility_witness(const Framework& fr, const Interpretation& v,
                                                      const Budget& budget, sat::SolverOptions options) {
  const sat::Cnf cnf = sat::to_cnf(inadmissibility_formula(fr, v), fr.size());
  const auto r = sat::solve(cnf, budget, options);
  if (!r.sat()) return std::nullopt;
  TwoValuedState x(fr.size());
  for (std::size_t a = 0; a < fr.size(); ++a) x.set(a, r.value(static_cast<sat::Var>(a)));
  return x;
}

bool admissibility_check(const Framework& fr, const Interpretation& v, const Budget& budget,
                         sat::SolverOptions options) {
  return !inadmissibility_witness(fr, v, budget, options);
}

// ---------------------------------------------------------------------------

namespace {

Lit sigma(const Literal& l) {
  return Lit::pos(l.positive ? CandidateEncoding::p(l.var) : CandidateEncoding::n(l.var));
}

/// guard ∨ ⋁_j σ(term_j), one auxiliary per term.
void add_live_clause(sat::Cnf& cnf, Lit guard, const Dnf& dnf) {
  for (const auto& t : dnf.terms())
    if (t.empty()) return;  // σ of the empty term is true
  sat::Clause clause{guard};
  for (const auto& t : dnf.terms()) {
    const Lit aux = Lit::pos(cnf.new_var());
    for (const auto& l : t) cnf.add_clause({~aux, sigma(l)});
    clause.push_back(aux);
  }
  cnf.add_clause(std::move(clause));
}

}  // namespace

sat::Cnf CandidateEncoding::build(const Framework& fr) {
  sat::Cnf cnf(2 * fr.size());
  for (std::size_t a = 0; a < fr.size(); ++a) {
    cnf.add_clause({Lit::pos(p(a)), Lit::pos(n(a))});
    // v(a)=1 needs a live term of φ_a; v(a)=0 needs one of ¬φ_a
    add_live_clause(cnf, Lit::pos(n(a)), fr.dnf(a));
    add_live_clause(cnf, Lit::pos(p(a)), fr.negated_dnf(a));
  }
  return cnf;
}

Interpretation CandidateEncoding::decode(const std::vector<std::uint8_t>& model, std::size_t size) {
  Interpretation v(size);
  for (std::size_t a = 0; a < size; ++a) {
    const bool pa = model.at(p(a)) != 0;
    const bool na = model.at(n(a)) != 0;
    v.set(a, pa && na ? TruthValue::undecided : truth(pa));
  }
  return v;
}

sat::Clause CandidateEncoding::exact_block(const Interpretation& v) {
  sat::Clause c;
  for (std::size_t a = 0; a < v.size(); ++a) {
    switch (v[a]) {
      case TruthValue::one: c.insert(c.end(), {Lit::neg(p(a)), Lit::pos(n(a))}); break;
      case TruthValue::zero: c.insert(c.end(), {Lit::pos(p(a)), Lit::neg(n(a))}); break;
      case TruthValue::undecided: c.insert(c.end(), {Lit::neg(p(a)), Lit::neg(n(a))}); break;
    }
  }
  return c;
}

sat::Clause CandidateEncoding::down_set_block(const Interpretation& v) {
  sat::Clause c;
  for (std::size_t a = 0; a < v.size(); ++a) {
    switch (v[a]) {
      case TruthValue::one: c.push_back(Lit::neg(p(a))); break;
      case TruthValue::zero: c.push_back(Lit::neg(n(a))); break;
      case TruthValue::undecided: c.insert(c.end(), {Lit::neg(p(a)), Lit::neg(n(a))}); break;
    }
  }
  return c;
}

sat::Clause CandidateEncoding::witness_block(const Framework& fr, std::size_t a, const Interpretation& v,
                                             const TwoValuedState& x) {
  sat::Clause c;
  c.push_back(v[a] == TruthValue::one ? Lit::pos(n(a)) : Lit::pos(p(a)));
  for (auto b : fr.parents(a)) c.push_back(x[b] ? Lit::neg(p(b)) : Lit::neg(n(b)));
  return c;
}

std::vector<Interpretation> enumerate_preferred(const Framework& fr, const EnumerationOptions& options,
                                                EnumerationStats* stats) {
  using Kind = EnumerationEvent::Kind;
  EnumerationStats local;
  EnumerationStats& st = stats ? *stats : local;
  auto notify = [&](Kind kind, const Interpretation& v) {
    if (options.observer) options.observer(EnumerationEvent{kind, v});
  };
  const std::size_t n = fr.size();
  sat::Solver candidates(CandidateEncoding::build(fr), options.sat);
  std::vector<Interpretation> out;

  // Admissibility check; on failure the candidate is excluded and false returned.
  auto admissible = [&](const Interpretation& v) {
    ++st.admissibility_checks;
    const auto x = inadmissibility_witness(fr, v, options.budget, options.sat);
    if (!x) return true;
    ++st.rejected;
    notify(Kind::rejected, v);
    if (options.rejection == Rejection::exact) {
      candidates.add_clause(CandidateEncoding::exact_block(v));
      return false;
    }
    for (std::size_t a = 0; a < n; ++a)
      if (is_decided(v[a]) && fr.evaluate(a, *x) != (v[a] == TruthValue::one))
        candidates.add_clause(CandidateEncoding::witness_block(fr, a, v, *x));
    return false;
  };

  for (;;) {
    options.budget.check();
    const auto r = candidates.solve({}, options.budget);
    if (!r.sat()) break;
    Interpretation v = CandidateEncoding::decode(r.model, n);
    ++st.candidates;
    notify(Kind::candidate, v);
    if (!admissible(v)) continue;

    // Grow v while some strictly larger conflict-free candidate is admissible.
    for (;;) {
      options.budget.check();
      if (v.is_two_valued()) break;
      const Lit act = Lit::pos(candidates.new_var());
      sat::Clause grow{~act};
      std::vector<Lit> assumptions{act};
      for (std::size_t a = 0; a < n; ++a) {
        switch (v[a]) {
          case TruthValue::one: assumptions.push_back(Lit::neg(CandidateEncoding::n(a))); break;
          case TruthValue::zero: assumptions.push_back(Lit::neg(CandidateEncoding::p(a))); break;
          case TruthValue::undecided:
            grow.insert(grow.end(), {Lit::neg(CandidateEncoding::p(a)), Lit::neg(CandidateEncoding::n(a))});
            break;
        }
      }
      candidates.add_clause(std::move(grow));
      const auto g = candidates.solve(assumptions, options.budget);
      candidates.add_clause({~act});
      if (!g.sat()) break;
      Interpretation w = CandidateEncoding::decode(g.model, n);
      if (admissible(w)) {
        ++st.improvements;
        v = std::move(w);
        notify(Kind::improved, v);
      }
    }

    notify(Kind::emitted, v);
    candidates.add_clause(CandidateEncoding::down_set_block(v));
    out.push_back(std::move(v));
  }
  sort_interpretations(out);
  return out;
}

std::vector<Interpretation> enumerate_admissible(const Framework& fr, const EnumerationOptions& options,
                                                 EnumerationStats* stats) {
  EnumerationStats local;
  EnumerationStats& st = stats ? *stats : local;
  sat::Solver candidates(CandidateEncoding::build(fr), options.sat);
  std::vector<Interpretation> out;
  for (;;) {
    options.budget.check();
    const auto r = candidates.solve({}, options.budget);
    if (!r.sat()) break;
    Interpretation v = CandidateEncoding::decode(r.model, fr.size());
    ++st.candidates;
    ++st.admissibility_checks;
    candidates.add_clause(CandidateEncoding::exact_block(v));
    if (admissibility_check(fr, v, options.budget, options.sat)) {
      if (options.observer) options.observer(EnumerationEvent{EnumerationEvent::Kind::emitted, v});
      out.push_back(std::move(v));
    } else {
      ++st.rejected;
    }
  }
  sort_interpretations(out);
  return out;
}

std::vector<Interpretation> enumerate_minimal_trap_spaces(const Framework& fr, const EnumerationOptions& options,
                                                          EnumerationStats* stats) {
  return enumerate_preferred(fr, options, stats);
}

}  // namespace adfbn
