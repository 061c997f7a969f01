#include "adfbn/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace adfbn {

namespace {

Formula make(Formula::Kind kind, Formula a, Formula b) {
  switch (kind) {
    case Formula::Kind::conjunction: return Formula::conjunction(std::move(a), std::move(b));
    case Formula::Kind::disjunction: return Formula::disjunction(std::move(a), std::move(b));
    case Formula::Kind::implication: return Formula::implication(std::move(a), std::move(b));
    case Formula::Kind::equivalence: return Formula::equivalence(std::move(a), std::move(b));
    case Formula::Kind::exclusive_or: return Formula::exclusive_or(std::move(a), std::move(b));
    default: throw std::logic_error("make: not a binary connective");
  }
}

}  // namespace

Formula Formula::constant(bool value) {
  return Formula(std::make_shared<const Node>(Node{Kind::constant, value, 0, Formula{nullptr}, Formula{nullptr}}));
}

Formula Formula::variable(std::size_t var) {
  return Formula(std::make_shared<const Node>(Node{Kind::variable, false, var, Formula{nullptr}, Formula{nullptr}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::negation, false, 0, std::move(f), Formula{nullptr}}));
}

#define ADFBN_BINARY(NAME, KIND)                                                               \
  Formula Formula::NAME(Formula a, Formula b) {                                                \
    return Formula(std::make_shared<const Node>(Node{Kind::KIND, false, 0, std::move(a), std::move(b)})); \
  }
ADFBN_BINARY(conjunction, conjunction)
ADFBN_BINARY(disjunction, disjunction)
ADFBN_BINARY(implication, implication)
ADFBN_BINARY(equivalence, equivalence)
ADFBN_BINARY(exclusive_or, exclusive_or)
#undef ADFBN_BINARY

Formula Formula::conjunction(const std::vector<Formula>& fs) {
  if (fs.empty()) return constant(true);
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conjunction(acc, fs[i]);
  return acc;
}

Formula Formula::disjunction(const std::vector<Formula>& fs) {
  if (fs.empty()) return constant(false);
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disjunction(acc, fs[i]);
  return acc;
}

Formula::Kind Formula::kind() const { return node_->kind; }
bool Formula::value() const { return node_->value; }
std::size_t Formula::var() const { return node_->var; }
const Formula& Formula::lhs() const { return node_->a; }
const Formula& Formula::rhs() const { return node_->b; }

namespace {

void collect_vars(const Formula& f, std::vector<std::size_t>& out) {
  switch (f.kind()) {
    case Formula::Kind::constant: return;
    case Formula::Kind::variable: out.push_back(f.var()); return;
    case Formula::Kind::negation: collect_vars(f.lhs(), out); return;
    default:
      collect_vars(f.lhs(), out);
      collect_vars(f.rhs(), out);
  }
}

}  // namespace

std::vector<std::size_t> Formula::vars() const {
  std::vector<std::size_t> out;
  collect_vars(*this, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t Formula::max_var_plus_one() const {
  auto vs = vars();
  return vs.empty() ? 0 : vs.back() + 1;
}

std::size_t Formula::node_count() const {
  switch (kind()) {
    case Kind::constant:
    case Kind::variable: return 1;
    case Kind::negation: return 1 + lhs().node_count();
    default: return 1 + lhs().node_count() + rhs().node_count();
  }
}

std::string Formula::to_string(const Signature& sig) const {
  switch (kind()) {
    case Kind::constant: return value() ? "1" : "0";
    case Kind::variable: return sig.name(var());
    case Kind::negation: return "!" + lhs().to_string(sig);
    case Kind::conjunction: return "(" + lhs().to_string(sig) + " & " + rhs().to_string(sig) + ")";
    case Kind::disjunction: return "(" + lhs().to_string(sig) + " | " + rhs().to_string(sig) + ")";
    case Kind::implication: return "(" + lhs().to_string(sig) + " -> " + rhs().to_string(sig) + ")";
    case Kind::equivalence: return "(" + lhs().to_string(sig) + " <-> " + rhs().to_string(sig) + ")";
    case Kind::exclusive_or: return "(" + lhs().to_string(sig) + " ^ " + rhs().to_string(sig) + ")";
  }
  return {};
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::constant: return a.value() == b.value();
    case Formula::Kind::variable: return a.var() == b.var();
    case Formula::Kind::negation: return a.lhs() == b.lhs();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

bool evaluate(const Formula& phi, const TwoValuedState& x) {
  if (phi.max_var_plus_one() > x.size()) throw SignatureMismatch("evaluate: formula variable outside state");
  return phi.eval([&](std::size_t v) { return x[v]; });
}

// ---------------------------------------------------------------------------
// Semantic dependence

namespace {

/// Calls visit(x_low, x_high) for every assignment of vars \ {var}, where the
/// two states differ only at `var`.
template <class Visit>
bool scan_cofactors(const Formula& phi, std::size_t var, std::size_t n, const Limits& limits, Visit&& visit) {
  auto vs = phi.vars();
  vs.erase(std::remove(vs.begin(), vs.end(), var), vs.end());
  if (vs.size() > limits.max_state_bits) throw CapExceeded("dependence scan exceeds truth-table cap");
  TwoValuedState x(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vs.size()); ++mask) {
    for (std::size_t j = 0; j < vs.size(); ++j) x.set(vs[j], (mask >> j) & 1U);
    x.set(var, false);
    bool low = phi.eval([&](std::size_t v) { return x[v]; });
    x.set(var, true);
    bool high = phi.eval([&](std::size_t v) { return x[v]; });
    if (visit(x, low, high)) return true;
  }
  return false;
}

}  // namespace

std::optional<TwoValuedState> dependence_witness(const Formula& phi, std::size_t var, std::size_t n,
                                                 const Limits& limits) {
  n = std::max({n, phi.max_var_plus_one(), var + 1});
  std::optional<TwoValuedState> witness;
  scan_cofactors(phi, var, n, limits, [&](const TwoValuedState& x, bool low, bool high) {
    if (low == high) return false;
    witness = x;
    witness->set(var, false);
    return true;
  });
  return witness;
}

bool depends_on(const Formula& phi, std::size_t var, const Limits& limits) {
  const auto vs = phi.vars();
  if (!std::binary_search(vs.begin(), vs.end(), var)) return false;
  return dependence_witness(phi, var, 0, limits).has_value();
}

std::vector<std::size_t> semantic_support(const Formula& phi, const Limits& limits) {
  std::vector<std::size_t> out;
  for (auto v : phi.vars())
    if (depends_on(phi, v, limits)) out.push_back(v);
  return out;
}

Formula simplify(const Formula& phi) {
  using K = Formula::Kind;
  switch (phi.kind()) {
    case K::constant:
    case K::variable: return phi;
    case K::negation: {
      Formula a = simplify(phi.lhs());
      if (a.is_constant()) return Formula::constant(!a.value());
      if (a.kind() == K::negation) return a.lhs();
      return Formula::negation(a);
    }
    default: break;
  }
  Formula a = simplify(phi.lhs());
  Formula b = simplify(phi.rhs());
  const K k = phi.kind();
  if (a.is_constant() && b.is_constant()) {
    return Formula::constant(Formula(make(k, a, b)).eval([](std::size_t) { return false; }));
  }
  // one constant side
  auto fold = [&](bool c, const Formula& other, bool const_on_left) -> std::optional<Formula> {
    switch (k) {
      case K::conjunction: return c ? other : Formula::constant(false);
      case K::disjunction: return c ? Formula::constant(true) : other;
      case K::implication:
        if (const_on_left) return c ? other : Formula::constant(true);
        return c ? Formula::constant(true) : simplify(Formula::negation(other));
      case K::equivalence: return c ? other : simplify(Formula::negation(other));
      case K::exclusive_or: return c ? simplify(Formula::negation(other)) : other;
      default: return std::nullopt;
    }
  };
  if (a.is_constant()) {
    if (auto r = fold(a.value(), b, true)) return *r;
  }
  if (b.is_constant()) {
    if (auto r = fold(b.value(), a, false)) return *r;
  }
  return make(k, a, b);
}

namespace {

Formula substitute_raw(const Formula& phi, std::size_t var, bool value) {
  using K = Formula::Kind;
  switch (phi.kind()) {
    case K::constant: return phi;
    case K::variable: return phi.var() == var ? Formula::constant(value) : phi;
    case K::negation: return Formula::negation(substitute_raw(phi.lhs(), var, value));
    default: return make(phi.kind(), substitute_raw(phi.lhs(), var, value), substitute_raw(phi.rhs(), var, value));
  }
}

}  // namespace

Formula substitute(const Formula& phi, std::size_t var, bool value) {
  return simplify(substitute_raw(phi, var, value));
}

Formula desugar(const Formula& phi) {
  using K = Formula::Kind;
  switch (phi.kind()) {
    case K::constant:
    case K::variable: return phi;
    case K::negation: return Formula::negation(desugar(phi.lhs()));
    default: break;
  }
  Formula a = desugar(phi.lhs());
  Formula b = desugar(phi.rhs());
  switch (phi.kind()) {
    case K::conjunction: return Formula::conjunction(a, b);
    case K::disjunction: return Formula::disjunction(a, b);
    case K::implication: return Formula::disjunction(Formula::negation(a), b);
    case K::equivalence:
      return Formula::disjunction(Formula::conjunction(a, b),
                                  Formula::conjunction(Formula::negation(a), Formula::negation(b)));
    case K::exclusive_or:
      return Formula::disjunction(Formula::conjunction(a, Formula::negation(b)),
                                  Formula::conjunction(Formula::negation(a), b));
    default: return phi;
  }
}

// ---------------------------------------------------------------------------
// DNF

namespace {

bool subsumes(const Term& small, const Term& big) {
  return small.size() <= big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool contradictory(const Term& t) {
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i].var == t[i - 1].var) return true;  // sorted + deduplicated: same var means opposite polarity
  return false;
}

/// Drops duplicates and subsumed terms; keeps first-seen order of survivors.
std::vector<Term> reduce(std::vector<Term> terms) {
  std::vector<std::size_t> order(terms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return terms[x].size() < terms[y].size(); });
  std::vector<char> keep(terms.size(), 0);
  std::vector<std::size_t> kept;
  for (auto i : order) {
    bool dominated = false;
    for (auto j : kept)
      if (subsumes(terms[j], terms[i])) { dominated = true; break; }
    if (!dominated) {
      keep[i] = 1;
      kept.push_back(i);
    }
  }
  std::vector<Term> out;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (keep[i]) out.push_back(std::move(terms[i]));
  return out;
}

Term merge(const Term& a, const Term& b) {
  Term t;
  t.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(t));
  return t;
}

/// DNF of phi (negated when `negate`), pushing negations to the leaves.
std::vector<Term> dnf_of(const Formula& phi, bool negate) {
  using K = Formula::Kind;
  switch (phi.kind()) {
    case K::constant:
      if (phi.value() != negate) return {Term{}};
      return {};
    case K::variable: return {Term{Literal{phi.var(), !negate}}};
    case K::negation: return dnf_of(phi.lhs(), !negate);
    case K::conjunction:
    case K::disjunction: {
      const bool is_and = (phi.kind() == K::conjunction) != negate;
      auto left = dnf_of(phi.lhs(), negate);
      auto right = dnf_of(phi.rhs(), negate);
      if (!is_and) {
        left.insert(left.end(), std::make_move_iterator(right.begin()), std::make_move_iterator(right.end()));
        return reduce(std::move(left));
      }
      std::vector<Term> product;
      for (const auto& l : left)
        for (const auto& r : right) {
          Term t = merge(l, r);
          if (!contradictory(t)) product.push_back(std::move(t));
        }
      return reduce(std::move(product));
    }
    default: return dnf_of(desugar(phi), negate);
  }
}

}  // namespace

Dnf::Dnf(std::vector<Term> terms) {
  for (auto& t : terms) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
  }
  terms.erase(std::remove_if(terms.begin(), terms.end(), contradictory), terms.end());
  terms_ = reduce(std::move(terms));
}

std::string Dnf::to_string(const Signature& sig) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " | ";
    if (terms_[i].empty()) { out += "1"; continue; }
    for (std::size_t j = 0; j < terms_[i].size(); ++j) {
      if (j) out += " & ";
      if (!terms_[i][j].positive) out += '!';
      out += sig.name(terms_[i][j].var);
    }
  }
  return out;
}

bool evaluate(const Dnf& dnf, const TwoValuedState& x) {
  return dnf.eval([&](std::size_t v) {
    if (v >= x.size()) throw SignatureMismatch("evaluate: DNF variable outside state");
    return x[v];
  });
}

Dnf to_dnf(const Formula& phi) { return Dnf(dnf_of(phi, false)); }
Dnf to_dnf_negation(const Formula& phi) { return Dnf(dnf_of(phi, true)); }

bool is_reduced(const Dnf& dnf) {
  const auto& ts = dnf.terms();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (contradictory(ts[i])) return false;
    for (std::size_t j = 0; j < ts.size(); ++j)
      if (i != j && subsumes(ts[i], ts[j])) return false;
  }
  return true;
}

}  // namespace adfbn
