#include "adfbn/signs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace adfbn {

namespace {

std::size_t parent_position(const Framework& fr, std::size_t a, std::size_t b) {
  const auto& par = fr.parents(b);
  const auto it = std::find(par.begin(), par.end(), a);
  if (it == par.end())
    throw std::invalid_argument(fr.signature().name(a) + " is not a parent of " + fr.signature().name(b));
  return static_cast<std::size_t>(it - par.begin());
}

}  // namespace

int boolean_derivative(const Framework& fr, std::size_t a, std::size_t b, const TwoValuedState& x) {
  require_same_size(x.size(), fr.size(), "boolean_derivative");
  parent_position(fr, a, b);
  TwoValuedState hi = x, lo = x;
  hi.set(a, true);
  lo.set(a, false);
  return static_cast<int>(fr.evaluate(b, hi)) - static_cast<int>(fr.evaluate(b, lo));
}

unsigned SignFlags::code() const {
  return unsigned{m_plus} | unsigned{m_minus} << 1 | unsigned{d_plus} << 2 | unsigned{d_minus} << 3;
}

SignFlags SignFlags::from_code(unsigned code) {
  return {(code & 1U) != 0, (code & 2U) != 0, (code & 4U) != 0, (code & 8U) != 0};
}

std::string SignFlags::to_string() const {
  std::string out = "M-:";
  out += m_minus ? '1' : '0';
  out += " M+:";
  out += m_plus ? '1' : '0';
  out += " D-:";
  out += d_minus ? '1' : '0';
  out += " D+:";
  out += d_plus ? '1' : '0';
  return out;
}

SignRecord edge_signs(const Framework& fr, std::size_t a, std::size_t b, const Limits& limits) {
  const std::size_t j = parent_position(fr, a, b);
  const auto& par = fr.parents(b);
  if (par.size() > limits.max_state_bits)
    throw CapExceeded("2^" + std::to_string(par.size()) + " cofactor states exceed the cap");

  const std::uint64_t rows = std::uint64_t{1} << par.size();
  const std::uint64_t abit = std::uint64_t{1} << j;
  TwoValuedState x(fr.size());
  auto load = [&](std::uint64_t row) {
    for (std::size_t k = 0; k < par.size(); ++k) x.set(par[k], (row >> k) & 1U);
    return fr.evaluate(b, x);
  };

  SignRecord rec;
  rec.source = a;
  rec.target = b;

  // universal scan: no decrease / no increase along a
  bool monotone = true, antitone = true;
  for (std::uint64_t row = 0; row < rows; ++row) {
    if (row & abit) continue;
    const bool lo = load(row);
    const bool hi = load(row | abit);
    monotone = monotone && lo <= hi;
    antitone = antitone && lo >= hi;
  }
  rec.flags.m_plus = monotone;
  rec.flags.m_minus = antitone;

  // existential scan: first witness of each derivative sign
  for (std::uint64_t row = 0; row < rows; ++row) {
    if (row & abit) continue;
    const bool hi = load(row | abit);
    const bool lo = load(row);
    if (hi == lo) continue;
    auto& slot = hi ? rec.positive_witness : rec.negative_witness;
    if (!slot) slot = x;  // x holds the a=0 cofactor after load(row)
  }
  rec.flags.d_plus = rec.positive_witness.has_value();
  rec.flags.d_minus = rec.negative_witness.has_value();

  if (rec.flags.d_plus == rec.flags.m_minus || rec.flags.d_minus == rec.flags.m_plus)
    throw std::logic_error("sign scans disagree on edge " + fr.signature().name(a) + " -> " +
                           fr.signature().name(b));
  return rec;
}

std::vector<SignRecord> all_edge_signs(const Framework& fr, const Limits& limits) {
  std::vector<SignRecord> out;
  for (const auto& [a, b] : fr.edges()) out.push_back(edge_signs(fr, a, b, limits));
  return out;
}

bool is_bipolar(const Framework& fr, const Limits& limits) {
  for (const auto& [a, b] : fr.edges()) {
    const auto f = edge_signs(fr, a, b, limits).flags;
    if (!f.m_plus && !f.m_minus) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

/// Recursive descent over the flag grammar, evaluating to truth tables.
class FlagParser {
public:
  explicit FlagParser(std::string_view text) : text_(text) {}

  std::uint16_t parse() {
    const auto t = disjunction();
    skip();
    if (pos_ != text_.size()) fail("unexpected input");
    return t;
  }

private:
  static constexpr std::uint16_t column(unsigned bit) {
    std::uint16_t t = 0;
    for (unsigned c = 0; c < 16; ++c)
      if ((c >> bit) & 1U) t |= static_cast<std::uint16_t>(1U << c);
    return t;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what + " in flag expression", 1, pos_ + 1); }

  void skip() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint16_t disjunction() {
    auto t = conjunction();
    while (eat('|')) t |= conjunction();
    return t;
  }

  std::uint16_t conjunction() {
    auto t = unary();
    while (eat('&')) t &= unary();
    return t;
  }

  std::uint16_t unary() {
    if (eat('!')) return static_cast<std::uint16_t>(~unary());
    if (eat('(')) {
      const auto t = disjunction();
      if (!eat(')')) fail("missing ')'");
      return t;
    }
    skip();
    const std::string_view rest = text_.substr(pos_);
    static constexpr std::pair<std::string_view, std::uint16_t> atoms[] = {
        {"M+", column(0)}, {"M-", column(1)}, {"D+", column(2)}, {"D-", column(3)}, {"true", 0xFFFF}, {"false", 0},
    };
    for (const auto& [tok, t] : atoms) {
      if (rest.starts_with(tok)) {
        pos_ += tok.size();
        return t;
      }
    }
    fail(rest.empty() ? "unexpected end" : "unknown token");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Row {
  std::string_view name;
  std::string_view expression;
};

// Non-trivial Boolean combinations of the monotonicity flags.
constexpr Row monotonicity_rows[] = {
    {"strict, mandatory, positive", "M+ & !M-"},
    {"strict, mandatory, negative", "M- & !M+"},
    {"strict, mandatory, unknown sign", "(M- & !M+) | (!M- & M+)"},
    {"strict, optional, positive", "M+"},
    {"strict, optional, negative", "M-"},
    {"strict, optional, unknown sign", "M- | M+"},
    {"non-mon., mandatory", "!M- & !M+"},
    {"non-mon., optional", "(M- & M+) | (!M- & !M+)"},
    {"poss. non-mon., mandatory, positive", "!M-"},
    {"poss. non-mon., mandatory, negative", "!M+"},
    {"poss. non-mon., mandatory, unknown sign", "!(M- & M+)"},
    {"poss. non-mon., optional, positive", "!M- | M+"},
    {"poss. non-mon., optional, negative", "M- | !M+"},
    {"irrelevant", "M- & M+"},
    {"poss. non-mon., optional, unknown sign", "true"},
};

// The same combinations over the derivative flags.
constexpr Row derivative_rows[] = {
    {"strict, mandatory, positive", "D+ & !D-"},
    {"strict, mandatory, negative", "D- & !D+"},
    {"strict, mandatory, unknown sign", "(D- & !D+) | (!D- & D+)"},
    {"poss. dual, mandatory, positive", "D+"},
    {"poss. dual, mandatory, negative", "D-"},
    {"poss. dual, mandatory, unknown sign", "D- | D+"},
    {"irrelevant", "!D- & !D+"},
    {"dual, optional", "(D+ & D-) | (!D+ & !D-)"},
    {"strict, optional, positive", "!D-"},
    {"strict, optional, negative", "!D+"},
    {"strict, optional, unknown sign", "!(D+ & D-)"},
    {"poss. dual, optional, positive", "D+ | !D-"},
    {"poss. dual, optional, negative", "D- | !D+"},
    {"dual, mandatory", "D+ & D-"},
    {"poss. dual, optional, unknown sign", "true"},
};

unsigned specificity(Vocabulary voc, std::size_t row) {
  if (row == 1 || row == 2) return 0;  // strict, mandatory, signed
  const std::size_t mandatory_unsigned = voc == Vocabulary::monotonicity ? 7 : 14;
  if (row == mandatory_unsigned) return 1;
  const std::size_t optional_signed = voc == Vocabulary::monotonicity ? 4 : 9;
  if (row == optional_signed || row == optional_signed + 1) return 2;
  return 3;
}

std::vector<EdgeLabel> build_table(Vocabulary voc) {
  const auto& rows = voc == Vocabulary::monotonicity ? monotonicity_rows : derivative_rows;
  std::vector<EdgeLabel> out;
  for (std::size_t i = 0; i < std::size(rows); ++i)
    out.push_back({rows[i].name, rows[i].expression, FlagFunction::parse(rows[i].expression), i + 1,
                   specificity(voc, i + 1)});
  return out;
}

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  for (std::size_t p = s.find(from); p != std::string::npos; p = s.find(from, p + to.size()))
    s.replace(p, from.size(), to);
}

}  // namespace

FlagFunction FlagFunction::parse(std::string_view text) { return FlagFunction(FlagParser(text).parse()); }

const std::vector<EdgeLabel>& label_table(Vocabulary vocabulary) {
  static const std::vector<EdgeLabel> mono = build_table(Vocabulary::monotonicity);
  static const std::vector<EdgeLabel> deriv = build_table(Vocabulary::derivative);
  return vocabulary == Vocabulary::monotonicity ? mono : deriv;
}

const EdgeLabel& classify_edge(const SignRecord& record, Vocabulary vocabulary) {
  const EdgeLabel* best = nullptr;
  for (const auto& label : label_table(vocabulary)) {
    if (!label.function(record.flags)) continue;
    if (!best || label.specificity < best->specificity) best = &label;
  }
  return *best;  // the "true" row always matches
}

const EdgeLabel& classify_edge(const Framework& fr, std::size_t a, std::size_t b, Vocabulary vocabulary,
                               const Limits& limits) {
  return classify_edge(edge_signs(fr, a, b, limits), vocabulary);
}

std::string corresponding_label_name(std::string_view name, Vocabulary from) {
  std::string out(name);
  if (from == Vocabulary::monotonicity) replace_all(out, "non-mon.", "dual");
  else replace_all(out, "dual", "non-mon.");
  return out;
}

FlagFunction to_derivative_flags(const FlagFunction& monotonicity_function) {
  std::uint16_t t = 0;
  for (unsigned c = 0; c < 16; ++c) {
    SignFlags f = SignFlags::from_code(c);
    f.m_plus = !f.d_minus;
    f.m_minus = !f.d_plus;
    if (monotonicity_function(f)) t |= static_cast<std::uint16_t>(1U << c);
  }
  return FlagFunction(t);
}

FlagFunction resolve_label(std::string_view label) {
  for (auto voc : {Vocabulary::monotonicity, Vocabulary::derivative})
    for (const auto& row : label_table(voc))
      if (row.name == label) return row.function;
  return FlagFunction::parse(label);
}

// ---------------------------------------------------------------------------

std::vector<RGraphConstraint> parse_rgraph(std::string_view text, const Signature& sig) {
  std::vector<RGraphConstraint> out;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string source, target;
    if (!(ls >> source)) continue;
    if (!(ls >> target)) throw ParseError("expected `source target LABEL`", line_no);
    std::string label;
    std::getline(ls, label);
    const auto first = label.find_first_not_of(" \t");
    const auto last = label.find_last_not_of(" \t\r");
    if (first == std::string::npos) throw ParseError("missing label", line_no);
    label = label.substr(first, last - first + 1);
    for (const auto& name : {source, target})
      if (!sig.contains(name)) throw ParseError("unknown argument '" + name + "'", line_no);
    FlagFunction fn;
    try {
      fn = resolve_label(label);
    } catch (const ParseError&) {
      throw ParseError("bad label '" + label + "'", line_no);
    }
    out.push_back({sig.index_of(source), sig.index_of(target), label, fn});
  }
  return out;
}

std::vector<RGraphVerdict> check_rgraph(const Framework& fr, const std::vector<RGraphConstraint>& constraints,
                                        const Limits& limits) {
  std::vector<RGraphVerdict> out;
  for (const auto& c : constraints) {
    RGraphVerdict v{c, fr.is_parent(c.source, c.target), {}, false};
    if (v.edge_present) {
      v.record = edge_signs(fr, c.source, c.target, limits);
    } else {
      v.record.source = c.source;
      v.record.target = c.target;
      v.record.flags = SignFlags::absent();
    }
    v.satisfied = c.function(v.record.flags);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace adfbn
