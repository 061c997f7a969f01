#include "adfbn/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace adfbn {

std::optional<InputFormat> format_from_name(std::string_view name) {
  if (name == "apx") return InputFormat::apx;
  if (name == "adf") return InputFormat::adf;
  if (name == "bnet") return InputFormat::bnet;
  return std::nullopt;
}

std::optional<InputFormat> format_from_path(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  return ext.empty() ? std::nullopt : format_from_name(std::string_view(ext).substr(1));
}

std::string_view format_name(InputFormat format) {
  switch (format) {
    case InputFormat::apx: return "apx";
    case InputFormat::adf: return "adf";
    case InputFormat::bnet: return "bnet";
  }
  return "";
}

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Character cursor with line/column bookkeeping for the Prolog-like formats.
class Cursor {
public:
  Cursor(std::string_view text, char comment) : text_(text), comment_(comment) {}

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == comment_) {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool done() {
    skip();
    return pos_ >= text_.size();
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) advance();
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  char comment_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

Signature make_signature(std::vector<std::string> names, std::size_t line) {
  try {
    return Signature(std::move(names));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// apx

DungFramework parse_apx(std::string_view text) {
  Cursor in(text, '%');
  std::vector<std::string> names;
  std::map<std::string, std::size_t, std::less<>> index;
  std::vector<std::pair<std::size_t, std::size_t>> attacks;
  while (!in.done()) {
    const std::size_t line = in.line(), col = in.column();
    const std::string kw = in.ident();
    in.expect('(');
    if (kw == "arg") {
      std::string name = in.ident();
      if (index.contains(name)) throw ParseError("duplicate argument '" + name + "'", line, col);
      index.emplace(name, names.size());
      names.push_back(std::move(name));
    } else if (kw == "att") {
      std::size_t ends[2];
      for (int k = 0; k < 2; ++k) {
        if (k == 1) in.expect(',');
        const std::size_t l = in.line(), c = in.column() + 0;
        const std::string name = in.ident();
        const auto it = index.find(name);
        if (it == index.end()) throw ParseError("undeclared argument '" + name + "'", l, c);
        ends[k] = it->second;
      }
      attacks.emplace_back(ends[0], ends[1]);
    } else {
      throw ParseError("unknown statement '" + kw + "'", line, col);
    }
    in.expect(')');
    in.expect('.');
  }
  return DungFramework(make_signature(std::move(names), in.line()), std::move(attacks));
}

std::string write_apx(const DungFramework& af) {
  std::ostringstream out;
  for (const auto& name : af.signature().names()) out << "arg(" << name << ").\n";
  for (const auto& [a, b] : af.attacks())
    out << "att(" << af.signature().name(a) << ',' << af.signature().name(b) << ").\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// adf

namespace {

Formula parse_adf_formula(Cursor& in, const std::map<std::string, std::size_t, std::less<>>& index) {
  const std::size_t line = in.line(), col = in.column();
  const std::string head = in.ident();
  if (!in.peek('(')) {
    const auto it = index.find(head);
    if (it == index.end()) throw ParseError("undeclared argument '" + head + "'", line, col);
    return Formula::variable(it->second);
  }
  in.expect('(');
  Formula f;
  if (head == "c") {
    const std::string v = in.ident();
    if (v != "v" && v != "f") in.fail("expected c(v) or c(f)");
    f = Formula::constant(v == "v");
  } else if (head == "neg") {
    f = Formula::negation(parse_adf_formula(in, index));
  } else {
    Formula (*make)(Formula, Formula) = nullptr;
    if (head == "and") make = &Formula::conjunction;
    else if (head == "or") make = &Formula::disjunction;
    else if (head == "imp") make = &Formula::implication;
    else if (head == "iff") make = &Formula::equivalence;
    else if (head == "xor") make = &Formula::exclusive_or;
    else throw ParseError("unknown connective '" + head + "'", line, col);
    Formula lhs = parse_adf_formula(in, index);
    in.expect(',');
    Formula rhs = parse_adf_formula(in, index);
    f = make(std::move(lhs), std::move(rhs));
  }
  in.expect(')');
  return f;
}

void write_adf_formula(std::ostream& out, const Formula& f, const Signature& sig) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::constant: out << (f.value() ? "c(v)" : "c(f)"); return;
    case K::variable: out << sig.name(f.var()); return;
    case K::negation:
      out << "neg(";
      write_adf_formula(out, f.lhs(), sig);
      out << ')';
      return;
    default: break;
  }
  static const std::map<K, const char*> names = {{K::conjunction, "and"}, {K::disjunction, "or"},
                                                 {K::implication, "imp"}, {K::equivalence, "iff"},
                                                 {K::exclusive_or, "xor"}};
  out << names.at(f.kind()) << '(';
  write_adf_formula(out, f.lhs(), sig);
  out << ',';
  write_adf_formula(out, f.rhs(), sig);
  out << ')';
}

}  // namespace

Framework parse_adf(std::string_view text, Validation mode) {
  // Two passes: statements may reference arguments declared later.
  std::vector<std::string> names;
  std::map<std::string, std::size_t, std::less<>> index;
  {
    Cursor in(text, '%');
    while (!in.done()) {
      const std::size_t line = in.line(), col = in.column();
      const std::string kw = in.ident();
      if (kw != "s" && kw != "ac") throw ParseError("unknown statement '" + kw + "'", line, col);
      in.expect('(');
      if (kw == "s") {
        std::string name = in.ident();
        if (index.contains(name)) throw ParseError("duplicate statement '" + name + "'", line, col);
        index.emplace(name, names.size());
        names.push_back(std::move(name));
        in.expect(')');
        in.expect('.');
      } else {
        // skip to the terminating ")." of this acceptance condition
        int depth = 1;
        while (depth > 0) {
          if (in.done()) in.fail("unterminated acceptance condition");
          if (in.peek('(')) ++depth;
          else if (in.peek(')')) --depth;
          if (in.peek('(') || in.peek(')') || in.peek(',')) {
            in.expect(in.peek('(') ? '(' : in.peek(')') ? ')' : ',');
          } else {
            in.ident();
          }
        }
        in.expect('.');
      }
    }
  }

  std::vector<std::optional<Formula>> formulas(names.size());
  Cursor in(text, '%');
  while (!in.done()) {
    const std::string kw = in.ident();
    in.expect('(');
    if (kw == "s") {
      in.ident();
    } else {
      const std::size_t line = in.line(), col = in.column();
      const std::string name = in.ident();
      const auto it = index.find(name);
      if (it == index.end()) throw ParseError("acceptance condition for undeclared '" + name + "'", line, col);
      if (formulas[it->second]) throw ParseError("second acceptance condition for '" + name + "'", line, col);
      in.expect(',');
      formulas[it->second] = parse_adf_formula(in, index);
    }
    in.expect(')');
    in.expect('.');
  }

  std::vector<Formula> conditions;
  for (std::size_t a = 0; a < names.size(); ++a) {
    if (!formulas[a]) throw ParseError("missing acceptance condition for '" + names[a] + "'", in.line());
    conditions.push_back(*formulas[a]);
  }
  return Framework::from_formulas(make_signature(std::move(names), in.line()), std::move(conditions), mode);
}

std::string write_adf(const Framework& fr) {
  std::ostringstream out;
  const auto& sig = fr.signature();
  for (const auto& name : sig.names()) out << "s(" << name << ").\n";
  for (std::size_t a = 0; a < fr.size(); ++a) {
    out << "ac(" << sig.name(a) << ',';
    write_adf_formula(out, fr.formula(a), sig);
    out << ").\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// bnet

namespace {

/// One bnet expression; names resolved after all targets are known.
class BnetExpr {
public:
  BnetExpr(std::string_view text, std::size_t line, std::size_t offset,
           const std::map<std::string, std::size_t, std::less<>>& index)
      : text_(text), line_(line), offset_(offset), index_(index) {}

  Formula parse() {
    Formula f = disjunction();
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, offset_ + pos_ + 1); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (eat('|')) f = Formula::disjunction(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (eat('&')) f = Formula::conjunction(f, unary());
    return f;
  }

  Formula unary() {
    if (eat('!')) return Formula::negation(unary());
    if (eat('(')) {
      Formula f = disjunction();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    if (start == pos_) fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                                                : "unexpected end of expression");
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "0" || name == "1") return Formula::constant(name == "1");
    const auto it = index_.find(name);
    if (it == index_.end()) {
      pos_ = start;
      fail("undefined regulator '" + std::string(name) + "'");
    }
    return Formula::variable(it->second);
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  const std::map<std::string, std::size_t, std::less<>>& index_;
  std::size_t pos_ = 0;
};

int bnet_precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::disjunction: return 1;
    case Formula::Kind::conjunction: return 2;
    case Formula::Kind::negation: return 3;
    default: return 4;
  }
}

void write_bnet_formula(std::ostream& out, const Formula& f, const Signature& sig) {
  using K = Formula::Kind;
  auto child = [&](const Formula& c, bool parens) {
    if (parens) out << '(';
    write_bnet_formula(out, c, sig);
    if (parens) out << ')';
  };
  switch (f.kind()) {
    case K::constant: out << (f.value() ? '1' : '0'); return;
    case K::variable: out << sig.name(f.var()); return;
    case K::negation:
      out << '!';
      child(f.lhs(), bnet_precedence(f.lhs()) < 3);
      return;
    case K::conjunction:
    case K::disjunction: {
      const int p = bnet_precedence(f);
      child(f.lhs(), bnet_precedence(f.lhs()) < p);
      out << (f.kind() == K::conjunction ? " & " : " | ");
      child(f.rhs(), bnet_precedence(f.rhs()) <= p);
      return;
    }
    default: write_bnet_formula(out, desugar(f), sig);
  }
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

Framework parse_bnet(std::string_view text, Validation mode) {
  struct Line {
    std::size_t number;
    std::string body;
    std::size_t expr_offset;
  };
  std::vector<Line> lines;
  std::vector<std::string> names;
  std::map<std::string, std::size_t, std::less<>> index;

  std::istringstream in{std::string(text)};
  std::string raw;
  bool first = true;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (trim(raw).empty()) continue;
    const auto comma = raw.find(',');
    if (comma == std::string::npos) throw ParseError("expected `NAME, EXPR`", number, raw.size() + 1);
    const std::string name = trim(std::string_view(raw).substr(0, comma));
    if (first) {
      first = false;
      std::string lowered = name;
      for (auto& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      if (lowered == "targets") continue;
    }
    if (name.empty()) throw ParseError("missing target name", number, 1);
    for (char c : name)
      if (!ident_char(c)) throw ParseError("bad target name '" + name + "'", number, raw.find(name) + 1);
    if (name == "0" || name == "1") throw ParseError("constant used as a target name", number, raw.find(name) + 1);
    if (index.contains(name)) throw ParseError("duplicate target '" + name + "'", number, raw.find(name) + 1);
    index.emplace(name, names.size());
    names.push_back(name);
    lines.push_back({number, raw, comma + 1});
  }

  std::vector<Formula> formulas;
  for (const auto& l : lines) {
    const std::string_view expr = std::string_view(l.body).substr(l.expr_offset);
    formulas.push_back(BnetExpr(expr, l.number, l.expr_offset, index).parse());
  }
  return Framework::from_formulas(make_signature(std::move(names), 1), std::move(formulas), mode);
}

std::string write_bnet(const Framework& fr) {
  std::ostringstream out;
  out << "targets, factors\n";
  for (std::size_t a = 0; a < fr.size(); ++a) {
    out << fr.signature().name(a) << ", ";
    write_bnet_formula(out, fr.formula(a), fr.signature());
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

LoadedInput parse_input(std::string_view text, InputFormat format) {
  switch (format) {
    case InputFormat::apx: {
      DungFramework af = parse_apx(text);
      Framework fr = af.to_framework();
      return {format, std::move(af), std::move(fr)};
    }
    case InputFormat::adf: return {format, std::nullopt, parse_adf(text)};
    case InputFormat::bnet: return {format, std::nullopt, parse_bnet(text)};
  }
  throw std::invalid_argument("unknown input format");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LoadedInput load_input(const std::filesystem::path& path, std::optional<InputFormat> format) {
  if (!format) format = format_from_path(path);
  if (!format) throw std::invalid_argument("cannot infer the format of " + path.string());
  return parse_input(read_file(path), *format);
}

}  // namespace adfbn
