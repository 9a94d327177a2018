#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ellk/exactalg/rational.hpp"
#include "ellk/sullivan/algebra.hpp"
#include "ellk/sullivan/pure.hpp"

namespace ellk {

/// Syntax or semantic error in a model file, with 1-based position and a caret snippet.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column, const std::string& source_line)
      : std::runtime_error(format(message, line, column, source_line)),
        message_(std::move(message)),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& msg, int line, int column, const std::string& src) {
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << msg << "\n  " << src << "\n  "
       << std::string(static_cast<std::size_t>(std::max(column - 1, 0)), ' ') << "^";
    return os.str();
  }

  std::string message_;
  int line_, column_;
};

/// Parsed model file: generators with differentials, optional relations and Kähler class.
struct SourceDocument {
  SullivanAlgebra algebra;
  std::vector<Element> relations;
  std::optional<std::string> distinguished_class;

  bool has_relations() const { return !relations.empty(); }

  /// Ring view: relations over the even generators, or the pure presentation when the
  /// file has no `rel` lines.
  RingPresentation presentation() const {
    const auto er = detail::even_ring(*algebra.generators());
    RingPresentation p{er.ring, {}, distinguished_class};
    if (has_relations()) {
      for (const auto& r : relations) p.relations.push_back(detail::to_polynomial(r, er));
    } else {
      if (!algebra.is_pure()) throw std::invalid_argument("model is not pure and has no 'rel' lines");
      for (std::size_t i = 0; i < algebra.size(); ++i)
        if (algebra.generator(i).is_odd() && !algebra.differential(i).is_zero())
          p.relations.push_back(detail::to_polynomial(algebra.differential(i), er));
    }
    p.check();
    return p;
  }
};

namespace detail {

struct Line {
  int number;
  std::string text;
};

class ExprParser {
 public:
  ExprParser(const GeneratorsPtr& gens, const Line& line, std::size_t start)
      : gens_(gens), line_(line), pos_(start) {}

  Element parse_all() {
    Element e = expr();
    skip_ws();
    if (pos_ < end()) fail("unexpected '" + std::string(1, line_.text[pos_]) + "'");
    return e;
  }

  /// First position where a generator with index >= limit is used (for the ordering rule).
  std::optional<std::pair<std::size_t, std::string>> first_use_at_or_after(std::size_t limit) const {
    for (const auto& [idx, pos] : uses_)
      if (idx >= limit) return std::pair(pos, (*gens_)[idx].name);
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& msg, std::optional<std::size_t> at = std::nullopt) const {
    throw ParseError(msg, line_.number, static_cast<int>(at.value_or(pos_)) + 1, line_.text);
  }

 private:
  std::size_t end() const {
    const auto hash = line_.text.find('#');
    return hash == std::string::npos ? line_.text.size() : hash;
  }
  void skip_ws() {
    while (pos_ < end() && std::isspace(static_cast<unsigned char>(line_.text[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < end() && line_.text[pos_] == c;
  }

  Element expr() {
    skip_ws();
    Element acc(gens_);
    bool negative = false;
    if (peek('+') || peek('-')) negative = line_.text[pos_++] == '-';
    acc = term();
    if (negative) acc = -acc;
    while (peek('+') || peek('-')) {
      const bool minus = line_.text[pos_++] == '-';
      Element t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Element term() {
    Element acc = factor();
    while (peek('*')) {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Element factor() {
    Element base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      const std::string digits = integer();
      if (digits.empty()) fail("expected a non-negative integer exponent", at);
      if (digits.size() > 6) fail("exponent too large", at);
      base = base.pow(std::stoi(digits));
    }
    return base;
  }

  Element primary() {
    skip_ws();
    if (pos_ >= end()) fail("unexpected end of expression");
    const char c = line_.text[pos_];
    if (c == '(') {
      ++pos_;
      Element e = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return e;
    }
    if (c == '-') {
      ++pos_;
      return -primary();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = integer();
      if (peek('/')) {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        const std::string den = integer();
        if (den.empty()) fail("expected a denominator", at);
        if (std::stoll(den) == 0) fail("zero denominator", at);
        lit += "/" + den;
      }
      return Element::constant(gens_, parse_rational(lit));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = pos_;
      const std::string name = identifier();
      auto idx = gens_->index_of(name);
      if (!idx) fail("unknown generator '" + name + "'", at);
      uses_.emplace_back(*idx, at);
      return Element::generator(gens_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string integer() {
    std::string s;
    while (pos_ < end() && std::isdigit(static_cast<unsigned char>(line_.text[pos_]))) s += line_.text[pos_++];
    return s;
  }
  std::string identifier() {
    std::string s;
    while (pos_ < end() && (std::isalnum(static_cast<unsigned char>(line_.text[pos_])) || line_.text[pos_] == '_' ||
                            line_.text[pos_] == '\''))
      s += line_.text[pos_++];
    return s;
  }

  GeneratorsPtr gens_;
  const Line& line_;
  std::size_t pos_;
  std::vector<std::pair<std::size_t, std::size_t>> uses_;
};

/// Whitespace-separated words of a line (comment stripped) with their start columns.
inline std::vector<std::pair<std::string, std::size_t>> words(const std::string& text) {
  std::vector<std::pair<std::string, std::size_t>> out;
  const std::size_t end = std::min(text.find('#'), text.size());
  std::size_t i = 0;
  while (i < end) {
    while (i < end && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= end) break;
    const std::size_t start = i;
    while (i < end && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    out.emplace_back(text.substr(start, i - start), start);
  }
  return out;
}

inline bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

inline int parse_int(const std::pair<std::string, std::size_t>& w, const Line& line, const char* what) {
  const auto& s = w.first;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool ok = i < s.size() && s.size() <= 9;
  for (std::size_t k = i; ok && k < s.size(); ++k) ok = std::isdigit(static_cast<unsigned char>(s[k]));
  if (!ok) throw ParseError(std::string("expected an integer ") + what, line.number, static_cast<int>(w.second) + 1, line.text);
  return std::stoi(s);
}

}  // namespace detail

/// Parses the model text format:
///   gen <name> <degree> [bidegree <i> <j>]
///   d <name> = <expr>
///   rel <expr>
///   class <name>
/// `#` starts a comment. Differentials may only use generators declared before their target.
inline SourceDocument parse_document(std::string_view text) {
  std::vector<detail::Line> lines;
  {
    std::istringstream is{std::string(text)};
    std::string s;
    int n = 0;
    while (std::getline(is, s)) {
      if (!s.empty() && s.back() == '\r') s.pop_back();
      lines.push_back({++n, s});
    }
  }
  auto err = [](const std::string& msg, const detail::Line& l, std::size_t col) -> ParseError {
    return ParseError(msg, l.number, static_cast<int>(col) + 1, l.text);
  };

  // pass 1: generators
  std::vector<SullivanGenerator> gl;
  std::vector<int> decl_line;
  for (const auto& l : lines) {
    const auto w = detail::words(l.text);
    if (w.empty()) continue;
    const auto& kw = w[0].first;
    if (kw == "d" || kw == "rel" || kw == "class") continue;
    if (kw != "gen") throw err("unknown directive '" + kw + "'", l, w[0].second);
    if (w.size() != 3 && w.size() != 6)
      throw err("expected 'gen <name> <degree> [bidegree <i> <j>]'", l, w[0].second);
    if (!detail::valid_name(w[1].first)) throw err("invalid generator name '" + w[1].first + "'", l, w[1].second);
    for (std::size_t i = 0; i < gl.size(); ++i)
      if (gl[i].name == w[1].first)
        throw err("generator '" + w[1].first + "' already declared on line " + std::to_string(decl_line[i]), l,
                  w[1].second);
    SullivanGenerator g{w[1].first, detail::parse_int(w[2], l, "degree"), std::nullopt};
    if (g.degree < 2) throw err("generator degree must be at least 2", l, w[2].second);
    if (w.size() == 6) {
      if (w[3].first != "bidegree") throw err("expected 'bidegree'", l, w[3].second);
      Bidegree b{detail::parse_int(w[4], l, "bidegree"), detail::parse_int(w[5], l, "bidegree")};
      if (b.p < 0 || b.q < 0 || b.p + b.q != g.degree)
        throw err("bidegree (" + std::to_string(b.p) + "," + std::to_string(b.q) + ") does not add up to degree " +
                      std::to_string(g.degree),
                  l, w[4].second);
      g.bidegree = b;
    }
    gl.push_back(g);
    decl_line.push_back(l.number);
  }
  if (gl.empty()) throw ParseError("no generators declared", lines.empty() ? 1 : lines.back().number, 1,
                                   lines.empty() ? "" : lines.back().text);
  auto gens = make_generators(gl);

  // pass 2: differentials, relations, class
  std::vector<Element> d(gens->size(), Element(gens));
  std::vector<int> d_line(gens->size(), 0);
  std::vector<const detail::Line*> d_source(gens->size(), nullptr);
  SourceDocument doc{SullivanAlgebra(gens, d), {}, std::nullopt};
  for (const auto& l : lines) {
    const auto w = detail::words(l.text);
    if (w.empty() || w[0].first == "gen") continue;
    const auto& kw = w[0].first;
    if (kw == "class") {
      if (w.size() != 2) throw err("expected 'class <name>'", l, w[0].second);
      auto idx = gens->index_of(w[1].first);
      if (!idx) throw err("unknown generator '" + w[1].first + "'", l, w[1].second);
      if ((*gens)[*idx].degree != 2) throw err("class '" + w[1].first + "' must have degree 2", l, w[1].second);
      if (doc.distinguished_class) throw err("class declared twice", l, w[0].second);
      doc.distinguished_class = w[1].first;
      continue;
    }
    if (kw == "rel") {
      detail::ExprParser p(gens, l, w[0].second + 3);
      Element e = p.parse_all();
      if (e.is_zero()) throw err("relation is zero", l, w[0].second + 4);
      if (!e.only_even_generators()) throw err("relations may only involve even generators", l, w[0].second + 4);
      if (!e.degree()) throw err("relation is not homogeneous", l, w[0].second + 4);
      doc.relations.push_back(std::move(e));
      continue;
    }
    // d <name> = <expr>
    if (w.size() < 3 || w[2].first.rfind("=", 0) != 0) throw err("expected 'd <name> = <expression>'", l, w[0].second);
    auto idx = gens->index_of(w[1].first);
    if (!idx) throw err("unknown generator '" + w[1].first + "'", l, w[1].second);
    if (d_line[*idx])
      throw err("differential of '" + w[1].first + "' already given on line " + std::to_string(d_line[*idx]), l,
                w[0].second);
    const std::size_t expr_start = w[2].second + 1;
    detail::ExprParser p(gens, l, expr_start);
    Element e = p.parse_all();
    const auto& g = (*gens)[*idx];
    std::vector<std::string> problems;
    std::optional<std::size_t> where;
    if (!e.is_zero()) {
      auto deg = e.degree();
      if (!deg)
        problems.push_back("d(" + g.name + ") is not homogeneous");
      else if (*deg != g.degree + 1)
        problems.push_back("degree mismatch: d(" + g.name + ") has degree " + std::to_string(*deg) + ", expected " +
                           std::to_string(g.degree + 1));
    }
    if (auto use = p.first_use_at_or_after(*idx)) {
      problems.push_back(use->second == g.name ? "d(" + g.name + ") refers to " + g.name + " itself"
                                               : "d(" + g.name + ") refers to " + use->second +
                                                     ", which is not declared before " + g.name);
      where = use->first;
    }
    if (!problems.empty()) {
      std::string msg;
      for (const auto& pr : problems) msg += (msg.empty() ? "" : "; ") + pr;
      std::size_t first = expr_start;
      while (first < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[first]))) ++first;
      p.fail(msg, where.value_or(first));
    }
    d[*idx] = std::move(e);
    d_line[*idx] = l.number;
    d_source[*idx] = &l;
  }
  doc.algebra = SullivanAlgebra(gens, d);
  const auto rep = validate(doc.algebra);
  if (!rep.ok()) {
    const auto& v = rep.violations.front();
    const auto idx = *gens->index_of(v.generator);
    const detail::Line* src = d_source[idx];
    if (src) throw err(v.message, *src, 0);
    throw ParseError(v.message, decl_line[idx], 1, lines[static_cast<std::size_t>(decl_line[idx] - 1)].text);
  }
  return doc;
}

inline SullivanAlgebra parse_cdga(std::string_view text) { return parse_document(text).algebra; }

/// Canonical text form; parse_document(print_document(x)) reproduces x.
inline std::string print_cdga(const SullivanAlgebra& alg) {
  std::ostringstream os;
  for (const auto& g : alg.generators()->list()) {
    os << "gen " << g.name << " " << g.degree;
    if (g.bidegree) os << " bidegree " << g.bidegree->p << " " << g.bidegree->q;
    os << "\n";
  }
  for (std::size_t i = 0; i < alg.size(); ++i)
    if (!alg.differential(i).is_zero())
      os << "d " << alg.generator(i).name << " = " << alg.differential(i).to_string() << "\n";
  return os.str();
}

inline std::string print_document(const SourceDocument& doc) {
  std::string s = print_cdga(doc.algebra);
  for (const auto& r : doc.relations) s += "rel " + r.to_string() + "\n";
  if (doc.distinguished_class) s += "class " + *doc.distinguished_class + "\n";
  return s;
}

}  // namespace ellk
