#pragma once

#include <cctype>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qhh/algebra.hpp"
#include "qhh/errors.hpp"
#include "qhh/quiver.hpp"

namespace qhh {

// Parsed form of the line-oriented input format:
//
//   # comment
//   algebra NAME
//   vertices: 1 2 3
//   arrows: a: 1 -> 2; b: 2 -> 3
//   relations: a*b, b*b          (or "(none)")
//   subalgebra NAME              (optional block)
//   arrows: a, b                 (or "(none)")
//
// Paths are written left to right in application order: "a*b" acts by a
// first, then b.  ParseError carries line/column; structural problems
// (duplicate names, non-composable paths, ...) raise ValidationError.
struct ParsedInput {
  std::string algebra_name;
  Quiver quiver;
  std::vector<Path> relations;
  std::optional<std::string> subalgebra_name;
  std::vector<std::string> subalgebra_arrows;
};

namespace detail {

struct Cursor {
  const std::string& s;
  int line;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  int col() const { return static_cast<int>(i) + 1; }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, col(), msg); }

  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool eat_word(const std::string& w) {
    skip_ws();
    if (s.compare(i, w.size(), w) == 0) {
      i += w.size();
      return true;
    }
    return false;
  }

  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::string name() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && name_char(s[i])) ++i;
    if (i == start) fail("expected a name");
    return s.substr(start, i - start);
  }

  int integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail("expected an integer");
    return std::stoi(s.substr(start, i - start));
  }

  void expect_end() {
    if (!done()) fail("unexpected trailing input");
  }
};

inline std::optional<std::pair<int, std::string>> next_line(std::istream& in, int& lineno) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    size_t a = raw.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = raw.find_last_not_of(" \t\r");
    return std::make_pair(lineno, raw.substr(0, b + 1));
  }
  return std::nullopt;
}

}  // namespace detail

inline ParsedInput parse_input(std::istream& in) {
  using detail::Cursor;
  int lineno = 0;
  auto need_line = [&](const std::string& what) {
    auto l = detail::next_line(in, lineno);
    if (!l) throw ParseError(lineno + 1, 1, "unexpected end of input, expected " + what);
    return *l;
  };

  ParsedInput out;

  {
    auto [ln, text] = need_line("'algebra NAME'");
    Cursor c{text, ln};
    if (!c.eat_word("algebra")) c.fail("expected 'algebra'");
    out.algebra_name = c.name();
    c.expect_end();
  }

  std::vector<int> vertices;
  {
    auto [ln, text] = need_line("'vertices:'");
    Cursor c{text, ln};
    if (!c.eat_word("vertices:")) c.fail("expected 'vertices:'");
    while (!c.done()) vertices.push_back(c.integer());
    if (vertices.empty()) c.fail("expected at least one vertex id");
  }

  std::vector<Arrow> arrows;
  {
    auto [ln, text] = need_line("'arrows:'");
    Cursor c{text, ln};
    if (!c.eat_word("arrows:")) c.fail("expected 'arrows:'");
    if (!c.eat_word("(none)")) {
      do {
        Arrow a;
        a.name = c.name();
        c.expect(':');
        a.source = c.integer();
        c.expect('-');
        c.expect('>');
        a.target = c.integer();
        arrows.push_back(std::move(a));
      } while (c.eat(';'));
    }
    c.expect_end();
  }

  out.quiver = Quiver(std::move(vertices), std::move(arrows));

  auto parse_path = [&](Cursor& c) {
    std::vector<int> idx;
    do {
      std::string n = c.name();
      auto ai = out.quiver.arrow_index(n);
      if (!ai) throw ValidationError("relation uses unknown arrow '" + n + "'");
      idx.push_back(*ai);
    } while (c.eat('*'));
    return make_path(out.quiver, idx);
  };

  {
    auto [ln, text] = need_line("'relations:'");
    Cursor c{text, ln};
    if (!c.eat_word("relations:")) c.fail("expected 'relations:'");
    if (!c.eat_word("(none)")) {
      do {
        out.relations.push_back(parse_path(c));
      } while (c.eat(','));
    }
    c.expect_end();
  }

  auto sub = detail::next_line(in, lineno);
  if (sub) {
    auto [ln, text] = *sub;
    Cursor c{text, ln};
    if (!c.eat_word("subalgebra")) c.fail("expected 'subalgebra' or end of input");
    out.subalgebra_name = c.name();
    c.expect_end();

    auto [ln2, text2] = need_line("'arrows:'");
    Cursor c2{text2, ln2};
    if (!c2.eat_word("arrows:")) c2.fail("expected 'arrows:'");
    if (!c2.eat_word("(none)")) {
      do {
        out.subalgebra_arrows.push_back(c2.name());
      } while (c2.eat(','));
    }
    c2.expect_end();

    auto extra = detail::next_line(in, lineno);
    if (extra) throw ParseError(extra->first, 1, "unexpected input after subalgebra block");
  }

  return out;
}

inline ParsedInput parse_input(const std::string& text) {
  std::istringstream in(text);
  return parse_input(in);
}

// Builds the algebra/pair over the requested field.  Without a subalgebra
// block B is the vertex span, so relative invariants agree with absolute ones.
inline SubalgebraPair build_pair(const ParsedInput& in, const FieldSpec& field) {
  MonomialAlgebra a(in.quiver, in.relations, field);
  return SubalgebraPair::make(std::move(a), in.subalgebra_arrows);
}

}  // namespace qhh
