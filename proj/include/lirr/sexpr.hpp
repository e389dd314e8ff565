#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace lirr {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
        line(line_),
        col(col_) {}
};

// Minimal s-expressions: atoms and parenthesized lists; ';' comments to end
// of line. Symbols may contain primes (x') and the usual operator glyphs.
struct SExpr {
  bool is_atom = true;
  std::string text;          // when atom
  std::vector<SExpr> items;  // when list
  int line = 1, col = 1;

  const SExpr& at(std::size_t i) const {
    if (is_atom || i >= items.size())
      throw ParseError("expected argument " + std::to_string(i), line, col);
    return items[i];
  }
  std::size_t size() const { return is_atom ? 0 : items.size(); }
  bool head_is(const std::string& s) const {
    return !is_atom && !items.empty() && items[0].is_atom && items[0].text == s;
  }
};

namespace sexpr_detail {

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& s) : src(s) {}

  void advance() {
    if (pos < src.size() && src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    for (;;) {
      while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) advance();
      if (pos < src.size() && src[pos] == ';') {
        while (pos < src.size() && src[pos] != '\n') advance();
        continue;
      }
      return;
    }
  }

  bool symbol_char(char c) const {
    if (std::isalnum(static_cast<unsigned char>(c))) return true;
    return std::string("+-*/<>=_.'!?").find(c) != std::string::npos;
  }

  SExpr read() {
    skip_ws();
    if (pos >= src.size()) throw ParseError("unexpected end of input", line, col);
    int l = line, c = col;
    if (src[pos] == '(') {
      advance();
      SExpr e;
      e.is_atom = false;
      e.line = l;
      e.col = c;
      for (;;) {
        skip_ws();
        if (pos >= src.size()) throw ParseError("unterminated list", l, c);
        if (src[pos] == ')') {
          advance();
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (src[pos] == ')') throw ParseError("unexpected ')'", l, c);
    std::string text;
    while (pos < src.size() && symbol_char(src[pos])) {
      text += src[pos];
      advance();
    }
    if (text.empty()) throw ParseError(std::string("unexpected character '") + src[pos] + "'", l, c);
    SExpr e;
    e.is_atom = true;
    e.text = std::move(text);
    e.line = l;
    e.col = c;
    return e;
  }
};

}  // namespace sexpr_detail

inline std::vector<SExpr> parse_sexprs(const std::string& src) {
  sexpr_detail::Lexer lex(src);
  std::vector<SExpr> out;
  for (;;) {
    lex.skip_ws();
    if (lex.pos >= src.size()) return out;
    out.push_back(lex.read());
  }
}

}  // namespace lirr
