#include <cctype>

#include "picmod/rep_algebra.hpp"

namespace picmod {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& expected) {
    std::string got = pos < text.size() ? std::string(1, text[pos]) : "end of input";
    throw ParseError(pos, "at position " + std::to_string(pos) + ": expected " +
                              expected + ", got '" + got + "'");
  }

  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& expected) {
    if (!accept(c)) fail(expected);
  }

  std::string peek_word() {
    skip_ws();
    std::size_t p = pos;
    std::string w;
    while (p < text.size() && std::isalpha(static_cast<unsigned char>(text[p])))
      w += text[p++];
    return w;
  }

  long long integer() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("a decimal integer");
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000000) throw ParseError(pos, "integer literal too large");
      ++pos;
    }
    return v;
  }

  RepExpr expr() {
    RepExpr e = term();
    while (accept('+')) e = RepExpr::sum(std::move(e), term());
    return e;
  }

  RepExpr term() {
    RepExpr e = atom();
    while (accept('*')) e = RepExpr::tensor(std::move(e), atom());
    return e;
  }

  RepExpr atom() {
    skip_ws();
    if (accept('(')) {
      RepExpr e = expr();
      expect(')', "')'");
      return e;
    }
    std::string w = peek_word();
    if (w == "std") {
      pos += 3;
      return RepExpr::std_rep();
    }
    if (w == "adj") {
      pos += 3;
      return RepExpr::adj();
    }
    if (w == "triv") {
      pos += 4;
      return RepExpr::triv();
    }
    if (w == "dual") {
      pos += 4;
      expect('(', "'(' after dual");
      RepExpr e = expr();
      expect(')', "')'");
      return RepExpr::dual(std::move(e));
    }
    if (w == "ext" || w == "sym") {
      bool is_ext = w == "ext";
      pos += 3;
      expect('(', "'(' after " + w);
      long long p = integer();
      expect(',', "','");
      RepExpr e = expr();
      expect(')', "')'");
      return is_ext ? RepExpr::ext(p, std::move(e)) : RepExpr::sym(p, std::move(e));
    }
    fail("one of 'std', 'adj', 'triv', 'dual', 'ext', 'sym', '('");
  }
};

}  // namespace

RepExpr parse_rep(const std::string& text) {
  Parser p(text);
  RepExpr e = p.expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError(p.pos, "at position " + std::to_string(p.pos) +
                                ": unexpected trailing input '" +
                                text.substr(p.pos) + "'");
  return e;
}

}  // namespace picmod
