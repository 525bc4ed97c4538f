#pragma once
#include <cctype>
#include <string>

#include "scissors/exact/error.hpp"
#include "scissors/exact/poly.hpp"

namespace scissors::hochschild {

// Recursive descent over  + - * / ^ ( )  with integer literals and symbols;
// juxtaposition multiplies ("2x", "3(x+1)"). Ctx supplies the value type:
//   V number(const Rational&); V symbol(const std::string&);
//   V add(V, V); V sub(V, V); V mul(V, V); V div(V, V); V neg(V); V pow(V, long)
template <class Ctx>
class ExprParser {
 public:
  using V = decltype(std::declval<Ctx&>().number(exact::Rational(0)));

  ExprParser(const std::string& s, Ctx& ctx) : s_(s), ctx_(ctx) {}

  V parse() {
    V v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  const std::string& s_;
  Ctx& ctx_;
  size_t pos_ = 0;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, "expression '" + s_ + "' at " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  V expr() {
    V v = term();
    for (;;) {
      if (eat('+')) v = ctx_.add(v, term());
      else if (eat('-')) v = ctx_.sub(v, term());
      else return v;
    }
  }
  V term() {
    V v = unary();
    for (;;) {
      if (eat('*')) v = ctx_.mul(v, unary());
      else if (eat('/')) v = ctx_.div(v, unary());
      else if (starts_atom()) v = ctx_.mul(v, power());
      else return v;
    }
  }
  V unary() {
    if (eat('-')) return ctx_.neg(unary());
    if (eat('+')) return unary();
    return power();
  }
  V power() {
    V b = atom();
    if (eat('^')) {
      skip();
      bool negative = eat('-');
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("exponent must be an integer");
      long e = std::stol(s_.substr(start, pos_ - start));
      return ctx_.pow(b, negative ? -e : e);
    }
    return b;
  }
  V atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!eat(')')) error("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ctx_.number(exact::Rational(exact::Integer(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return ctx_.symbol(s_.substr(start, pos_ - start));
    }
    error("unexpected '" + std::string(1, c) + "'");
  }
};

template <class Ctx>
auto parse_expression(const std::string& s, Ctx& ctx) {
  return ExprParser<Ctx>(s, ctx).parse();
}

}  // namespace scissors::hochschild
