#pragma once

// Recursive-descent parser shared by field elements and Laurent polynomials.
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := ('-'|'+') factor | primary ('^' ['-'|'+'] int)?
//   primary := int | ident [ '(' ... ')' ] | '(' expr ')'
// Identifiers are resolved by the caller-supplied Hooks.

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "repvar/errors.hpp"

namespace repvar::detail {

template <class V, class Hooks>
class ExprParser {
 public:
  ExprParser(std::string_view text, Hooks& hooks) : s_(text), hooks_(hooks) {}

  V parse_all() {
    V v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

  V expr() {
    skip_ws();
    bool neg = false;
    if (peek('+') || peek('-')) neg = s_[pos_++] == '-';
    V v = term();
    if (neg) v = -v;
    for (;;) {
      skip_ws();
      if (peek('+')) {
        ++pos_;
        v = v + term();
      } else if (peek('-')) {
        ++pos_;
        v = v - term();
      } else {
        return v;
      }
    }
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (peek('+') || peek('-')) neg = s_[pos_++] == '-';
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  void expect(char c) {
    skip_ws();
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  std::size_t position() const { return pos_; }

 private:
  V term() {
    V v = factor();
    for (;;) {
      skip_ws();
      if (peek('*')) {
        ++pos_;
        v = v * factor();
      } else if (peek('/')) {
        ++pos_;
        std::size_t at = pos_;
        V d = factor();
        try {
          v = v / d;
        } catch (const DivisionByZero&) {
          throw DivisionByZero("at offset " + std::to_string(at));
        }
      } else {
        return v;
      }
    }
  }

  V factor() {
    skip_ws();
    if (peek('-')) {
      ++pos_;
      return -factor();
    }
    if (peek('+')) {
      ++pos_;
      return factor();
    }
    V base = primary();
    skip_ws();
    if (peek('^')) {
      ++pos_;
      long e = integer();
      return hooks_.power(base, e, *this);
    }
    return base;
  }

  V primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return hooks_.integer(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      return hooks_.ident(name, start, *this);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  std::string_view s_;
  std::size_t pos_ = 0;
  Hooks& hooks_;
};

}  // namespace repvar::detail
