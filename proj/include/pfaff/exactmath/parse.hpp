#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "pfaff/exactmath/ratfunc.hpp"

namespace pfaff {

/// Maps an identifier to a symbol; returning std::nullopt rejects it.
using SymbolResolver = std::function<std::optional<Symbol>(std::string_view)>;

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, SymbolResolver resolver) : s_(text), resolve_(std::move(resolver)) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction r = term();
    while (true) {
      if (accept('+'))
        r += term();
      else if (accept('-'))
        r -= term();
      else
        return r;
    }
  }

  RationalFunction term() {
    RationalFunction r = unary();
    while (true) {
      if (accept('*')) {
        r *= unary();
      } else if (accept('/')) {
        RationalFunction d = unary();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else {
        return r;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (accept('^')) {
      skip();
      bool negative = false;
      if (accept('-')) negative = true;
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      const unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      base = base.pow(e);
      if (negative) {
        if (base.is_zero()) fail("negative power of zero");
        base = base.inverse();
      }
    }
    return base;
  }

  RationalFunction atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
        std::size_t p = pos_ + 1;
        if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
        if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
          pos_ = p;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
      }
      return RationalFunction(Rational::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      auto sym = resolve_(name);
      if (!sym) {
        pos_ = start;
        fail("unknown symbol '" + std::string(name) + "'");
      }
      return RationalFunction(Poly::symbol(*sym));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  SymbolResolver resolve_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an expression with + - * / ^ (integer exponents), parentheses,
/// exact decimal or p/q numbers and identifiers.
inline RationalFunction parse_rational_function(std::string_view text, const SymbolResolver& resolver) {
  return detail::ExprParser(text, resolver).parse();
}

/// Variant resolving identifiers against already registered symbols.
inline RationalFunction parse_rational_function(std::string_view text) {
  return parse_rational_function(text, [](std::string_view name) -> std::optional<Symbol> {
    if (!Symbol::exists(name)) return std::nullopt;
    return Symbol::lookup(name);
  });
}

inline Poly parse_poly(std::string_view text, const SymbolResolver& resolver) {
  const RationalFunction rf = parse_rational_function(text, resolver);
  if (!rf.is_polynomial()) throw Error(ErrorCode::ParseError, "expected a polynomial: '" + std::string(text) + "'");
  return rf.as_polynomial();
}

inline Poly parse_poly(std::string_view text) {
  const RationalFunction rf = parse_rational_function(text);
  if (!rf.is_polynomial()) throw Error(ErrorCode::ParseError, "expected a polynomial: '" + std::string(text) + "'");
  return rf.as_polynomial();
}

}  // namespace pfaff
