#pragma once

#include "agl/skew.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace agl {

class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos)
  {
  }
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

using NameResolver = std::function<std::optional<SkewElement>(const std::string&)>;

/// Grammar:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary | unary)*        juxtaposition multiplies
///   unary := '-' unary | power
///   power := atom ('^' ['-'] digits)?
///   atom  := digits | name | '(' expr ')' | '[' expr ',' expr ']'
/// A name that does not resolve on its own absorbs a directly following '+'
/// or '-' ("X2+", "A21-"). Division and negative powers require a
/// single-term divisor.
class ExprParser {
public:
  ExprParser(std::string_view text, NameResolver resolve) : text_(text), resolve_(std::move(resolve)) {}

  SkewElement parse()
  {
    SkewElement u = expr();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return u;
  }

private:
  SkewElement expr()
  {
    SkewElement u = term();
    while (true) {
      skip_space();
      if (accept('+'))
        u += term();
      else if (accept('-'))
        u -= term();
      else
        return u;
    }
  }

  SkewElement term()
  {
    SkewElement u = unary();
    while (true) {
      skip_space();
      if (accept('*')) {
        u = u * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        u = u * invert(unary(), at);
      } else if (starts_atom()) {
        u = u * unary();
      } else {
        return u;
      }
    }
  }

  SkewElement unary()
  {
    skip_space();
    if (accept('-'))
      return -unary();
    return power();
  }

  SkewElement power()
  {
    SkewElement base = atom();
    skip_space();
    if (!accept('^'))
      return base;
    skip_space();
    const std::size_t at = pos_;
    const bool negative = accept('-');
    const unsigned long e = digits();
    if (negative)
      base = invert(base, at);
    return base.pow(static_cast<unsigned>(e));
  }

  SkewElement atom()
  {
    skip_space();
    if (pos_ >= text_.size())
      throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)))
      return SkewElement(Rational(static_cast<long>(digits())));
    if (accept('(')) {
      SkewElement u = expr();
      expect(')');
      return u;
    }
    if (accept('[')) {
      SkewElement a = expr();
      expect(',');
      SkewElement b = expr();
      expect(']');
      return commutator(a, b);
    }
    if (std::isalpha(static_cast<unsigned char>(c)))
      return name();
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  SkewElement name()
  {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::string id(text_.substr(start, pos_ - start));
    if (auto u = resolve_(id))
      return *u;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      if (auto u = resolve_(id + text_[pos_])) {
        ++pos_;
        return *u;
      }
    }
    throw ParseError("unknown name '" + id + "'", start);
  }

  static SkewElement invert(const SkewElement& u, std::size_t at)
  {
    if (u.size() != 1)
      throw ParseError("can only divide by a single-term element", at);
    try {
      return u.inverse();
    } catch (const std::domain_error& e) {
      throw ParseError(std::string("cannot invert: ") + e.what(), at);
    }
  }

  unsigned long digits()
  {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      throw ParseError("expected a number", pos_);
    if (pos_ - start > 9)
      throw ParseError("number too large", start);
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  bool starts_atom()
  {
    if (pos_ >= text_.size())
      return false;
    const char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '[';
  }

  void skip_space()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool accept(char c)
  {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c)
  {
    skip_space();
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  std::string_view text_;
  NameResolver resolve_;
  std::size_t pos_ = 0;
};

inline SkewElement parse_expression(std::string_view text, const NameResolver& resolve)
{
  return ExprParser(text, resolve).parse();
}

}  // namespace agl
