#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "psb/error.hpp"
#include "psb/polynomial.hpp"

namespace psb {

namespace detail {

// Recursive-descent parser for
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := ('+'|'-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'
// Division is only defined by nonzero constants.
class PolyParser {
 public:
  PolyParser(std::string_view text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division by a non-constant or zero");
        }
        acc = acc * Rational(1 / d.constant_term());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("expected a non-negative integer exponent");
      Integer e = integer_literal();
      if (e > 100000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Integer integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Polynomial::constant(ring_, Rational(integer_literal()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < ring_->nvars(); ++i)
        if (ring_->names[i] == name) return Polynomial::variable(ring_, i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return detail::PolyParser(text, ring).parse_all();
}

/// Splits on top-level commas; an empty or blank list yields no polynomials.
inline std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view piece = text.substr(start, end - start);
    bool blank = true;
    for (char c : piece)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) {
      try {
        out.push_back(parse_polynomial(piece, ring));
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")),
                         start + e.position());
      }
    }
    start = end + 1;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == ',' && depth == 0) flush(i);
  }
  flush(text.size());
  return out;
}

/// Canonical printer: terms in descending active order, e.g. "x1^2-3/2*x1*x2+7".
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (neg) out += '-';
    else if (!first) out += '+';
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += p.ring()->names[i];
      if (t.exp[i] > 1) mono += '^' + std::to_string(t.exp[i]);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + '*';
      out += mono;
    }
  }
  return out;
}

}  // namespace psb
