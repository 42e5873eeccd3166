#ifndef SYMLAB_TEXT_HPP
#define SYMLAB_TEXT_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"

namespace symlab {

/// Prints a monomial as `x^2*y`; the empty monomial prints as `1`.
inline std::string format_monomial(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// Canonical text of `f`: terms descending in `order`, coefficients as
/// reduced rationals, explicit `*` everywhere. parse(format(f)) == f.
inline std::string format(const Polynomial& f, const MonomialOrder& order = MonomialOrder::grevlex()) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms_in(order)) {
    Rational c = t.coefficient;
    bool negative = c.sign() < 0;
    if (negative) c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (t.monomial.is_one()) {
      out += c.str();
    } else {
      if (!c.is_one()) out += c.str() + "*";
      out += format_monomial(t.monomial, *f.ring());
    }
  }
  return out;
}

namespace detail {

class PolynomialParser {
public:
  PolynomialParser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division only by a nonzero constant");
        acc = acc * d.constant_coefficient().inverse();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer literal");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial::constant(ring_, Rational(mpz_class(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (!ring_->has(name)) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, ring_->index_of(name));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return detail::PolynomialParser(text, ring).parse();
}

/// Parses a comma-separated list of polynomials (commas inside parentheses
/// do not split). An empty or all-blank string yields an empty list.
inline std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view piece = text.substr(start, end - start);
    bool blank = piece.find_first_not_of(" \t\r\n") == std::string_view::npos;
    if (blank) {
      if (!out.empty() || end != text.size()) throw parse_error("empty entry in polynomial list");
      return;
    }
    out.push_back(parse_polynomial(piece, ring));
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return out;
}

/// Parses "x,y,z" (or whitespace-separated) variable names into a ring.
inline RingPtr parse_ring(std::string_view text) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
      continue;
    }
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      throw parse_error("invalid character in variable list: '" + std::string(1, c) + "'");
    cur += c;
  }
  if (!cur.empty()) names.push_back(cur);
  if (names.empty()) throw parse_error("empty variable list");
  for (const auto& n : names)
    if (std::isdigit(static_cast<unsigned char>(n[0]))) throw parse_error("variable names cannot start with a digit");
  try {
    return make_ring(std::move(names));
  } catch (const precondition_violation& e) {
    throw parse_error(e.what());
  }
}

} // namespace symlab

#endif
