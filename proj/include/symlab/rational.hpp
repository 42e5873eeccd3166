#ifndef SYMLAB_RATIONAL_HPP
#define SYMLAB_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "error.hpp"

namespace symlab {

/// Exact rational number backed by GMP. Always in lowest terms with a
/// positive denominator; zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}
  Rational(int value) : value_(static_cast<long>(value)) {}
  explicit Rational(const mpz_class& value) : value_(value) {}
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw precondition_violation("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
  }

  /// Parses "a" or "a/b" with optional leading sign.
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw parse_error("empty rational literal");
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
      throw parse_error("malformed rational literal '" + s + "'");
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw parse_error("zero denominator in '" + s + "'");
    return Rational(n, d);
  }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& get() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  mpz_class floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
  }
  mpz_class ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
  }

  Rational inverse() const {
    if (is_zero()) throw precondition_violation("inverse of zero");
    return Rational(mpq_class(1) / value_);
  }

  std::string str() const { return value_.get_str(10); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw precondition_violation("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  std::size_t hash() const {
    return std::hash<std::string>{}(str());
  }

private:
  mpq_class value_;
};

} // namespace symlab

#endif
