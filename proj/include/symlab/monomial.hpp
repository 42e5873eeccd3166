#ifndef SYMLAB_MONOMIAL_HPP
#define SYMLAB_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace symlab {

/// Maximum number of ring variables. Extended rings (tag and Rabinowitsch
/// variables) count against this limit.
inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector of a monic monomial. The length is fixed by the ring the
/// monomial belongs to; the total degree is cached.
class Monomial {
public:
  using exponent_type = std::uint32_t;

  Monomial() = default;

  explicit Monomial(std::size_t variables) : size_(check_size(variables)) {}

  Monomial(std::initializer_list<exponent_type> exponents)
      : Monomial(std::span<const exponent_type>(exponents.begin(), exponents.size())) {}

  explicit Monomial(std::span<const exponent_type> exponents)
      : size_(check_size(exponents.size())) {
    for (std::size_t i = 0; i < size_; ++i) {
      exps_[i] = exponents[i];
      degree_ += exponents[i];
    }
  }

  static Monomial variable(std::size_t variables, std::size_t index, exponent_type power = 1) {
    Monomial m(variables);
    m.exps_[index] = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const { return size_; }
  std::uint64_t degree() const { return degree_; }
  exponent_type operator[](std::size_t i) const { return exps_[i]; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, exponent_type e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
  }

  std::vector<exponent_type> exponents() const {
    return std::vector<exponent_type>(exps_.begin(), exps_.begin() + size_);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    a.require_same(b);
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// True iff this monomial divides `other` (componentwise <=).
  bool divides(const Monomial& other) const {
    require_same(other);
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < size_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  /// other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const {
    Monomial r(size_);
    for (std::size_t i = 0; i < size_; ++i) r.exps_[i] = other.exps_[i] - exps_[i];
    r.degree_ = other.degree_ - degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.require_same(b);
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    a.require_same(b);
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) {
      r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size_; ++i)
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.size_ != b.size_ || a.degree_ != b.degree_) return false;
    return std::equal(a.exps_.begin(), a.exps_.begin() + a.size_, b.exps_.begin());
  }

  std::size_t hash() const {
    std::size_t h = size_;
    for (std::size_t i = 0; i < size_; ++i) h = h * 1000003u ^ exps_[i];
    return h;
  }

private:
  static std::uint8_t check_size(std::size_t n) {
    if (n > kMaxVariables)
      throw precondition_violation("at most " + std::to_string(kMaxVariables) + " variables supported");
    return static_cast<std::uint8_t>(n);
  }

  void require_same(const Monomial& other) const {
    if (size_ != other.size_) throw ring_mismatch("monomials from rings of different arity");
  }

  std::array<exponent_type, kMaxVariables> exps_{};
  std::uint64_t degree_ = 0;
  std::uint8_t size_ = 0;
};

/// Product, divisibility (a | b) and lcm of two monomials of one ring.
struct MonomialRelations {
  Monomial product;
  bool divides;
  Monomial lcm;
};

inline MonomialRelations monomial_ops(const Monomial& a, const Monomial& b) {
  return {a * b, a.divides(b), lcm(a, b)};
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace symlab

#endif
