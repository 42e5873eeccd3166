#ifndef SYMLAB_POLYNOMIAL_HPP
#define SYMLAB_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "monomial.hpp"
#include "order.hpp"
#include "rational.hpp"

namespace symlab {

/// Variable names of a polynomial ring over the rationals. The number of
/// variables is fixed at creation; extended rings are separate Ring objects.
class Ring {
public:
  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxVariables)
      throw precondition_violation("at most " + std::to_string(kMaxVariables) + " variables supported");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw precondition_violation("empty variable name");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw precondition_violation("duplicate variable '" + names_[i] + "'");
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    throw precondition_violation("unknown variable '" + name + "'");
  }

  bool has(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
  }

  /// A variable name not used by this ring, derived from `stem`.
  std::string fresh_name(const std::string& stem) const {
    std::string candidate = stem;
    for (int k = 1; has(candidate); ++k) candidate = stem + std::to_string(k);
    return candidate;
  }

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are stored without zero coefficients, sorted descending in the
/// canonical storage order (grevlex in declaration order). Values are
/// immutable once built; every operation returns a new polynomial.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({Monomial(p.ring_->size()), c});
    return p;
  }

  static Polynomial variable(RingPtr ring, std::size_t index) {
    if (index >= ring->size()) throw precondition_violation("variable index out of range");
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(ring->size(), index), Rational(1)});
    return p;
  }

  static Polynomial term(RingPtr ring, const Monomial& m, const Rational& c) {
    if (m.size() != ring->size()) throw ring_mismatch("monomial arity does not match ring");
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds a polynomial from arbitrary terms: duplicates are combined and
  /// zero coefficients dropped.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    for (const auto& t : terms)
      if (t.monomial.size() != p.ring_->size()) throw ring_mismatch("monomial arity does not match ring");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return storage_order().compare(a.monomial, b.monomial) > 0;
    });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial)
        p.terms_.back().coefficient += t.coefficient;
      else
        p.terms_.push_back(std::move(t));
      if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
    }
    return p;
  }

  static const MonomialOrder& storage_order() {
    static const MonomialOrder order = MonomialOrder::grevlex();
    return order;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  /// Coefficient of the constant term (zero if absent).
  Rational constant_coefficient() const {
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
    return Rational(0);
  }

  /// Terms sorted descending in `order`.
  std::vector<Term> terms_in(const MonomialOrder& order) const {
    if (order == storage_order()) return terms_;
    std::vector<Term> out = terms_;
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
    return out;
  }

  Term leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw precondition_violation("leading term of the zero polynomial");
    if (order == storage_order()) return terms_.front();
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
      if (order.compare(t.monomial, best->monomial) > 0) best = &t;
    return *best;
  }

  Polynomial monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    return *this * leading_term(order).coefficient.inverse();
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Rational& c) {
    Polynomial r(a.ring_);
    if (c.is_zero()) return r;
    r.terms_ = a.terms_;
    for (auto& t : r.terms_) t.coefficient *= c;
    return r;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
    return from_terms(a.ring_, std::move(prod));
  }

  /// Multiplies by the monomial `m` with coefficient `c`.
  Polynomial times_term(const Monomial& m, const Rational& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coefficient * c});
    return r;  // multiplication by a monomial preserves a multiplicative order
  }

  Polynomial pow(unsigned n) const {
    Polynomial result = constant(ring_, Rational(1));
    Polynomial base = *this;
    while (n) {
      if (n & 1u) result = result * base;
      n >>= 1u;
      if (n) base = base * base;
    }
    return result;
  }

  Polynomial partial_derivative(std::size_t var) const {
    if (!ring_ || var >= ring_->size()) throw precondition_violation("variable index out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
      auto e = t.monomial[var];
      if (e == 0) continue;
      Monomial m = t.monomial;
      m.set(var, e - 1);
      out.push_back({m, t.coefficient * Rational(static_cast<long>(e))});
    }
    return from_terms(ring_, std::move(out));
  }

  /// Maps this polynomial into `target`, sending variable i to variable
  /// image[i] of the target ring.
  Polynomial map_into(const RingPtr& target, const std::vector<std::size_t>& image) const {
    if (image.size() != ring_->size()) throw ring_mismatch("embedding map has wrong arity");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->size());
      for (std::size_t i = 0; i < image.size(); ++i)
        if (t.monomial[i]) m.set(image[i], m[image[i]] + t.monomial[i]);
      out.push_back({m, t.coefficient});
    }
    return from_terms(target, std::move(out));
  }

  /// True iff no term involves variable `var`.
  bool free_of(std::size_t var) const {
    for (const auto& t : terms_)
      if (t.monomial[var] != 0) return false;
    return true;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

  static void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) throw ring_mismatch("polynomials from different rings");
  }

private:
  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    require_same_ring(a, b);
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    const auto& ord = storage_order();
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c = i == a.terms_.size()   ? -1
              : j == b.terms_.size() ? 1
                                     : ord.compare(a.terms_[i].monomial, b.terms_[j].monomial);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        Term t = b.terms_[j++];
        if (subtract) t.coefficient = -t.coefficient;
        r.terms_.push_back(std::move(t));
      } else {
        Rational coef = subtract ? a.terms_[i].coefficient - b.terms_[j].coefficient
                                 : a.terms_[i].coefficient + b.terms_[j].coefficient;
        if (!coef.is_zero()) r.terms_.push_back({a.terms_[i].monomial, std::move(coef)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline Term leading_term(const Polynomial& f, const MonomialOrder& order) { return f.leading_term(order); }

inline Polynomial partial_derivative(const Polynomial& f, std::size_t var) { return f.partial_derivative(var); }

} // namespace symlab

#endif
