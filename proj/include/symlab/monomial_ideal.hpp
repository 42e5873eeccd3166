#ifndef SYMLAB_MONOMIAL_IDEAL_HPP
#define SYMLAB_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ideal.hpp"

namespace symlab {

using ExponentVector = std::vector<std::uint32_t>;

/// Monomial ideal stored as the antichain of its minimal exponent vectors.
/// The empty antichain is the zero ideal; {0} is the unit ideal.
class MonomialIdeal {
public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::size_t dim) : dim_(dim) {}

  MonomialIdeal(std::size_t dim, std::vector<ExponentVector> gens) : dim_(dim) {
    for (const auto& g : gens)
      if (g.size() != dim) throw ring_mismatch("exponent vector of wrong dimension");
    gens_ = minimize(std::move(gens));
  }

  static MonomialIdeal zero(std::size_t dim) { return MonomialIdeal(dim); }
  static MonomialIdeal unit(std::size_t dim) { return MonomialIdeal(dim, {ExponentVector(dim, 0)}); }

  std::size_t dim() const { return dim_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const {
    return gens_.size() == 1 && std::all_of(gens_[0].begin(), gens_[0].end(), [](auto e) { return e == 0; });
  }

  /// x^v ∈ I, i.e. some generator divides x^v.
  bool contains(const ExponentVector& v) const {
    if (v.size() != dim_) throw ring_mismatch("exponent vector of wrong dimension");
    for (const auto& g : gens_)
      if (divides(g, v)) return true;
    return false;
  }

  /// other ⊆ *this.
  bool contains(const MonomialIdeal& other) const {
    if (other.dim_ != dim_) throw ring_mismatch("monomial ideals of different dimensions");
    for (const auto& g : other.gens_)
      if (!contains(g)) return false;
    return true;
  }

  /// A generator of `other` outside *this, if any.
  const ExponentVector* witness_outside(const MonomialIdeal& other) const {
    for (const auto& g : other.gens_)
      if (!contains(g)) return &g;
    return nullptr;
  }

  /// Largest exponent of coordinate j over the generators.
  std::uint32_t max_exponent(std::size_t j) const {
    std::uint32_t m = 0;
    for (const auto& g : gens_) m = std::max(m, g[j]);
    return m;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  static bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  }

private:
  static std::uint64_t degree(const ExponentVector& v) { return std::accumulate(v.begin(), v.end(), std::uint64_t{0}); }

  static std::vector<ExponentVector> minimize(std::vector<ExponentVector> gens) {
    std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
      auto da = degree(a), db = degree(b);
      return da != db ? da < db : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<ExponentVector> kept;
    for (auto& g : gens) {
      bool redundant = false;
      for (const auto& k : kept)
        if (divides(k, g)) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
  }

  std::size_t dim_ = 0;
  std::vector<ExponentVector> gens_;
};

namespace detail {
inline void require_same(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw ring_mismatch("monomial ideals of different dimensions");
}
} // namespace detail

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.dim(), std::move(gens));
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same(a, b);
  std::vector<ExponentVector> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) {
      ExponentVector w(a.dim());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = u[i] + v[i];
      gens.push_back(std::move(w));
    }
  return MonomialIdeal(a.dim(), std::move(gens));
}

inline MonomialIdeal power(const MonomialIdeal& a, unsigned n) {
  MonomialIdeal result = MonomialIdeal::unit(a.dim());
  MonomialIdeal base = a;
  while (n) {
    if (n & 1u) result = product(result, base);
    n >>= 1u;
    if (n) base = product(base, base);
  }
  return result;
}

/// Intersection via pairwise lcm of generators.
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same(a, b);
  std::vector<ExponentVector> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) {
      ExponentVector w(a.dim());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::max(u[i], v[i]);
      gens.push_back(std::move(w));
    }
  return MonomialIdeal(a.dim(), std::move(gens));
}

/// (I : x^v): subtract v from every generator, clamping at zero.
inline MonomialIdeal quotient(const MonomialIdeal& a, const ExponentVector& v) {
  if (v.size() != a.dim()) throw ring_mismatch("exponent vector of wrong dimension");
  std::vector<ExponentVector> gens;
  for (const auto& u : a.generators()) {
    ExponentVector w(a.dim());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = u[i] > v[i] ? u[i] - v[i] : 0;
    gens.push_back(std::move(w));
  }
  return MonomialIdeal(a.dim(), std::move(gens));
}

/// (I : J) = ⋂ over generators of J of the per-generator quotients.
inline MonomialIdeal quotient(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same(a, b);
  if (b.is_zero()) throw precondition_violation("quotient by the zero ideal");
  MonomialIdeal acc = quotient(a, b.generators().front());
  for (std::size_t k = 1; k < b.generators().size(); ++k) acc = intersect(acc, quotient(a, b.generators()[k]));
  return acc;
}

/// Image in the coordinate subring on `keep` after setting the other
/// variables to zero: generators involving a dropped variable vanish.
inline MonomialIdeal restrict_to(const MonomialIdeal& a, const std::vector<std::size_t>& keep) {
  for (auto k : keep)
    if (k >= a.dim()) throw precondition_violation("variable index out of range");
  std::vector<ExponentVector> gens;
  for (const auto& u : a.generators()) {
    std::uint64_t kept_degree = 0;
    ExponentVector w;
    for (auto k : keep) {
      w.push_back(u[k]);
      kept_degree += u[k];
    }
    std::uint64_t total = std::accumulate(u.begin(), u.end(), std::uint64_t{0});
    if (kept_degree == total) gens.push_back(std::move(w));
  }
  return MonomialIdeal(keep.size(), std::move(gens));
}

inline Ideal to_ideal(const MonomialIdeal& a, const RingPtr& ring) {
  if (ring->size() != a.dim()) throw ring_mismatch("ring arity does not match monomial ideal");
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(Polynomial::term(ring, Monomial(std::span<const std::uint32_t>(g)), Rational(1)));
  return Ideal(ring, std::move(gens));
}

/// Reads a monomial ideal off an ideal whose generators are all single terms.
inline MonomialIdeal to_monomial_ideal(const Ideal& ideal) {
  std::vector<ExponentVector> gens;
  for (const auto& g : ideal.generators()) {
    if (!g.is_monomial()) throw precondition_violation("generator " + format(g) + " is not a monomial");
    gens.push_back(g.terms().front().monomial.exponents());
  }
  return MonomialIdeal(ideal.ring()->size(), std::move(gens));
}

inline std::string format(const MonomialIdeal& a, const Ring& ring) {
  if (a.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < a.generators().size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(Monomial(std::span<const std::uint32_t>(a.generators()[i])), ring);
  }
  return out + ")";
}

} // namespace symlab

#endif
