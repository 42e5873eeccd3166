#ifndef SYMLAB_IDEAL_OPS_HPP
#define SYMLAB_IDEAL_OPS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ideal.hpp"

namespace symlab {

namespace detail {

inline void require_same(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw ring_mismatch("ideals from different rings");
}

// Above this many generators the GB-based redundancy pass is skipped.
inline constexpr std::size_t kMinimizeLimit = 16;

} // namespace detail

/// Best-effort generator minimization: drops zero and repeated (up to a
/// scalar) generators, removes divisible generators of monomial ideals, and
/// for small non-monomial lists removes members of the ideal of the rest.
inline Ideal minimize_generators(const Ideal& ideal) {
  const auto& order = Polynomial::storage_order();
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    Polynomial m = g.monic(order);
    if (std::find(gens.begin(), gens.end(), m) == gens.end()) gens.push_back(std::move(m));
  }
  if (ideal.is_monomial()) {
    std::vector<Polynomial> kept;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Monomial& mi = gens[i].terms().front().monomial;
      bool redundant = false;
      for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
        if (i == j) continue;
        const Monomial& mj = gens[j].terms().front().monomial;
        if (mj.divides(mi) && !(mj == mi)) redundant = true;
      }
      if (!redundant) kept.push_back(gens[i]);
    }
    return Ideal(ideal.ring(), std::move(kept));
  }
  if (gens.size() <= detail::kMinimizeLimit) {
    for (std::size_t i = gens.size(); i-- > 0 && gens.size() > 1;) {
      std::vector<Polynomial> rest;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != i) rest.push_back(gens[j]);
      if (is_member(gens[i], Ideal(ideal.ring(), rest))) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return Ideal(ideal.ring(), std::move(gens));
}

inline Ideal sum(const Ideal& a, const Ideal& b) {
  detail::require_same(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimize_generators(Ideal(a.ring(), std::move(gens)));
}

inline Ideal product(const Ideal& a, const Ideal& b) {
  detail::require_same(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return minimize_generators(Ideal(a.ring(), std::move(gens)));
}

/// I^n; I^0 is the unit ideal.
inline Ideal power(const Ideal& ideal, unsigned n) {
  Ideal result = Ideal::unit(ideal.ring());
  for (unsigned k = 0; k < n; ++k) result = k == 0 ? minimize_generators(ideal) : product(result, ideal);
  return result;
}

/// I ∩ J via a fresh tag variable t: (t·I + (1−t)·J) ∩ k[x], computed with a
/// block order that puts t in the leading block.
inline Ideal intersect(const Ideal& a, const Ideal& b, const GroebnerOptions& options = {}) {
  detail::require_same(a, b);
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);

  std::vector<std::string> names{ring->fresh_name("t")};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  RingPtr ext = make_ring(names);
  std::vector<std::size_t> up(ring->size());
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = i + 1;

  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, Rational(1)) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.map_into(ext, up));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.map_into(ext, up));

  auto basis = buchberger(gens, MonomialOrder::block(1), options);

  std::vector<std::size_t> down(ext->size());
  for (std::size_t i = 1; i < down.size(); ++i) down[i] = i - 1;
  std::vector<Polynomial> kept;
  for (const auto& g : basis)
    if (g.free_of(0)) kept.push_back(g.map_into(ring, down));
  Ideal result(ring, kept);
  // The surviving elements form the reduced grevlex basis of the intersection.
  result.seed_basis(MonomialOrder::grevlex(), std::move(kept));
  return result;
}

inline Ideal intersect(const std::vector<Ideal>& ideals, const GroebnerOptions& options = {}) {
  if (ideals.empty()) throw precondition_violation("intersection of an empty family");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i], options);
  return acc;
}

/// I ∩ k[remaining variables], returned as an ideal of the original ring.
inline Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop, const GroebnerOptions& options = {}) {
  const RingPtr& ring = ideal.ring();
  std::set<std::size_t> dropped(drop.begin(), drop.end());
  for (auto v : dropped)
    if (v >= ring->size()) throw precondition_violation("variable index out of range");
  if (dropped.empty()) return ideal;
  if (dropped.size() == ring->size()) throw precondition_violation("cannot eliminate every variable");

  // New ring: dropped variables first, then the kept ones, each in original order.
  std::vector<std::size_t> image(ring->size()), preimage;
  std::vector<std::string> names;
  for (auto v : dropped) {
    image[v] = names.size();
    names.push_back(ring->name(v));
    preimage.push_back(v);
  }
  for (std::size_t v = 0; v < ring->size(); ++v)
    if (!dropped.count(v)) {
      image[v] = names.size();
      names.push_back(ring->name(v));
      preimage.push_back(v);
    }
  RingPtr ext = make_ring(names);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.map_into(ext, image));
  auto basis = buchberger(gens, MonomialOrder::block(dropped.size()), options);
  std::vector<Polynomial> kept;
  for (const auto& g : basis) {
    bool free = true;
    for (std::size_t v = 0; v < dropped.size() && free; ++v) free = g.free_of(v);
    if (free) kept.push_back(g.map_into(ring, preimage));
  }
  return Ideal(ring, std::move(kept));
}

inline Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop_names,
                       const GroebnerOptions& options = {}) {
  std::vector<std::size_t> drop;
  for (const auto& n : drop_names) drop.push_back(ideal.ring()->index_of(n));
  return eliminate(ideal, drop, options);
}

/// f / g when g divides f exactly, otherwise nullopt.
inline std::optional<Polynomial> divide_exactly(const Polynomial& f, const Polynomial& g) {
  Polynomial::require_same_ring(f, g);
  if (g.is_zero()) throw precondition_violation("division by the zero polynomial");
  const auto& order = Polynomial::storage_order();
  Term lg = g.leading_term(order);
  Polynomial q(f.ring()), r = f;
  while (!r.is_zero()) {
    Term lr = r.leading_term(order);
    if (!lg.monomial.divides(lr.monomial)) return std::nullopt;
    Monomial m = lg.monomial.quotient_of(lr.monomial);
    Rational c = lr.coefficient / lg.coefficient;
    q = q + Polynomial::term(f.ring(), m, c);
    r = r - g.times_term(m, c);
  }
  return q;
}

/// (I : g) = (I ∩ (g)) / g.
inline Ideal quotient(const Ideal& ideal, const Polynomial& g, const GroebnerOptions& options = {}) {
  if (!same_ring(ideal.ring(), g.ring())) throw ring_mismatch("ideal and element from different rings");
  if (g.is_zero()) throw precondition_violation("quotient by the zero ideal");
  if (g.is_constant() || ideal.is_zero()) return ideal;
  Ideal meet = intersect(ideal, Ideal(ideal.ring(), {g}), options);
  std::vector<Polynomial> gens;
  for (const auto& h : meet.groebner_basis()) {
    auto q = divide_exactly(h, g);
    if (!q) throw error("internal: intersection element not divisible by the quotient element");
    gens.push_back(*q);
  }
  return Ideal(ideal.ring(), std::move(gens));
}

/// (I : J) = ⋂_g (I : g) over the generators g of J.
inline Ideal quotient(const Ideal& ideal, const Ideal& by, const GroebnerOptions& options = {}) {
  detail::require_same(ideal, by);
  if (by.is_zero()) throw precondition_violation("quotient by the zero ideal");
  std::vector<Ideal> parts;
  for (const auto& g : by.generators()) parts.push_back(quotient(ideal, g, options));
  return intersect(parts, options);
}

struct Saturation {
  Ideal ideal;
  unsigned exponent;  ///< least k with (I : J^k) = (I : J^{k+1})
};

/// (I : J^∞) by iterated quotients, together with the stabilization exponent.
inline Saturation saturate(const Ideal& ideal, const Ideal& by, const GroebnerOptions& options = {},
                           unsigned max_rounds = 1000) {
  detail::require_same(ideal, by);
  Ideal current = ideal;
  for (unsigned k = 0; k <= max_rounds; ++k) {
    Ideal next = quotient(current, by, options);
    if (equal(next, current)) return {current, k};
    current = next;
  }
  throw budget_exhausted("saturation did not stabilize within " + std::to_string(max_rounds) + " quotients");
}

/// f ∈ √I, tested as 1 ∈ I + (1 − w·f) for a fresh variable w.
inline bool radical_member(const Polynomial& f, const Ideal& ideal, const GroebnerOptions& options = {}) {
  if (!same_ring(f.ring(), ideal.ring())) throw ring_mismatch("element and ideal from different rings");
  if (f.is_zero()) return true;
  const RingPtr& ring = ideal.ring();
  auto names = ring->names();
  names.push_back(ring->fresh_name("w"));
  RingPtr ext = make_ring(names);
  std::vector<std::size_t> image(ring->size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.map_into(ext, image));
  Polynomial w = Polynomial::variable(ext, ring->size());
  gens.push_back(Polynomial::constant(ext, Rational(1)) - w * f.map_into(ext, image));
  auto basis = buchberger(gens, MonomialOrder::grevlex(), options);
  return basis.size() == 1 && basis.front().is_constant();
}

/// Number of standard monomials of I (the k-dimension of k[x]/I), or
/// nullopt when the staircase is unbounded.
inline std::optional<std::uint64_t> colength(const Ideal& ideal) {
  const std::size_t n = ideal.ring()->size();
  if (ideal.is_zero()) return n == 0 ? std::optional<std::uint64_t>(1) : std::nullopt;
  const auto& basis = ideal.groebner_basis(ideal.working_order());
  std::vector<Monomial> leads;
  for (const auto& g : basis) leads.push_back(g.leading_term(ideal.working_order()).monomial);
  for (const auto& m : leads)
    if (m.is_one()) return 0;
  std::vector<std::uint32_t> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& m : leads)
      if (m.degree() == m[v] && (bound[v] == 0 || m[v] < bound[v])) bound[v] = m[v];
    if (bound[v] == 0) return std::nullopt;
  }
  std::uint64_t count = 0;
  Monomial cur(n);
  // Depth-first walk of the box; prune once a monomial lies in the leading ideal.
  auto in_leading = [&](const Monomial& m) {
    for (const auto& l : leads)
      if (l.divides(m)) return true;
    return false;
  };
  auto walk = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (std::uint32_t e = 0; e < bound[v]; ++e) {
      cur.set(v, e);
      if (in_leading(cur)) break;
      self(self, v + 1);
    }
    cur.set(v, 0);
  };
  walk(walk, 0);
  return count;
}

} // namespace symlab

#endif
