#ifndef SYMLAB_VALUATION_HPP
#define SYMLAB_VALUATION_HPP

#include <random>
#include <string>
#include <vector>

#include "graded_family.hpp"

namespace symlab {

/// Coefficients of p_k(t) = Σ_{i=1}^k t^i / i!, indexed by degree.
inline std::vector<Rational> taylor_coefficients(unsigned k) {
  std::vector<Rational> c(k + 1);
  mpz_class fact = 1;
  for (unsigned i = 1; i <= k; ++i) {
    fact *= i;
    c[i] = Rational(mpz_class(1), fact);
  }
  return c;
}

/// p_k(x) as a polynomial in variable `var` of `ring`.
inline Polynomial taylor_polynomial(const RingPtr& ring, std::size_t var, unsigned k) {
  auto c = taylor_coefficients(k);
  std::vector<Term> terms;
  for (unsigned i = 1; i <= k; ++i) terms.push_back({Monomial::variable(ring->size(), var, i), c[i]});
  return Polynomial::from_terms(ring, std::move(terms));
}

/// o_k = (x^k, y − p_k(x)) in Q[x, y].
inline GradedFamily family_valuation(RingPtr ring = make_ring({"x", "y"})) {
  if (ring->size() != 2) throw ring_mismatch("the valuation family lives in two variables");
  GradedFamily f("valuation", ring);
  f.with_ideals([ring](unsigned k) {
    // Under lex with y > x the generators are already a reduced basis.
    const MonomialOrder order = MonomialOrder::lex().with_priority({1, 0});
    Polynomial xk = Polynomial::variable(ring, 0).pow(k);
    Polynomial curve = Polynomial::variable(ring, 1) - taylor_polynomial(ring, 0, k);
    Ideal o(ring, {xk, curve});
    o.seed_basis(order, {curve, xk});
    return o.with_working_order(order);
  });
  return f;
}

/// ord_t f(t, p(t)) when it is below the truncation order N, otherwise
/// the sentinel "at least N".
struct ValuationOrder {
  std::uint64_t value = 0;
  bool at_least = false;

  /// v(f) ≥ k, decided exactly when k ≤ N.
  bool reaches(std::uint64_t k) const {
    if (!at_least) return value >= k;
    if (k > value) throw precondition_violation("truncation order too small to decide v(f) >= " + std::to_string(k));
    return true;
  }

  std::string str() const { return at_least ? ">= " + std::to_string(value) : std::to_string(value); }
  friend bool operator==(const ValuationOrder&, const ValuationOrder&) = default;
};

/// Substitutes x ↦ t, y ↦ p(t) = e^t − 1 modulo t^N.
inline ValuationOrder valuation_order(const Polynomial& f, unsigned n) {
  if (f.ring()->size() != 2) throw ring_mismatch("valuation order needs a polynomial in two variables");
  if (f.is_zero()) throw precondition_violation("valuation of the zero polynomial");
  const auto p = taylor_coefficients(n);
  std::vector<std::vector<Rational>> p_pow{std::vector<Rational>(n + 1)};
  p_pow[0][0] = Rational(1);
  auto p_power = [&](std::size_t b) -> const std::vector<Rational>& {
    while (p_pow.size() <= b) {
      const auto& prev = p_pow.back();
      std::vector<Rational> next(n + 1);
      for (unsigned i = 0; i <= n; ++i)
        if (!prev[i].is_zero())
          for (unsigned j = 1; i + j <= n; ++j) next[i + j] += prev[i] * p[j];
      p_pow.push_back(std::move(next));
    }
    return p_pow[b];
  };
  std::vector<Rational> series(n + 1);
  for (const auto& t : f.terms()) {
    const unsigned a = t.monomial[0];
    const auto& pb = p_power(t.monomial[1]);
    for (unsigned i = 0; i + a <= n; ++i)
      if (!pb[i].is_zero()) series[i + a] += t.coefficient * pb[i];
  }
  for (unsigned i = 0; i < n; ++i)
    if (!series[i].is_zero()) return {i, false};
  return {n, true};
}

/// Truncation order used when the question is "v(f) ≥ k?".
inline unsigned default_truncation(const Polynomial& f, unsigned k) {
  return k + static_cast<unsigned>(f.total_degree()) + 4;
}

namespace detail {

inline Polynomial random_bivariate(const RingPtr& ring, std::mt19937_64& rng, unsigned max_degree, unsigned min_x = 0) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Term> terms;
  for (unsigned a = min_x; a <= max_degree; ++a)
    for (unsigned b = 0; a + b <= max_degree; ++b) {
      if (rng() % 3 != 0) continue;
      int c = coeff(rng);
      if (c == 0) continue;
      Monomial m = Monomial::variable(2, 0, a) * Monomial::variable(2, 1, b);
      terms.push_back({m, Rational(c)});
    }
  return Polynomial::from_terms(ring, std::move(terms));
}

} // namespace detail

/// v(f) ≥ k ⇔ f ∈ o_k on random f of degree ≤ 4 with coefficients in
/// [−5, 5]. A third of the samples are plain random; the rest are built
/// as c·(y − p_4(x)) + x^j·r so that high valuations actually occur.
inline Report valuation_membership_equivalence(unsigned k_max, unsigned samples, std::uint64_t seed = 7) {
  if (k_max == 0) throw precondition_violation("k_max must be at least 1");
  Stopwatch clock;
  Report report;
  report.claim = "v(f) >= k iff f ∈ (x^k, y - p_k(x))";
  report.anchor = "valuation-family-membership";
  report.parameters = {{"k_max", std::to_string(k_max)}, {"samples", std::to_string(samples)},
                       {"seed", std::to_string(seed)}};
  GradedFamily family = family_valuation();
  const RingPtr ring = family.ring();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (unsigned s = 0; s < samples; ++s) {
    Polynomial f = Polynomial::constant(ring, Rational(0));
    if (s % 3 == 0) {
      f = detail::random_bivariate(ring, rng, 4);
    } else {
      unsigned j = static_cast<unsigned>(rng() % 5);
      Polynomial curve = Polynomial::variable(ring, 1) - taylor_polynomial(ring, 0, 4);
      f = curve * Rational(coeff(rng)) + detail::random_bivariate(ring, rng, 4, j);
    }
    if (f.is_zero()) f = Polynomial::constant(ring, Rational(1));
    for (unsigned k = 1; k <= k_max; ++k) {
      bool by_value = valuation_order(f, default_truncation(f, k)).reaches(k);
      bool by_ideal = family.member(f, k);
      if (by_value != by_ideal) {
        report.add({"sample " + std::to_string(s) + ", k = " + std::to_string(k), false, format(f)});
        report.wall_time_ms = clock.elapsed_ms();
        return report;
      }
    }
  }
  report.add({"all samples agree", true, std::nullopt});
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

} // namespace symlab

#endif
