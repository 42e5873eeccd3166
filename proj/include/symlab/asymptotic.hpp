#ifndef SYMLAB_ASYMPTOTIC_HPP
#define SYMLAB_ASYMPTOTIC_HPP

#include <string>
#include <vector>

#include "graded_family.hpp"
#include "newton.hpp"

namespace symlab {

struct AsymptoticOptions {
  /// Largest p tried by doubling; exceeding it raises stabilization_failure.
  unsigned max_p = 64;
};

struct AsymptoticMultiplier {
  MonomialIdeal ideal;
  /// p at which the chain was taken to have stabilized.
  unsigned p = 1;
  /// Every p for which J((c/p)·a_{pℓ}) was computed, in order.
  std::vector<unsigned> sampled;
};

namespace detail {

inline void require_monomial(const GradedFamily& family) {
  if (!family.capabilities().monomial)
    throw precondition_violation("family '" + family.kind() + "' has no monomial representation");
}

inline void require_positive(const Rational& c) {
  if (c.sign() <= 0) throw precondition_violation("coefficient must be positive, got " + c.str());
}

inline MonomialIdeal chain_term(const GradedFamily& family, const Rational& c, unsigned ell, unsigned p) {
  return multiplier_ideal({c / Rational(static_cast<long>(p)), family.monomial_at(p * ell)});
}

inline std::string exponent_text(const ExponentVector& v, const RingPtr& ring) {
  return format_monomial(Monomial(std::span<const std::uint32_t>(v)), *ring);
}

/// outer ⊇ inner as a report check with a generator witness.
inline Check monomial_check(const std::string& label, const MonomialIdeal& outer, const MonomialIdeal& inner,
                            const RingPtr& ring) {
  if (const auto* w = outer.witness_outside(inner)) return {label, false, exponent_text(*w, ring)};
  return {label, true, std::nullopt};
}

inline std::string ratio_label(const Rational& c, unsigned p) {
  return (c / Rational(static_cast<long>(p))).str();
}

} // namespace detail

/// J(c·‖a_ℓ‖): J((c/p)·a_{pℓ}) over p = 1, 2, 4, … until two consecutive
/// doublings agree. The candidate is then tested against p' = 3p, which is
/// not reached by doubling; the chain inclusion makes J at 3p contain the
/// candidate, so agreement there is the certificate. On disagreement the
/// doubling resumes, and the final value must contain every computed term.
inline AsymptoticMultiplier asymptotic_multiplier_ideal(const GradedFamily& family, const Rational& c, unsigned ell,
                                                        const AsymptoticOptions& options = {}) {
  detail::require_monomial(family);
  detail::require_positive(c);
  if (ell == 0) throw precondition_violation("index l must be at least 1");
  AsymptoticMultiplier out;
  std::vector<MonomialIdeal> seen;
  auto term = [&](unsigned p) {
    MonomialIdeal j = detail::chain_term(family, c, ell, p);
    out.sampled.push_back(p);
    seen.push_back(j);
    return j;
  };
  MonomialIdeal prev = term(1);
  for (unsigned p = 2; p <= options.max_p; p *= 2) {
    MonomialIdeal cur = term(p);
    bool stable = cur == prev;
    prev = cur;
    if (!stable) continue;
    MonomialIdeal cert = term(3 * p);
    if (!(cert == cur)) continue;
    bool maximal = true;
    for (const auto& j : seen) maximal = maximal && cur.contains(j);
    if (!maximal) continue;
    out.ideal = cur;
    out.p = p;
    return out;
  }
  throw stabilization_failure("J((c/p)·a_(pl)) did not stabilize for p <= " + std::to_string(options.max_p));
}

/// J((c/p)·a_{pℓ}) ⊆ J((c/pn)·a_{pnℓ}).
inline Report verify_chain_lemma(const GradedFamily& family, const Rational& c, unsigned ell, unsigned p, unsigned n) {
  detail::require_monomial(family);
  detail::require_positive(c);
  if (ell == 0 || p == 0 || n == 0) throw precondition_violation("l, p and n must be positive");
  Stopwatch clock;
  Report report;
  report.claim = "J((c/p)·a_(pl)) ⊆ J((c/pn)·a_(pnl))";
  report.anchor = "asymptotic-chain-inclusion";
  report.parameters = {{"family", family.kind()}, {"c", c.str()}, {"l", std::to_string(ell)},
                       {"p", std::to_string(p)},   {"n", std::to_string(n)}};
  MonomialIdeal small = detail::chain_term(family, c, ell, p);
  MonomialIdeal large = detail::chain_term(family, c, ell, p * n);
  report.add(detail::monomial_check("J(" + detail::ratio_label(c, p) + "·a_" + std::to_string(p * ell) + ") ⊆ J(" +
                                        detail::ratio_label(c, p * n) + "·a_" + std::to_string(p * n * ell) + ")",
                                    large, small, family.ring()));
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

/// J(a^c·b^d) ⊆ J(c·a)·J(d·b), together with J(cm·a) ⊆ J(c·a)^m and
/// J(dm·b) ⊆ J(d·b)^m for m = 1..m_max.
inline Report verify_subadditivity(const MonomialIdeal& a, const MonomialIdeal& b, const Rational& c,
                                   const Rational& d, const RingPtr& ring, unsigned m_max = 3) {
  detail::require_positive(c);
  detail::require_positive(d);
  if (a.dim() != b.dim() || ring->size() != a.dim()) throw ring_mismatch("monomial ideals of different dimensions");
  Stopwatch clock;
  Report report;
  report.claim = "J(a^c·b^d) ⊆ J(c·a)·J(d·b) and J(cm·a) ⊆ J(c·a)^m";
  report.anchor = "multiplier-subadditivity";
  report.parameters = {{"a", format(a, *ring)}, {"b", format(b, *ring)}, {"c", c.str()}, {"d", d.str()},
                       {"m_max", std::to_string(m_max)}};
  MonomialIdeal ja = multiplier_ideal({c, a});
  MonomialIdeal jb = multiplier_ideal({d, b});
  MonomialIdeal mixed = a.is_zero() || b.is_zero() ? MonomialIdeal::zero(a.dim())
                                                   : mixed_multiplier_ideal({{c, a}, {d, b}});
  report.add(detail::monomial_check("J(a^c·b^d) ⊆ J(c·a)·J(d·b)", product(ja, jb), mixed, ring));
  for (unsigned m = 1; m <= m_max; ++m) {
    Rational rm(static_cast<long>(m));
    report.add(detail::monomial_check("J(" + (c * rm).str() + "·a) ⊆ J(" + c.str() + "·a)^" + std::to_string(m),
                                      power(ja, m), multiplier_ideal({c * rm, a}), ring));
    report.add(detail::monomial_check("J(" + (d * rm).str() + "·b) ⊆ J(" + d.str() + "·b)^" + std::to_string(m),
                                      power(jb, m), multiplier_ideal({d * rm, b}), ring));
  }
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

/// (i) a_ℓ ⊆ J(‖a_ℓ‖) and (ii) J(‖a_{mℓ}‖) ⊆ J(‖a_ℓ‖)^m for m = 1..m_max.
inline Report verify_prop_1_5(const GradedFamily& family, unsigned ell, unsigned m_max,
                              const AsymptoticOptions& options = {}) {
  detail::require_monomial(family);
  if (ell == 0) throw precondition_violation("index l must be at least 1");
  Stopwatch clock;
  Report report;
  report.claim = "a_l ⊆ J(||a_l||) and J(||a_(ml)||) ⊆ J(||a_l||)^m";
  report.anchor = "asymptotic-multiplier-properties";
  report.parameters = {{"family", family.kind()}, {"l", std::to_string(ell)}, {"m_max", std::to_string(m_max)}};
  const Rational one(1);
  MonomialIdeal base = asymptotic_multiplier_ideal(family, one, ell, options).ideal;
  const std::string l = std::to_string(ell);
  report.add(detail::monomial_check("a_" + l + " ⊆ J(||a_" + l + "||)", base, family.monomial_at(ell), family.ring()));
  for (unsigned m = 1; m <= m_max; ++m) {
    MonomialIdeal big = asymptotic_multiplier_ideal(family, one, m * ell, options).ideal;
    report.add(detail::monomial_check("J(||a_" + std::to_string(m * ell) + "||) ⊆ J(||a_" + l + "||)^" +
                                          std::to_string(m),
                                      power(base, m), big, family.ring()));
  }
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

/// Hypothesis J(‖a_ℓ‖) ⊆ b on the monomial side; conclusion a_{mℓ} ⊆ b^m
/// for m = 1..m_max re-derived from the family's polynomial generators by
/// Gröbner containment, so the two halves share no intermediate results.
/// A failed hypothesis yields Verdict::hypothesis_failed and no conclusion
/// checks.
inline Report verify_theorem_B(const GradedFamily& family, const MonomialIdeal& b, unsigned ell, unsigned m_max,
                               const AsymptoticOptions& options = {}) {
  detail::require_monomial(family);
  if (ell == 0) throw precondition_violation("index l must be at least 1");
  if (b.dim() != family.ring()->size()) throw ring_mismatch("target ideal of wrong dimension");
  Stopwatch clock;
  Report report;
  report.claim = "J(||a_l||) ⊆ b implies a_(ml) ⊆ b^m";
  report.anchor = "graded-family-uniform-containment";
  report.parameters = {{"family", family.kind()}, {"b", format(b, *family.ring())}, {"l", std::to_string(ell)},
                       {"m_max", std::to_string(m_max)}};
  const std::string l = std::to_string(ell);
  auto am = asymptotic_multiplier_ideal(family, Rational(1), ell, options);
  report.parameters.emplace_back("stabilized_p", std::to_string(am.p));
  Check hyp = detail::monomial_check("hypothesis J(||a_" + l + "||) ⊆ b", b, am.ideal, family.ring());
  if (!hyp.passed) {
    report.verdict = Verdict::hypothesis_failed;
    report.witness = hyp.witness;
    report.checks.push_back(std::move(hyp));
    report.wall_time_ms = clock.elapsed_ms();
    return report;
  }
  report.add(std::move(hyp));
  Ideal bp = to_ideal(b, family.ring());
  for (unsigned m = 1; m <= m_max; ++m)
    report.add(detail::containment_check("a_" + std::to_string(m * ell) + " ⊆ b^" + std::to_string(m), power(bp, m),
                                         family.ideal_at(m * ell)));
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

/// J(Y, c·a_Y) ⊆ J(X, c·a)·O_Y for the coordinate subspace Y on `keep`.
inline Report verify_restriction(const MonomialIdeal& a, const Rational& c, const std::vector<std::size_t>& keep,
                                 const RingPtr& ring) {
  detail::require_positive(c);
  if (ring->size() != a.dim()) throw ring_mismatch("ring arity does not match monomial ideal");
  MonomialIdeal ay = restrict_to(a, keep);
  if (ay.is_zero()) throw precondition_violation("the zero locus of the ideal contains the subspace");
  Stopwatch clock;
  std::vector<std::string> names;
  for (auto k : keep) names.push_back(ring->names()[k]);
  RingPtr sub = make_ring(names);
  Report report;
  report.claim = "J(Y, c·a_Y) ⊆ J(X, c·a)·O_Y";
  report.anchor = "multiplier-restriction";
  std::string ys;
  for (std::size_t i = 0; i < names.size(); ++i) ys += (i ? "," : "") + names[i];
  report.parameters = {{"a", format(a, *ring)}, {"c", c.str()}, {"keep", ys}};
  MonomialIdeal lhs = multiplier_ideal({c, ay});
  MonomialIdeal rhs = restrict_to(multiplier_ideal({c, a}), keep);
  report.add(detail::monomial_check("J(Y, c·a_Y) ⊆ J(X, c·a)·O_Y", rhs, lhs, sub));
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

} // namespace symlab

#endif
