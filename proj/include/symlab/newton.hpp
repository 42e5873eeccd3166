#ifndef SYMLAB_NEWTON_HPP
#define SYMLAB_NEWTON_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "monomial_ideal.hpp"
#include "simplex.hpp"

namespace symlab {

/// Newton polyhedron of a monomial ideal: conv(generators) + the
/// nonnegative orthant. Only the V-description is stored.
struct NewtonPolyhedron {
  MonomialIdeal ideal;

  std::size_t dim() const { return ideal.dim(); }
  const std::vector<ExponentVector>& generators() const { return ideal.generators(); }
};

/// The summand c·Newt(a) of a (mixed) multiplier computation.
struct ScaledIdeal {
  Rational scale;
  MonomialIdeal ideal;
};

/// The pair (c, a) of J(c·a); c must be positive.
struct MultiplierQuery {
  Rational c;
  MonomialIdeal ideal;

  void validate() const {
    if (c.sign() <= 0) throw precondition_violation("multiplier coefficient must be positive, got " + c.str());
  }
};

/// Optimal uniform slack of a point against Σ_k c_k·Newt(a_k), together
/// with the supporting inequality normal·x ≥ offset read off the dual
/// solution. For every point p, margin(p) ≤ normal·p − offset.
struct InteriorMargin {
  Rational delta;
  std::vector<Rational> normal;
  Rational offset;
};

namespace detail {

/// The LP restricted to the generator columns in `active` (one index list
/// per summand).
inline LpSolution restricted_margin(const std::vector<Rational>& point, const std::vector<ScaledIdeal>& summands,
                                    const std::vector<std::vector<std::size_t>>& active) {
  const std::size_t n = point.size();
  std::size_t lambdas = 0;
  for (const auto& a : active) lambdas += a.size();
  const std::size_t cols = lambdas + n + 2;
  const std::size_t rows = n + summands.size();
  LinearProgram lp;
  lp.a.assign(rows, std::vector<Rational>(cols));
  lp.b.assign(rows, Rational(0));
  lp.c.assign(cols, Rational(0));
  std::size_t col = 0;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    for (auto i : active[k]) {
      const auto& u = summands[k].ideal.generators()[i];
      for (std::size_t j = 0; j < n; ++j)
        if (u[j]) lp.a[j][col] = summands[k].scale * Rational(static_cast<long>(u[j]));
      lp.a[n + k][col] = Rational(1);
      ++col;
    }
    lp.b[n + k] = Rational(1);
  }
  for (std::size_t j = 0; j < n; ++j) {
    lp.a[j][lambdas + j] = Rational(1);
    lp.a[j][lambdas + n] = Rational(1);
    lp.a[j][lambdas + n + 1] = Rational(-1);
    lp.b[j] = point[j];
  }
  lp.c[lambdas + n] = Rational(1);
  lp.c[lambdas + n + 1] = Rational(-1);
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal) throw error("internal: interior-margin LP not optimal");
  return sol;
}

/// Generators that minimize some coordinate or the total degree.
inline std::vector<std::size_t> initial_columns(const MonomialIdeal& a) {
  const auto& gens = a.generators();
  std::vector<std::size_t> out;
  auto keep = [&](std::size_t i) {
    if (std::find(out.begin(), out.end(), i) == out.end()) out.push_back(i);
  };
  for (std::size_t j = 0; j <= a.dim(); ++j) {
    std::size_t best = 0;
    std::uint64_t best_value = UINT64_MAX;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::uint64_t value = 0;
      if (j < a.dim())
        value = gens[i][j];
      else
        for (auto e : gens[i]) value += e;
      if (value < best_value) {
        best_value = value;
        best = i;
      }
    }
    keep(best);
  }
  return out;
}

} // namespace detail

/// max δ subject to point − δ·1 ∈ Σ_k c_k·Newt(a_k), solved as an exact LP
/// in the convex weights of each summand, the orthant slacks and δ = δ⁺ − δ⁻.
/// The point lies in the interior iff δ > 0.
///
/// Generator columns enter by column generation: the LP is solved over a
/// small active set and the remaining generators are priced against its
/// dual, so the final dual is feasible for the full problem.
inline InteriorMargin interior_margin(const std::vector<Rational>& point, const std::vector<ScaledIdeal>& summands) {
  const std::size_t n = point.size();
  std::vector<std::vector<std::size_t>> active;
  for (const auto& s : summands) {
    if (s.ideal.dim() != n) throw ring_mismatch("point and Newton polyhedron dimensions differ");
    if (s.ideal.is_zero()) throw precondition_violation("Newton polyhedron of the zero ideal is empty");
    active.push_back(detail::initial_columns(s.ideal));
  }
  for (;;) {
    LpSolution sol = detail::restricted_margin(point, summands, active);
    bool added = false;
    for (std::size_t k = 0; k < summands.size(); ++k) {
      const auto& gens = summands[k].ideal.generators();
      if (active[k].size() == gens.size()) continue;
      std::vector<char> in(gens.size(), 0);
      for (auto i : active[k]) in[i] = 1;
      // Reduced cost of generator u: c_k·(w·u) + y0_k, negative when violated.
      std::size_t worst = gens.size();
      Rational worst_cost;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (in[i]) continue;
        Rational dot;
        for (std::size_t j = 0; j < n; ++j)
          if (gens[i][j] && !sol.dual[j].is_zero()) dot += sol.dual[j] * Rational(static_cast<long>(gens[i][j]));
        Rational cost = summands[k].scale * dot + sol.dual[n + k];
        if (cost.sign() < 0 && (worst == gens.size() || cost < worst_cost)) {
          worst = i;
          worst_cost = cost;
        }
      }
      if (worst != gens.size()) {
        active[k].push_back(worst);
        added = true;
      }
    }
    if (added) continue;
    InteriorMargin out;
    out.delta = sol.value;
    out.normal.assign(sol.dual.begin(), sol.dual.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t k = 0; k < summands.size(); ++k) out.offset -= sol.dual[n + k];
    return out;
  }
}

namespace detail {

inline std::vector<Rational> shifted(const ExponentVector& v) {
  std::vector<Rational> p;
  p.reserve(v.size());
  for (auto e : v) p.emplace_back(static_cast<long>(e) + 1);
  return p;
}

} // namespace detail

/// x^v ∈ J(c·a) iff v + (1,…,1) lies in the interior of c·Newt(a).
inline bool newton_interior_test(const ExponentVector& v, const MultiplierQuery& q) {
  q.validate();
  if (q.ideal.is_zero()) return false;
  return interior_margin(detail::shifted(v), {{q.c, q.ideal}}).delta.sign() > 0;
}

/// Mixed test: v + 1 interior to Σ_k c_k·Newt(a_k).
inline bool mixed_interior_test(const ExponentVector& v, const std::vector<ScaledIdeal>& summands) {
  for (const auto& s : summands)
    if (s.ideal.is_zero()) return false;
  return interior_margin(detail::shifted(v), summands).delta.sign() > 0;
}

/// J(a_1^{c_1} ⋯ a_K^{c_K}) for monomial ideals: all x^v with v + 1 interior
/// to Σ c_k·Newt(a_k).
///
/// Minimal generators lie in the box v_j ≤ ⌊Σ_k c_k·max_i u_{k,i,j}⌋ (see
/// docs/multiplier-box-bound.md), which is enumerated in lexicographic
/// order. Points already known to be members (some v − e_j is a member)
/// and points cut off by a previously found supporting inequality are
/// decided without solving an LP.
inline MonomialIdeal mixed_multiplier_ideal(const std::vector<ScaledIdeal>& summands) {
  if (summands.empty()) throw precondition_violation("mixed multiplier ideal needs at least one summand");
  const std::size_t n = summands.front().ideal.dim();
  for (const auto& s : summands) {
    if (s.scale.sign() <= 0) throw precondition_violation("multiplier coefficient must be positive");
    if (s.ideal.dim() != n) throw ring_mismatch("monomial ideals of different dimensions");
    if (s.ideal.is_zero()) return MonomialIdeal::zero(n);
  }
  if (n == 0) return MonomialIdeal::unit(0);

  std::vector<std::uint32_t> bound(n);
  std::uint64_t cells = 1;
  for (std::size_t j = 0; j < n; ++j) {
    Rational b;
    for (const auto& s : summands) b += s.scale * Rational(static_cast<long>(s.ideal.max_exponent(j)));
    bound[j] = static_cast<std::uint32_t>(b.floor().get_ui());
    cells *= bound[j] + 1u;
  }
  if (cells > 50'000'000) throw precondition_violation("multiplier enumeration box too large");

  struct Cut {
    std::vector<mpz_class> normal;
    mpz_class offset;
  };
  std::vector<Cut> cuts;
  std::vector<char> member(cells, 0);
  std::vector<std::uint64_t> stride(n);
  stride[n - 1] = 1;
  for (std::size_t j = n - 1; j-- > 0;) stride[j] = stride[j + 1] * (bound[j + 1] + 1u);

  ExponentVector v(n, 0);
  mpz_class acc;
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    if (idx) {
      std::size_t j = n - 1;
      while (v[j] == bound[j]) v[j--] = 0;
      ++v[j];
    }
    bool decided = false;
    for (std::size_t j = 0; j < n && !decided; ++j)
      if (v[j] > 0 && member[idx - stride[j]]) {
        member[idx] = 1;
        decided = true;
      }
    for (const auto& cut : cuts) {
      if (decided) break;
      acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += cut.normal[j] * (v[j] + 1u);
      if (acc <= cut.offset) decided = true;
    }
    if (decided) continue;
    InteriorMargin margin = interior_margin(detail::shifted(v), summands);
    if (margin.delta.sign() > 0) {
      member[idx] = 1;
      continue;
    }
    // Scale the cut to integers: normal·x ≤ offset certifies non-membership.
    mpz_class den = margin.offset.denominator();
    for (const auto& w : margin.normal) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w.denominator().get_mpz_t());
    Cut cut;
    for (const auto& w : margin.normal) cut.normal.push_back(w.numerator() * (den / w.denominator()));
    cut.offset = margin.offset.numerator() * (den / margin.offset.denominator());
    cuts.push_back(std::move(cut));
  }

  std::vector<ExponentVector> gens;
  v.assign(n, 0);
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    if (idx) {
      std::size_t j = n - 1;
      while (v[j] == bound[j]) v[j--] = 0;
      ++v[j];
    }
    if (!member[idx]) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < n && minimal; ++j)
      if (v[j] > 0 && member[idx - stride[j]]) minimal = false;
    if (minimal) gens.push_back(v);
  }
  return MonomialIdeal(n, std::move(gens));
}

/// J(c·a) for a monomial ideal a; J(c·(0)) = (0).
inline MonomialIdeal multiplier_ideal(const MultiplierQuery& q) {
  q.validate();
  if (q.ideal.is_zero()) return MonomialIdeal::zero(q.ideal.dim());
  return mixed_multiplier_ideal({{q.c, q.ideal}});
}

/// Log-canonical threshold: the c at which 1 leaves J(c·a). Located by a
/// Stern–Brocot search whose comparisons are exact interior-margin signs at
/// the point (1,…,1); the search stops on the exact value (margin zero).
inline Rational log_canonical_threshold(const MonomialIdeal& a) {
  if (a.is_zero()) throw precondition_violation("the zero ideal has no log-canonical threshold");
  if (a.is_unit()) throw precondition_violation("the unit ideal has no log-canonical threshold");
  const std::vector<Rational> ones(a.dim(), Rational(1));
  // sign > 0: c below the threshold; 0: c is the threshold.
  auto side = [&](const mpz_class& num, const mpz_class& den) {
    return interior_margin(ones, {{Rational(num, den), a}}).delta.sign();
  };
  mpz_class ln = 0, ld = 1, rn = 1, rd = 0;
  for (;;) {
    mpz_class mn = ln + rn, md = ld + rd;
    int s = side(mn, md);
    if (s == 0) return Rational(mn, md);
    if (s > 0) {
      // Largest k with L + kR still below the threshold.
      mpz_class good = 1, bad = 2;
      for (;;) {
        int t = side(ln + bad * rn, ld + bad * rd);
        if (t == 0) return Rational(ln + bad * rn, ld + bad * rd);
        if (t < 0) break;
        good = bad;
        bad *= 2;
      }
      while (bad - good > 1) {
        mpz_class mid = (good + bad) / 2;
        int t = side(ln + mid * rn, ld + mid * rd);
        if (t == 0) return Rational(ln + mid * rn, ld + mid * rd);
        if (t > 0)
          good = mid;
        else
          bad = mid;
      }
      ln += good * rn;
      ld += good * rd;
    } else {
      mpz_class good = 1, bad = 2;
      for (;;) {
        int t = side(rn + bad * ln, rd + bad * ld);
        if (t == 0) return Rational(rn + bad * ln, rd + bad * ld);
        if (t > 0) break;
        good = bad;
        bad *= 2;
      }
      while (bad - good > 1) {
        mpz_class mid = (good + bad) / 2;
        int t = side(rn + mid * ln, rd + mid * ld);
        if (t == 0) return Rational(rn + mid * ln, rd + mid * ld);
        if (t < 0)
          good = mid;
        else
          bad = mid;
      }
      rn += good * ln;
      rd += good * ld;
    }
  }
}

} // namespace symlab

#endif
