#ifndef SYMLAB_GROEBNER_HPP
#define SYMLAB_GROEBNER_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"
#include "polynomial.hpp"

namespace symlab {

inline std::atomic<std::uint64_t>& default_step_budget_storage() {
  static std::atomic<std::uint64_t> budget{10'000'000};
  return budget;
}

/// Default number of reduction steps one Groebner computation may take.
inline std::uint64_t default_step_budget() { return default_step_budget_storage().load(); }
inline void set_default_step_budget(std::uint64_t steps) { default_step_budget_storage().store(steps); }

struct GroebnerOptions {
  std::uint64_t step_budget = default_step_budget();
};

namespace detail {

class StepBudget {
public:
  explicit StepBudget(std::uint64_t limit) : limit_(limit) {}
  void spend() {
    if (++used_ > limit_)
      throw budget_exhausted("reduction-step budget of " + std::to_string(limit_) + " exhausted");
  }
  std::uint64_t used() const { return used_; }

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

struct ITerm {
  Monomial m;
  mpz_class c;
};

/// Integer-coefficient polynomial, terms sorted descending in a fixed order.
/// Used internally for fraction-free reduction.
using IPoly = std::vector<ITerm>;

inline mpz_class content(const IPoly& f, std::size_t from = 0) {
  mpz_class g = 0;
  for (std::size_t i = from; i < f.size(); ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f[i].c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline void divide_exact(IPoly& f, const mpz_class& d, std::size_t from = 0) {
  if (d == 1 || d == 0) return;
  for (std::size_t i = from; i < f.size(); ++i) mpz_divexact(f[i].c.get_mpz_t(), f[i].c.get_mpz_t(), d.get_mpz_t());
}

/// Divides out the content and makes the leading coefficient positive.
inline void make_primitive(IPoly& f) {
  if (f.empty()) return;
  mpz_class g = content(f);
  divide_exact(f, g);
  if (sgn(f.front().c) < 0)
    for (auto& t : f) t.c = -t.c;
}

inline IPoly to_ipoly(const Polynomial& f, const MonomialOrder& order) {
  auto terms = f.terms_in(order);
  mpz_class den = 1;
  for (const auto& t : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.denominator().get_mpz_t());
  IPoly out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back({t.monomial, t.coefficient.numerator() * (den / t.coefficient.denominator())});
  return out;
}

/// Monic rational polynomial with the same leading monomial as `f`.
inline Polynomial to_monic_polynomial(const IPoly& f, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  const mpz_class& lc = f.front().c;
  for (const auto& t : f) terms.push_back({t.m, Rational(t.c, lc)});
  return Polynomial::from_terms(ring, std::move(terms));
}

/// a * (mf * f[fs..]) - b * (mg * g[gs..]), merged in `order`. A null
/// monomial pointer means multiplication by 1.
inline IPoly combine(const IPoly& f, std::size_t fs, const mpz_class& a, const Monomial* mf, const IPoly& g,
                     std::size_t gs, const mpz_class& b, const Monomial* mg, const MonomialOrder& order) {
  IPoly out;
  out.reserve((f.size() - fs) + (g.size() - gs));
  std::size_t i = fs, j = gs;
  Monomial fi, gj;
  auto load_f = [&] { if (i < f.size()) fi = mf ? f[i].m * *mf : f[i].m; };
  auto load_g = [&] { if (j < g.size()) gj = mg ? g[j].m * *mg : g[j].m; };
  load_f();
  load_g();
  mpz_class tmp;
  while (i < f.size() || j < g.size()) {
    int c = i == f.size() ? -1 : j == g.size() ? 1 : order.compare(fi, gj);
    if (c > 0) {
      out.push_back({fi, a * f[i].c});
      ++i;
      load_f();
    } else if (c < 0) {
      out.push_back({gj, -(b * g[j].c)});
      ++j;
      load_g();
    } else {
      tmp = a * f[i].c;
      mpz_submul(tmp.get_mpz_t(), b.get_mpz_t(), g[j].c.get_mpz_t());
      if (sgn(tmp) != 0) out.push_back({fi, tmp});
      ++i;
      ++j;
      load_f();
      load_g();
    }
  }
  return out;
}

struct Reducers {
  std::vector<const IPoly*> polys;
  std::vector<Monomial> leads;

  void add(const IPoly& p) {
    polys.push_back(&p);
    leads.push_back(p.front().m);
  }

  const IPoly* find(const Monomial& m, std::size_t* which = nullptr) const {
    for (std::size_t k = 0; k < leads.size(); ++k)
      if (leads[k].divides(m)) {
        if (which) *which = k;
        return polys[k];
      }
    return nullptr;
  }
};

/// Full (leading and tail) fraction-free reduction of `f` by `reducers`.
/// The result equals `scale` times a genuine normal form; when `scale` is
/// non-null it is updated so that result * scale = true normal form.
inline IPoly reduce(IPoly s, const Reducers& reducers, const MonomialOrder& order, StepBudget& budget,
                    mpq_class* scale = nullptr, bool tail = true) {
  IPoly r;
  std::size_t head = 0;
  unsigned steps_since_content = 0;
  mpz_class d, fa, fb;
  while (head < s.size()) {
    const IPoly* g = reducers.find(s[head].m);
    if (!g) {
      if (!tail) {
        s.erase(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(head));
        return s;
      }
      r.push_back(std::move(s[head]));
      ++head;
      continue;
    }
    budget.spend();
    const mpz_class& a = s[head].c;
    const mpz_class& b = g->front().c;
    mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(fa.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(fb.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    if (sgn(fa) < 0) {
      fa = -fa;
      fb = -fb;
    }
    Monomial q = g->front().m.quotient_of(s[head].m);
    s = combine(s, head + 1, fa, nullptr, *g, 1, fb, &q, order);
    head = 0;
    if (fa != 1) {
      for (auto& t : r) t.c *= fa;
      if (scale) *scale /= fa;
    }
    if (++steps_since_content >= 16) {
      steps_since_content = 0;
      mpz_class c = content(r);
      if (c != 1) {
        mpz_class cs = content(s);
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cs.get_mpz_t());
        if (c > 1) {
          divide_exact(r, c);
          divide_exact(s, c);
          if (scale) *scale *= c;
        }
      }
    }
  }
  if (!r.empty()) {
    mpz_class c = content(r);
    divide_exact(r, c);
    if (scale) *scale *= c;
  }
  return r;
}

inline IPoly s_polynomial(const IPoly& f, const IPoly& g, const MonomialOrder& order) {
  Monomial l = lcm(f.front().m, g.front().m);
  Monomial mf = f.front().m.quotient_of(l);
  Monomial mg = g.front().m.quotient_of(l);
  mpz_class d;
  mpz_gcd(d.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
  mpz_class a = g.front().c / d, b = f.front().c / d;
  return combine(f, 1, a, &mf, g, 1, b, &mg, order);
}

class Buchberger {
public:
  Buchberger(const MonomialOrder& order, std::uint64_t budget) : order_(order), budget_(budget) {}

  void add_input(IPoly f) {
    make_primitive(f);
    if (f.empty()) return;
    f = reduce(std::move(f), active_reducers(), order_, budget_);
    if (f.empty()) return;
    make_primitive(f);
    insert(std::move(f));
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        int c = order_.compare(pairs_[k].lcm, pairs_[best].lcm);
        if (c < 0 || (c == 0 && std::make_pair(pairs_[k].j, pairs_[k].i) < std::make_pair(pairs_[best].j, pairs_[best].i)))
          best = k;
      }
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      IPoly s = s_polynomial(polys_[p.i], polys_[p.j], order_);
      if (s.empty()) continue;
      s = reduce(std::move(s), active_reducers(), order_, budget_);
      if (s.empty()) continue;
      make_primitive(s);
      insert(std::move(s));
    }
  }

  /// Reduced basis, sorted by leading monomial descending; {1} for the unit ideal.
  std::vector<IPoly> reduced_basis() {
    std::vector<IPoly> basis;
    if (unit_) {
      std::size_t n = polys_.empty() ? 0 : polys_.front().front().m.size();
      basis.push_back({ITerm{Monomial(n), mpz_class(1)}});
      return basis;
    }
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) basis.push_back(polys_[k]);
    std::sort(basis.begin(), basis.end(),
              [&](const IPoly& a, const IPoly& b) { return order_.compare(a.front().m, b.front().m) > 0; });
    // Tail reduction against the other basis elements.
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Reducers others;
      for (std::size_t l = 0; l < basis.size(); ++l)
        if (l != k) others.add(basis[l]);
      mpq_class scale = 1;
      IPoly tail(basis[k].begin() + 1, basis[k].end());
      tail = reduce(std::move(tail), others, order_, budget_, &scale);
      // new element = head + tail * scale, cleared of denominators
      mpz_class num = scale.get_num(), den = scale.get_den();
      IPoly out;
      out.reserve(tail.size() + 1);
      out.push_back({basis[k].front().m, basis[k].front().c * den});
      for (auto& t : tail) out.push_back({t.m, t.c * num});
      make_primitive(out);
      basis[k] = std::move(out);
    }
    return basis;
  }

  std::uint64_t steps() const { return budget_.used(); }

private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  Reducers active_reducers() const {
    Reducers r;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) r.add(polys_[k]);
    return r;
  }

  void insert(IPoly h) {
    if (h.front().m.is_one()) {
      unit_ = true;
      polys_.push_back(std::move(h));
      active_.push_back(true);
      return;
    }
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(false);
    const Monomial& lh = polys_[hi].front().m;

    // Gebauer-Moeller update.
    std::vector<Pair> c;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) c.push_back({g, hi, lcm(polys_[g].front().m, lh)});
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = coprime(lh, polys_[p.i].front().m);
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l)
          if (c[l].lcm.divides(p.lcm)) keep = false;
        for (const auto& q : d)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(lcm(polys_[p.i].front().m, lh) == p.lcm) &&
                  !(lcm(polys_[p.j].front().m, lh) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (const auto& p : d)
      if (!coprime(lh, polys_[p.i].front().m)) next.push_back(p);
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(polys_[g].front().m)) active_[g] = false;
    active_[hi] = true;
  }

  MonomialOrder order_;
  StepBudget budget_;
  std::vector<IPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

} // namespace detail

/// Reduced, monic Groebner basis of the ideal generated by `gens` with
/// respect to `order`, sorted by leading monomial descending. The empty
/// list is the zero ideal; {1} is the unit ideal. Throws budget_exhausted
/// when the reduction-step budget runs out.
inline std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                          const GroebnerOptions& options = {}) {
  std::vector<Polynomial> out;
  if (gens.empty()) return out;
  RingPtr ring = gens.front().ring();
  for (const auto& g : gens)
    if (!same_ring(g.ring(), ring)) throw ring_mismatch("generators from different rings");
  detail::Buchberger engine(order, options.step_budget);
  for (const auto& g : gens)
    if (!g.is_zero()) engine.add_input(detail::to_ipoly(g, order));
  engine.run();
  bool all_zero = std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_zero(); });
  if (all_zero) return out;
  auto basis = engine.reduced_basis();
  for (const auto& b : basis) out.push_back(detail::to_monic_polynomial(b, ring));
  return out;
}

/// Remainder of `f` on division by `basis` (full reduction: no term of the
/// result is divisible by a leading monomial of the basis). Deterministic:
/// at each step the first basis element in sequence order whose leading
/// monomial divides is used.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& order,
                              const GroebnerOptions& options = {}) {
  for (const auto& g : basis) {
    Polynomial::require_same_ring(f, g);
    if (g.is_zero()) throw precondition_violation("zero polynomial in reduction basis");
  }
  if (f.is_zero()) return f;
  std::vector<detail::IPoly> reducers_storage;
  reducers_storage.reserve(basis.size());
  for (const auto& g : basis) {
    auto p = detail::to_ipoly(g, order);
    detail::make_primitive(p);
    reducers_storage.push_back(std::move(p));
  }
  detail::Reducers reducers;
  for (const auto& p : reducers_storage) reducers.add(p);
  auto fi = detail::to_ipoly(f, order);
  // to_ipoly scaled f by the lcm of its denominators; undo that factor.
  mpq_class scale = f.leading_term(order).coefficient.get() / mpq_class(fi.front().c);
  detail::StepBudget budget(options.step_budget);
  auto r = detail::reduce(std::move(fi), reducers, order, budget, &scale);
  std::vector<Term> terms;
  terms.reserve(r.size());
  for (const auto& t : r) terms.push_back({t.m, Rational(mpq_class(mpq_class(t.c) * scale))});
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

/// S-polynomial of two nonzero polynomials (rational form).
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  Polynomial::require_same_ring(f, g);
  Term lf = f.leading_term(order), lg = g.leading_term(order);
  Monomial l = lcm(lf.monomial, lg.monomial);
  return f.times_term(lf.monomial.quotient_of(l), lf.coefficient.inverse()) -
         g.times_term(lg.monomial.quotient_of(l), lg.coefficient.inverse());
}

/// Checks Buchberger's criterion: every pairwise S-polynomial reduces to 0.
inline bool is_groebner_basis(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
  return true;
}

} // namespace symlab

#endif
