#ifndef SYMLAB_GRADED_FAMILY_HPP
#define SYMLAB_GRADED_FAMILY_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "monomial_ideal.hpp"
#include "symbolic_powers.hpp"

namespace symlab {

/// Lazy k ↦ a_k (k ≥ 1). Ideals are computed on first use and cached;
/// copies share the cache.
///
/// A family supplies any of: polynomial generators, a monomial
/// representation, or only a membership test (differential powers).
class GradedFamily {
public:
  using IdealFn = std::function<Ideal(unsigned)>;
  using MonomialFn = std::function<MonomialIdeal(unsigned)>;
  using MemberFn = std::function<bool(const Polynomial&, unsigned)>;
  /// Elements of a_k for axiom checks on membership-only families.
  using SampleFn = std::function<std::vector<Polynomial>(unsigned, std::mt19937_64&)>;

  struct Capabilities {
    bool produces_generators = false;
    bool membership_only = false;
    bool monomial = false;
  };

  GradedFamily(std::string kind, RingPtr ring) : state_(std::make_shared<State>()) {
    state_->kind = std::move(kind);
    state_->ring = std::move(ring);
  }

  GradedFamily& with_ideals(IdealFn fn) {
    state_->ideal_fn = std::move(fn);
    return *this;
  }
  GradedFamily& with_monomial(MonomialFn fn) {
    state_->monomial_fn = std::move(fn);
    return *this;
  }
  GradedFamily& with_membership(MemberFn member, SampleFn sample) {
    state_->member_fn = std::move(member);
    state_->sample_fn = std::move(sample);
    return *this;
  }

  const std::string& kind() const { return state_->kind; }
  const RingPtr& ring() const { return state_->ring; }

  Capabilities capabilities() const {
    Capabilities c;
    c.monomial = static_cast<bool>(state_->monomial_fn);
    c.produces_generators = c.monomial || static_cast<bool>(state_->ideal_fn);
    c.membership_only = !c.produces_generators && static_cast<bool>(state_->member_fn);
    return c;
  }

  Ideal ideal_at(unsigned k) const {
    check_index(k);
    {
      std::lock_guard lock(state_->mutex);
      if (auto it = state_->ideals.find(k); it != state_->ideals.end()) return it->second;
    }
    Ideal value = compute_ideal(k);
    std::lock_guard lock(state_->mutex);
    return state_->ideals.emplace(k, std::move(value)).first->second;
  }

  MonomialIdeal monomial_at(unsigned k) const {
    check_index(k);
    if (!state_->monomial_fn) throw precondition_violation("family '" + kind() + "' is not monomial");
    {
      std::lock_guard lock(state_->mutex);
      if (auto it = state_->monomials.find(k); it != state_->monomials.end()) return it->second;
    }
    MonomialIdeal value = state_->monomial_fn(k);
    if (value.dim() != ring()->size()) throw ring_mismatch("monomial family of wrong dimension");
    std::lock_guard lock(state_->mutex);
    return state_->monomials.emplace(k, std::move(value)).first->second;
  }

  bool member(const Polynomial& f, unsigned k) const {
    check_index(k);
    if (!same_ring(f.ring(), ring())) throw ring_mismatch("element and family from different rings");
    if (state_->member_fn) return state_->member_fn(f, k);
    return is_member(f, ideal_at(k));
  }

  std::vector<Polynomial> sample(unsigned k, std::mt19937_64& rng) const {
    check_index(k);
    if (state_->sample_fn) return state_->sample_fn(k, rng);
    return ideal_at(k).generators();
  }

private:
  struct State {
    std::string kind;
    RingPtr ring;
    IdealFn ideal_fn;
    MonomialFn monomial_fn;
    MemberFn member_fn;
    SampleFn sample_fn;
    std::mutex mutex;
    std::map<unsigned, Ideal> ideals;
    std::map<unsigned, MonomialIdeal> monomials;
  };

  static void check_index(unsigned k) {
    if (k == 0) throw precondition_violation("graded families are indexed by k >= 1");
  }

  Ideal compute_ideal(unsigned k) const {
    if (state_->ideal_fn) return state_->ideal_fn(k);
    if (state_->monomial_fn) return to_ideal(monomial_at(k), ring());
    throw precondition_violation("family '" + kind() + "' only supports membership tests");
  }

  std::shared_ptr<State> state_;
};

namespace detail {

/// A prime generated by a subset of the variables, as a monomial ideal.
inline std::optional<MonomialIdeal> coordinate_prime(const Ideal& p) {
  const std::size_t n = p.ring()->size();
  std::vector<ExponentVector> gens;
  for (const auto& g : p.generators()) {
    if (!g.is_monomial() || g.total_degree() != 1) return std::nullopt;
    gens.push_back(g.terms().front().monomial.exponents());
  }
  return MonomialIdeal(n, std::move(gens));
}

inline Polynomial random_multiplier(const RingPtr& ring, std::mt19937_64& rng, unsigned degree) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> var(0, ring->size() - 1);
  Polynomial h = Polynomial::constant(ring, Rational(coeff(rng)));
  for (int t = 0; t < 2; ++t) {
    Polynomial m = Polynomial::constant(ring, Rational(coeff(rng)));
    for (unsigned d = 0; d < degree; ++d) m = m * Polynomial::variable(ring, var(rng));
    h = h + m;
  }
  return h.is_zero() ? Polynomial::constant(ring, Rational(1)) : h;
}

} // namespace detail

/// a_k = a^k.
inline GradedFamily family_powers(const Ideal& a) {
  GradedFamily f("powers", a.ring());
  f.with_ideals([a](unsigned k) { return power(a, k); });
  if (a.is_monomial()) {
    MonomialIdeal m = to_monomial_ideal(a);
    f.with_monomial([m](unsigned k) { return power(m, k); });
  }
  return f;
}

inline GradedFamily family_powers(const MonomialIdeal& a, const RingPtr& ring) {
  return family_powers(to_ideal(a, ring));
}

/// a_k = q^(k). When every component is generated by variables, the
/// monomial representation ⋂ P_i^k is available as well.
inline GradedFamily family_symbolic(const DecomposedRadical& q, GroebnerOptions options = {}) {
  auto table = std::make_shared<SymbolicPowerTable>(q, options);
  auto lock = std::make_shared<std::mutex>();
  GradedFamily f("symbolic", q.ring());
  f.with_ideals([table, lock](unsigned k) {
    std::lock_guard guard(*lock);
    return table->at(k);
  });
  std::vector<MonomialIdeal> primes;
  for (const auto& c : q.components) {
    auto p = detail::coordinate_prime(c.prime);
    if (!p) return f;
    primes.push_back(*p);
  }
  f.with_monomial([primes](unsigned k) {
    MonomialIdeal acc = power(primes.front(), k);
    for (std::size_t i = 1; i < primes.size(); ++i) acc = intersect(acc, power(primes[i], k));
    return acc;
  });
  return f;
}

inline GradedFamily family_symbolic(const PointConfiguration& config, GroebnerOptions options = {}) {
  return family_symbolic(decompose(config), options);
}

/// r_k = (a_k : b^k).
inline GradedFamily family_colon(const GradedFamily& base, const Ideal& b, GroebnerOptions options = {}) {
  if (!same_ring(base.ring(), b.ring())) throw ring_mismatch("family and ideal from different rings");
  if (b.is_zero()) throw precondition_violation("colon by the zero ideal");
  GradedFamily f("colon", base.ring());
  f.with_ideals([base, b, options](unsigned k) { return quotient(base.ideal_at(k), power(b, k), options); });
  if (base.capabilities().monomial && b.is_monomial()) {
    MonomialIdeal mb = to_monomial_ideal(b);
    f.with_monomial([base, mb](unsigned k) { return quotient(base.monomial_at(k), power(mb, k)); });
  }
  return f;
}

/// a^<k>: f with every partial derivative of order < k in a. Only
/// membership is available; samples are random combinations of a^k.
inline GradedFamily family_diff_powers(const Ideal& a) {
  GradedFamily f("diff_powers", a.ring());
  f.with_membership([a](const Polynomial& g, unsigned k) { return diff_power_member(g, a, k); },
                    [a](unsigned k, std::mt19937_64& rng) {
                      std::vector<Polynomial> out;
                      const Ideal ak = power(a, k);
                      for (const auto& g : ak.generators())
                        out.push_back(g * detail::random_multiplier(a.ring(), rng, 1));
                      return out;
                    });
  return f;
}

/// A family given by an explicit rule on monomial ideals.
inline GradedFamily family_monomial(std::string kind, const RingPtr& ring, GradedFamily::MonomialFn fn) {
  GradedFamily f(std::move(kind), ring);
  f.with_monomial(std::move(fn));
  return f;
}

/// A family given by an explicit rule on ideals.
inline GradedFamily family_custom(std::string kind, const RingPtr& ring, GradedFamily::IdealFn fn) {
  GradedFamily f(std::move(kind), ring);
  f.with_ideals(std::move(fn));
  return f;
}

/// a_k · a_ℓ ⊆ a_{k+ℓ} for 1 ≤ k ≤ ℓ, k + ℓ ≤ N, in order of increasing
/// k + ℓ. Membership-only families are checked on sampled products.
inline Report check_graded_axiom(const GradedFamily& family, unsigned n_max, std::uint64_t seed = 1) {
  Stopwatch clock;
  Report report;
  report.claim = "a_k · a_l ⊆ a_(k+l) for k + l <= " + std::to_string(n_max);
  report.anchor = "graded-family-axiom";
  report.parameters = {{"family", family.kind()}, {"N", std::to_string(n_max)}};
  const auto caps = family.capabilities();
  std::mt19937_64 rng(seed);
  for (unsigned s = 2; s <= n_max; ++s) {
    for (unsigned k = 1; 2 * k <= s; ++k) {
      const unsigned l = s - k;
      const std::string label = "a_" + std::to_string(k) + " · a_" + std::to_string(l) + " ⊆ a_" + std::to_string(s);
      Check check{label, true, std::nullopt};
      if (caps.monomial) {
        MonomialIdeal prod = product(family.monomial_at(k), family.monomial_at(l));
        MonomialIdeal target = family.monomial_at(s);
        if (const auto* w = target.witness_outside(prod)) {
          check.passed = false;
          check.witness = format_monomial(Monomial(std::span<const std::uint32_t>(*w)), *family.ring());
        }
      } else if (caps.produces_generators) {
        // Raw pairwise products: the check only needs some generating set.
        std::vector<Polynomial> prods;
        const Ideal ak = family.ideal_at(k), al = family.ideal_at(l);
        for (const auto& f : ak.generators())
          for (const auto& g : al.generators()) prods.push_back(f * g);
        check = detail::containment_check(label, family.ideal_at(s), Ideal(family.ring(), std::move(prods)));
      } else {
        auto fs = family.sample(k, rng);
        auto gs = family.sample(l, rng);
        for (const auto& f : fs) {
          for (const auto& g : gs)
            if (!family.member(f * g, s)) {
              check.passed = false;
              check.witness = format(f * g);
              break;
            }
          if (!check.passed) break;
        }
      }
      report.add(std::move(check));
      if (!report.passed()) {
        report.wall_time_ms = clock.elapsed_ms();
        return report;
      }
    }
  }
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

enum class Growth { linear, quadratic, other };

inline const char* to_string(Growth g) {
  switch (g) {
    case Growth::linear: return "linear";
    case Growth::quadratic: return "quadratic";
    case Growth::other: return "other";
  }
  return "?";
}

struct ColengthGrowth {
  std::vector<std::uint64_t> colengths;
  Growth growth = Growth::other;
};

/// Growth class from exact second differences: all zero is linear, a
/// nonzero constant is quadratic.
inline Growth classify_growth(const std::vector<std::uint64_t>& values) {
  if (values.size() < 3) throw precondition_violation("growth classification needs at least three values");
  std::vector<long long> second;
  for (std::size_t i = 2; i < values.size(); ++i)
    second.push_back(static_cast<long long>(values[i]) - 2 * static_cast<long long>(values[i - 1]) +
                     static_cast<long long>(values[i - 2]));
  bool constant = std::all_of(second.begin(), second.end(), [&](long long d) { return d == second.front(); });
  if (!constant) return Growth::other;
  return second.front() == 0 ? Growth::linear : Growth::quadratic;
}

inline ColengthGrowth colength_growth(const GradedFamily& family, unsigned k_max) {
  ColengthGrowth out;
  for (unsigned k = 1; k <= k_max; ++k) {
    auto c = colength(family.ideal_at(k));
    if (!c) throw precondition_violation("a_" + std::to_string(k) + " has infinite colength");
    out.colengths.push_back(*c);
  }
  out.growth = classify_growth(out.colengths);
  return out;
}

} // namespace symlab

#endif
