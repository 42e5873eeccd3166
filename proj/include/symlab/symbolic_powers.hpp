#ifndef SYMLAB_SYMBOLIC_POWERS_HPP
#define SYMLAB_SYMBOLIC_POWERS_HPP

#include <array>
#include <atomic>
#include <exception>
#include <future>
#include <mutex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ideal_ops.hpp"
#include "report.hpp"
#include "text.hpp"

namespace symlab {

/// Distinct points of affine n-space with rational coordinates.
struct PointConfiguration {
  RingPtr ring;
  std::vector<std::vector<Rational>> points;

  std::size_t dimension() const { return ring->size(); }

  void validate() const {
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i].size() != ring->size()) throw ring_mismatch("point dimension does not match ring");
      for (std::size_t j = 0; j < i; ++j)
        if (points[i] == points[j]) throw precondition_violation("point configuration has repeated points");
    }
    if (points.empty()) throw precondition_violation("empty point configuration");
  }
};

/// Maximal ideal (x_1 − p_1, …, x_n − p_n) of a point.
inline Ideal maximal_ideal(const RingPtr& ring, const std::vector<Rational>& point) {
  if (point.size() != ring->size()) throw ring_mismatch("point dimension does not match ring");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < point.size(); ++i)
    gens.push_back(Polynomial::variable(ring, i) - Polynomial::constant(ring, point[i]));
  return Ideal(ring, std::move(gens));
}

/// One prime component P of a radical ideal.
///
/// `primary_powers` marks components whose ordinary powers are already
/// P-primary (maximal ideals, ideals generated by part of a regular system
/// of parameters such as linear subspaces); for those P^(m) = P^m. Any other
/// component needs a witness s ∉ P with (P^m : s^∞) = P^(m).
struct PrimeComponent {
  Ideal prime;
  std::optional<Polynomial> witness;
  bool primary_powers = false;
};

/// A radical ideal q = P_1 ∩ … ∩ P_h given by its minimal primes, with the
/// codimension bound e used by the uniform containment q^(me) ⊆ q^m.
struct DecomposedRadical {
  std::vector<PrimeComponent> components;
  unsigned codim_bound = 0;

  const RingPtr& ring() const { return components.at(0).prime.ring(); }

  /// Throws invalid_witness or precondition_violation when the
  /// decomposition is unusable.
  void validate() const {
    if (components.empty()) throw precondition_violation("decomposition without components");
    for (const auto& c : components)
      if (!same_ring(c.prime.ring(), ring())) throw ring_mismatch("components from different rings");
    for (std::size_t i = 0; i < components.size(); ++i)
      for (std::size_t j = 0; j < components.size(); ++j)
        if (i != j && contains(components[i].prime, components[j].prime))
          throw precondition_violation("component " + std::to_string(j + 1) + " is contained in component " +
                                       std::to_string(i + 1) + "; components must be incomparable");
    for (std::size_t i = 0; i < components.size(); ++i) {
      const auto& c = components[i];
      if (c.primary_powers) continue;
      if (!c.witness)
        throw invalid_witness("component " + std::to_string(i + 1) + " needs a saturation witness");
      if (!equal(quotient(c.prime, *c.witness), c.prime))
        throw invalid_witness("witness " + format(*c.witness) + " does not avoid component " + std::to_string(i + 1));
    }
  }

  Ideal radical() const {
    std::vector<Ideal> primes;
    for (const auto& c : components) primes.push_back(c.prime);
    return intersect(primes);
  }
};

/// The decomposition of a point configuration into maximal ideals (e = n).
inline DecomposedRadical decompose(const PointConfiguration& config) {
  config.validate();
  DecomposedRadical q;
  for (const auto& p : config.points) q.components.push_back({maximal_ideal(config.ring, p), std::nullopt, true});
  q.codim_bound = static_cast<unsigned>(config.dimension());
  return q;
}

/// Affine cone over points of projective space: each point [a_0 : … : a_n]
/// becomes the line it spans, cut out by the 2×2 minors a_i x_j − a_j x_i
/// against a pivot coordinate. Components have codimension n, so e = n.
inline DecomposedRadical cone_over_points(const RingPtr& ring, const std::vector<std::vector<Rational>>& points) {
  DecomposedRadical q;
  const std::size_t n = ring->size();
  for (const auto& p : points) {
    if (p.size() != n) throw ring_mismatch("projective point has wrong number of coordinates");
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n && pivot == n; ++i)
      if (!p[i].is_zero()) pivot = i;
    if (pivot == n) throw precondition_violation("the zero vector is not a projective point");
    std::vector<Polynomial> gens;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == pivot) continue;
      gens.push_back(Polynomial::variable(ring, j) * p[pivot] - Polynomial::variable(ring, pivot) * p[j]);
    }
    q.components.push_back({Ideal(ring, std::move(gens)), std::nullopt, true});
  }
  for (std::size_t i = 0; i < q.components.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (equal(q.components[i].prime, q.components[j].prime))
        throw precondition_violation("projective points are not distinct");
  q.codim_bound = n == 0 ? 0 : static_cast<unsigned>(n - 1);
  return q;
}

/// First iterated partial derivative of f of order < m that is not in q,
/// or nullopt when f lies in the m-th differential power of q.
inline std::optional<Polynomial> diff_power_witness(const Polynomial& f, const Ideal& q, unsigned m) {
  if (m == 0) throw precondition_violation("differential power order must be at least 1");
  if (!same_ring(f.ring(), q.ring())) throw ring_mismatch("element and ideal from different rings");
  const std::size_t n = q.ring()->size();
  // Each level holds derivatives of one order, indexed by nondecreasing
  // variable sequences so that every mixed partial appears once.
  struct Entry {
    Polynomial poly;
    std::size_t last;
  };
  std::vector<Entry> level{{f, 0}};
  for (unsigned order = 0; order < m; ++order) {
    std::vector<Entry> next;
    for (const auto& e : level) {
      if (e.poly.is_zero()) continue;
      if (!is_member(e.poly, q)) return e.poly;
      if (order + 1 < m)
        for (std::size_t v = e.last; v < n; ++v) next.push_back({e.poly.partial_derivative(v), v});
    }
    level = std::move(next);
  }
  return std::nullopt;
}

/// f ∈ q^<m>: every partial derivative of f of order ≤ m − 1 lies in q.
/// For radical q this is membership in the m-th symbolic power.
inline bool diff_power_member(const Polynomial& f, const Ideal& q, unsigned m) {
  return !diff_power_witness(f, q, m);
}

/// ⋂_p M_p^m over the points of the configuration.
inline Ideal symbolic_power_points(const PointConfiguration& config, unsigned m,
                                   const GroebnerOptions& options = {}) {
  if (m == 0) throw precondition_violation("symbolic power order must be at least 1");
  config.validate();
  std::vector<Ideal> parts;
  for (const auto& p : config.points) parts.push_back(power(maximal_ideal(config.ring, p), m));
  return intersect(parts, options);
}

/// P^(m) for one component: P^m itself when its powers are primary,
/// otherwise (P^m : s^∞), cross-checked generator by generator against the
/// differential characterization.
inline Ideal component_symbolic_power(const PrimeComponent& c, unsigned m, const GroebnerOptions& options = {}) {
  Ideal pm = power(c.prime, m);
  if (c.primary_powers || m == 1) return pm;
  if (!c.witness) throw invalid_witness("component needs a saturation witness");
  Ideal sat = saturate(pm, Ideal(c.prime.ring(), {*c.witness}), options).ideal;
  for (const auto& g : sat.generators())
    if (auto bad = diff_power_witness(g, c.prime, m))
      throw invalid_witness("saturation by " + format(*c.witness) + " disagrees with the differential test: " +
                            format(g) + " has derivative " + format(*bad) + " outside the component");
  return sat;
}

/// ⋂_i P_i^(m).
inline Ideal symbolic_power_decomposed(const DecomposedRadical& q, unsigned m, const GroebnerOptions& options = {},
                                       bool validate = true) {
  if (m == 0) throw precondition_violation("symbolic power order must be at least 1");
  if (validate) q.validate();
  std::vector<Ideal> parts;
  for (const auto& c : q.components) parts.push_back(component_symbolic_power(c, m, options));
  return intersect(parts, options);
}

/// Memoized k ↦ q^(k) for one decomposition.
class SymbolicPowerTable {
public:
  explicit SymbolicPowerTable(DecomposedRadical q, GroebnerOptions options = {})
      : q_(std::move(q)), options_(options) {
    q_.validate();
  }

  const Ideal& at(unsigned k) {
    auto it = table_.find(k);
    if (it != table_.end()) return it->second;
    return table_.emplace(k, symbolic_power_decomposed(q_, k, options_, false)).first->second;
  }

  const DecomposedRadical& decomposition() const { return q_; }

private:
  DecomposedRadical q_;
  GroebnerOptions options_;
  std::map<unsigned, Ideal> table_;
};

namespace detail {

inline Check containment_check(const std::string& label, const Ideal& outer, const Ideal& inner) {
  auto w = containment_witness(outer, inner);
  return {label, !w, w ? std::optional<std::string>(format(*w)) : std::nullopt};
}

} // namespace detail

/// Checks q^(me) ⊆ q^m for m = 1..m_max, plus the sharper
/// q^(m(e+1)) ⊆ (q^(2))^m. Symbolic powers are built sequentially; the
/// containment checks then run on up to `jobs` threads, reported in order.
inline Report verify_theorem_A(const DecomposedRadical& q, unsigned m_max, const GroebnerOptions& options = {},
                               unsigned jobs = 1) {
  Stopwatch clock;
  Report report;
  report.claim = "q^(me) ⊆ q^m and q^(mℓ) ⊆ (q^(ℓ+1−e))^m for ℓ ∈ {e, e+1}";
  report.anchor = "uniform-symbolic-power-containment";
  const unsigned e = q.codim_bound;
  if (e == 0) throw precondition_violation("codimension bound must be at least 1");
  SymbolicPowerTable table(q, options);
  report.parameters = {{"codim_bound", std::to_string(e)},
                       {"m_max", std::to_string(m_max)},
                       {"components", std::to_string(q.components.size())}};
  struct Task {
    std::string label;
    Ideal outer, inner;
  };
  std::vector<Task> tasks;
  for (unsigned m = 1; m <= m_max; ++m) {
    for (unsigned ell = e; ell <= e + 1; ++ell) {
      std::string label = ell == e ? "q^(" + std::to_string(m * e) + ") ⊆ q^" + std::to_string(m)
                                   : "q^(" + std::to_string(m * ell) + ") ⊆ (q^(" + std::to_string(ell + 1 - e) +
                                         "))^" + std::to_string(m);
      tasks.push_back({std::move(label), power(table.at(ell + 1 - e), m), table.at(m * ell)});
    }
  }
  std::vector<Check> results(tasks.size());
  auto run = [&](std::size_t i) { results[i] = detail::containment_check(tasks[i].label, tasks[i].outer, tasks[i].inner); };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned w = 0; w < jobs; ++w)
      workers.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i; (i = next++) < tasks.size();) {
          try {
            run(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      }));
    for (auto& w : workers) w.get();
    if (failure) std::rethrow_exception(failure);
  }
  for (auto& c : results) report.add(std::move(c));
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

inline Report verify_theorem_A(const PointConfiguration& config, unsigned m_max, const GroebnerOptions& options = {},
                               unsigned jobs = 1) {
  return verify_theorem_A(decompose(config), m_max, options, jobs);
}

} // namespace symlab

#endif
