#ifndef SYMLAB_IDEAL_HPP
#define SYMLAB_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "groebner.hpp"
#include "polynomial.hpp"
#include "text.hpp"

namespace symlab {

/// Finitely generated ideal of a polynomial ring with a per-order cache of
/// reduced Groebner bases. Copies share the cache; the generator list never
/// changes after construction.
class Ideal {
public:
  Ideal() = default;

  explicit Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

  Ideal(RingPtr ring, std::vector<Polynomial> generators) : Ideal(std::move(ring)) {
    for (auto& g : generators) {
      if (!same_ring(g.ring(), ring_)) throw ring_mismatch("ideal generator from a different ring");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  static Ideal unit(RingPtr ring) {
    auto one = Polynomial::constant(ring, Rational(1));
    return Ideal(std::move(ring), {one});
  }
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring)); }

  static Ideal parse(std::string_view text, const RingPtr& ring) {
    return Ideal(ring, parse_polynomial_list(text, ring));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// True iff every generator is a single term.
  bool is_monomial() const {
    for (const auto& g : gens_)
      if (!g.is_monomial()) return false;
    return true;
  }

  /// Reduced monic Groebner basis for `order`, computed once per order.
  const std::vector<Polynomial>& groebner_basis(const MonomialOrder& order = MonomialOrder::grevlex(),
                                                const GroebnerOptions& options = {}) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      for (const auto& [o, basis] : cache_->entries)
        if (o == order) return *basis;
    }
    auto basis = std::make_shared<const std::vector<Polynomial>>(buchberger(gens_, order, options));
    std::lock_guard<std::mutex> lock(cache_->mutex);
    for (const auto& [o, existing] : cache_->entries)
      if (o == order) return *existing;
    cache_->entries.emplace_back(order, basis);
    return *basis;
  }

  /// Records an already-known reduced Groebner basis (e.g. read off an
  /// elimination basis). The caller guarantees it is reduced and monic.
  void seed_basis(const MonomialOrder& order, std::vector<Polynomial> basis) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    for (const auto& [o, existing] : cache_->entries)
      if (o == order) return;
    cache_->entries.emplace_back(order, std::make_shared<const std::vector<Polynomial>>(std::move(basis)));
  }

  /// Order used for membership and colength. Defaults to grevlex; families
  /// whose generators already form a basis for another order set it.
  const MonomialOrder& working_order() const { return order_; }

  /// Same ideal (sharing the basis cache) with a different working order.
  Ideal with_working_order(MonomialOrder order) const {
    Ideal copy = *this;
    copy.order_ = std::move(order);
    return copy;
  }

  bool is_unit() const {
    const auto& gb = groebner_basis(order_);
    return gb.size() == 1 && gb.front().is_constant();
  }

private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>>> entries;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  MonomialOrder order_ = MonomialOrder::grevlex();
  std::shared_ptr<Cache> cache_;
};

inline bool is_member(const Polynomial& f, const Ideal& ideal) {
  if (!same_ring(f.ring(), ideal.ring())) throw ring_mismatch("element and ideal from different rings");
  if (f.is_zero()) return true;
  if (ideal.is_zero()) return false;
  const auto& order = ideal.working_order();
  return normal_form(f, ideal.groebner_basis(order), order).is_zero();
}

/// First generator of `inner` that is not a member of `outer`, if any.
inline std::optional<Polynomial> containment_witness(const Ideal& outer, const Ideal& inner) {
  if (!same_ring(outer.ring(), inner.ring())) throw ring_mismatch("ideals from different rings");
  for (const auto& g : inner.generators())
    if (!is_member(g, outer)) return g;
  return std::nullopt;
}

/// True iff inner is a subset of outer.
inline bool contains(const Ideal& outer, const Ideal& inner) { return !containment_witness(outer, inner); }

/// Equality as ideals: identical reduced Groebner bases.
inline bool equal(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw ring_mismatch("ideals from different rings");
  return a.groebner_basis() == b.groebner_basis();
}

} // namespace symlab

#endif
