#ifndef SYMLAB_TESTS_RANDOM_HPP
#define SYMLAB_TESTS_RANDOM_HPP

#include <random>
#include <vector>

#include "oracle.hpp"
#include "symlab/symlab.hpp"

namespace symlab {
inline void PrintTo(const Polynomial& f, std::ostream* os) { *os << format(f); }
} // namespace symlab

namespace testing_support {

using symlab::Polynomial;
using symlab::Rational;

inline Rational random_rational(std::mt19937_64& rng, int range = 20) {
  std::uniform_int_distribution<long> num(-range, range), den(1, range);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

/// Up to `terms` terms of total degree ≤ degree, small integer coefficients.
inline Polynomial random_polynomial(const symlab::RingPtr& ring, std::mt19937_64& rng, unsigned degree,
                                    unsigned terms, int coeff_range = 5) {
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::uniform_int_distribution<unsigned> deg(0, degree);
  std::vector<symlab::Term> out;
  const std::size_t n = ring->size();
  for (unsigned t = 0; t < terms; ++t) {
    symlab::Monomial m(n);
    unsigned budget = deg(rng);
    for (unsigned i = 0; i < budget; ++i) {
      std::size_t v = rng() % n;
      m.set(v, m[v] + 1);
    }
    out.push_back({m, Rational(coeff(rng))});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

/// Nonzero monomial ideal in n variables with exponents ≤ max_exp.
inline symlab::MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, std::size_t n, unsigned max_exp,
                                                   unsigned max_gens) {
  std::uniform_int_distribution<unsigned> e(0, max_exp), count(1, max_gens);
  std::vector<symlab::ExponentVector> gens;
  unsigned k = count(rng);
  for (unsigned i = 0; i < k; ++i) {
    symlab::ExponentVector v(n);
    for (auto& x : v) x = e(rng);
    gens.push_back(v);
  }
  return symlab::MonomialIdeal(n, gens);
}

inline std::vector<oracle::Exps> sorted_generators(const symlab::MonomialIdeal& a) {
  std::vector<oracle::Exps> g(a.generators().begin(), a.generators().end());
  std::sort(g.begin(), g.end());
  return g;
}

inline oracle::Q to_q(const Rational& r) { return r.get(); }

}  // namespace testing_support

#endif
