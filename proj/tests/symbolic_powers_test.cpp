#include <gtest/gtest.h>

#include <random>

#include "support/random.hpp"
#include "symlab/symlab.hpp"

using namespace symlab;
using testing_support::random_polynomial;

namespace {

Polynomial P(const std::string& text, const RingPtr& ring) { return parse_polynomial(text, ring); }
Ideal I(const std::string& text, const RingPtr& ring) { return Ideal::parse(text, ring); }

std::vector<Rational> pt(std::initializer_list<long> coords) {
  std::vector<Rational> out;
  for (long c : coords) out.emplace_back(c);
  return out;
}

DecomposedRadical coordinate_cone(const RingPtr& R) {
  return cone_over_points(R, {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
}

DecomposedRadical two_planes(const RingPtr& R) {
  DecomposedRadical q;
  q.components.push_back({I("x, y", R), std::nullopt, true});
  q.components.push_back({I("z, w", R), std::nullopt, true});
  q.codim_bound = 2;
  return q;
}

// Prime of the monomial curve (t^3, t^4, t^5); its square has an embedded
// component at the origin.
PrimeComponent monomial_curve(const RingPtr& R) {
  return {I("x^3-y*z, y^2-x*z, z^2-x^2*y", R), P("x", R), false};
}

// Random element biased towards `ideal`: a combination of its generators,
// sometimes perturbed.
Polynomial biased_sample(const Ideal& ideal, std::mt19937_64& rng, int i) {
  const RingPtr& R = ideal.ring();
  Polynomial f = Polynomial::constant(R, 0);
  for (const auto& g : ideal.generators())
    if (rng() % 2) f = f + g * random_polynomial(R, rng, 1, 2);
  if (i % 3 == 0) f = f + random_polynomial(R, rng, 3, 2);
  return f;
}

} // namespace

TEST(DiffPower, Examples) {
  auto R = make_ring({"x", "y", "z"});
  Ideal q = I("x*y, x*z, y*z", R);
  EXPECT_TRUE(diff_power_member(P("x*y*z", R), q, 2));
  EXPECT_FALSE(diff_power_member(P("x*y*z", R), q, 3));
  auto w = diff_power_witness(P("x*y*z", R), q, 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->total_degree(), 1u);
  EXPECT_FALSE(is_member(*w, q));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i) {
    auto f = random_polynomial(R, rng, 3, 3);
    EXPECT_EQ(diff_power_member(f, q, 1), is_member(f, q));
  }
  EXPECT_THROW(diff_power_member(P("x", R), q, 0), precondition_violation);
}

TEST(SymbolicPowerPoints, Examples) {
  auto R = make_ring({"x", "y"});
  PointConfiguration origin{R, {pt({0, 0})}};
  EXPECT_TRUE(equal(symbolic_power_points(origin, 3), power(I("x, y", R), 3)));
  PointConfiguration two{R, {pt({0, 0}), pt({1, 0})}};
  EXPECT_TRUE(equal(symbolic_power_points(two, 1), I("y, x^2-x", R)));
  PointConfiguration repeated{R, {pt({0, 0}), pt({0, 0})}};
  EXPECT_THROW(symbolic_power_points(repeated, 1), precondition_violation);
  PointConfiguration wrong{R, {pt({0, 0, 0})}};
  EXPECT_THROW(symbolic_power_points(wrong, 1), ring_mismatch);
}

TEST(SymbolicPowerDecomposed, Examples) {
  auto R = make_ring({"x", "y", "z"});
  auto q = coordinate_cone(R);
  Ideal q1 = symbolic_power_decomposed(q, 1), q2 = symbolic_power_decomposed(q, 2);
  EXPECT_TRUE(equal(q1, I("x*y, x*z, y*z", R)));
  EXPECT_TRUE(is_member(P("x*y*z", R), q2));
  EXPECT_FALSE(is_member(P("x*y*z", R), power(q1, 2)));
  DecomposedRadical single{{{I("x, y", R), std::nullopt, true}}, 2};
  EXPECT_TRUE(equal(symbolic_power_decomposed(single, 2), power(I("x, y", R), 2)));
}

TEST(SymbolicPowerDecomposed, SaturationWitness) {
  auto R = make_ring({"x", "y", "z"});
  auto c = monomial_curve(R);
  Ideal s2 = component_symbolic_power(c, 2);
  EXPECT_FALSE(contains(power(c.prime, 2), s2));
  EXPECT_TRUE(contains(s2, power(c.prime, 2)));
  EXPECT_TRUE(is_member(P("x^5 + x*y^3 - 3*x^2*y*z + z^3", R), s2));
  // Any other valid witness gives the same ideal.
  PrimeComponent other = c;
  other.witness = P("y", R);
  EXPECT_TRUE(equal(component_symbolic_power(other, 2), s2));
  for (const auto& g : s2.generators()) EXPECT_TRUE(diff_power_member(g, c.prime, 2));
}

TEST(SymbolicPowerDecomposed, InvalidWitness) {
  auto R = make_ring({"x", "y", "z"});
  DecomposedRadical q{{{I("x, y", R), P("x", R), false}}, 2};
  EXPECT_THROW(q.validate(), invalid_witness);
  EXPECT_THROW(symbolic_power_decomposed(q, 2), invalid_witness);
  DecomposedRadical missing{{{I("x, y", R), std::nullopt, false}}, 2};
  EXPECT_THROW(symbolic_power_decomposed(missing, 2), invalid_witness);
  DecomposedRadical nested{{{I("x, y", R), std::nullopt, true}, {I("x", R), std::nullopt, true}}, 1};
  EXPECT_THROW(nested.validate(), precondition_violation);
}

TEST(UniformContainment, CoordinateCone) {
  auto R = make_ring({"x", "y", "z"});
  auto q = coordinate_cone(R);
  EXPECT_EQ(q.codim_bound, 2u);
  Report r = verify_theorem_A(q, 3);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks.size(), 6u);
  EXPECT_EQ(r.anchor, "uniform-symbolic-power-containment");
  Report parallel = verify_theorem_A(q, 3, {}, 3);
  ASSERT_EQ(parallel.checks.size(), r.checks.size());
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    EXPECT_EQ(parallel.checks[i].label, r.checks[i].label);
    EXPECT_EQ(parallel.checks[i].passed, r.checks[i].passed);
  }
  EXPECT_TRUE(verify_theorem_A(q, 1).passed());
}

TEST(UniformContainment, FailsWithWitnessWhenBoundTooSmall) {
  auto R = make_ring({"x", "y", "z"});
  auto q = coordinate_cone(R);
  q.codim_bound = 1;
  Report r = verify_theorem_A(q, 2);
  EXPECT_EQ(r.verdict, Verdict::fail);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, "x*y*z");
}

TEST(UniformContainment, TwoPlanes) {
  auto R = make_ring({"x", "y", "z", "w"});
  EXPECT_TRUE(verify_theorem_A(two_planes(R), 4).passed());
}

TEST(UniformContainment, PlanePoints) {
  auto R = make_ring({"x", "y"});
  PointConfiguration T{R, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({2, 3})}};
  Report r = verify_theorem_A(T, 2);
  EXPECT_TRUE(r.passed());
}

TEST(SymbolicPowers, RouteAgreement) {
  auto R = make_ring({"x", "y"});
  PointConfiguration T{R, {pt({0, 0}), pt({1, 0}), pt({0, 1})}};
  Ideal q = symbolic_power_points(T, 1);
  std::mt19937_64 rng(71);
  for (unsigned m = 1; m <= 3; ++m) {
    Ideal by_points = symbolic_power_points(T, m);
    Ideal by_components = symbolic_power_decomposed(decompose(T), m);
    ASSERT_EQ(by_points.groebner_basis(), by_components.groebner_basis()) << m;
    int inside = 0;
    for (int i = 0; i < 100; ++i) {
      Polynomial f = biased_sample(by_points, rng, i);
      bool member = is_member(f, by_points);
      inside += member;
      ASSERT_EQ(diff_power_member(f, q, m), member) << format(f);
      ASSERT_EQ(is_member(f, by_components), member);
    }
    EXPECT_GT(inside, 10);
    EXPECT_LT(inside, 100);
  }
}

TEST(SymbolicPowers, RouteAgreementWithWitness) {
  auto R = make_ring({"x", "y", "z"});
  auto c = monomial_curve(R);
  Ideal s2 = component_symbolic_power(c, 2);
  std::mt19937_64 rng(73);
  for (int i = 0; i < 100; ++i) {
    Polynomial f = biased_sample(s2, rng, i);
    ASSERT_EQ(diff_power_member(f, c.prime, 2), is_member(f, s2)) << format(f);
  }
}

TEST(SymbolicPowers, Invariants) {
  auto R3 = make_ring({"x", "y", "z"});
  auto R4 = make_ring({"x", "y", "z", "w"});
  auto R2 = make_ring({"x", "y"});
  std::vector<DecomposedRadical> cases = {
      coordinate_cone(R3), two_planes(R4),
      decompose(PointConfiguration{R2, {pt({0, 0}), pt({1, 0}), pt({0, 1})}}),
      DecomposedRadical{{monomial_curve(R3)}, 2}};
  for (const auto& q : cases) {
    SymbolicPowerTable table(q);
    EXPECT_TRUE(equal(table.at(1), q.radical()));
    for (unsigned m = 1; m <= 3; ++m) {
      EXPECT_TRUE(contains(table.at(m), power(table.at(1), m)));
      EXPECT_TRUE(contains(table.at(m), table.at(m + 1)));
    }
  }
}

TEST(SymbolicPowers, GradedAxiom) {
  auto R = make_ring({"x", "y", "z"});
  EXPECT_TRUE(check_graded_axiom(family_symbolic(coordinate_cone(R)), 6).passed());
  auto R2 = make_ring({"x", "y"});
  PointConfiguration T{R2, {pt({0, 0}), pt({1, 0}), pt({0, 1})}};
  EXPECT_TRUE(check_graded_axiom(family_symbolic(T), 6).passed());
}
