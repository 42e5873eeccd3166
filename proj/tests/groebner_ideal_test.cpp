#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/random.hpp"
#include "symlab/symlab.hpp"

using namespace symlab;
using testing_support::random_polynomial;

namespace {

Polynomial P(const std::string& text, const RingPtr& ring) { return parse_polynomial(text, ring); }
Ideal I(const std::string& text, const RingPtr& ring) { return Ideal::parse(text, ring); }

std::vector<Polynomial> polys(const std::string& text, const RingPtr& ring) {
  return parse_polynomial_list(text, ring);
}

// Fixed examples for the invariant suites.
std::vector<std::pair<RingPtr, std::string>> fixed_examples() {
  auto R2 = make_ring({"x", "y"});
  auto R3 = make_ring({"x", "y", "z"});
  return {
      {R2, "x^2+y^2-1, x-y"},
      {R2, "x^3-2*x*y, x^2*y-2*y^2+x"},
      {R3, "x*y, x*z, y*z"},
      {R3, "x^2+y+z-1, x+y^2+z-1, x+y+z^2-1"},
      {R3, "x*y-z^2, y^2-x*z, x^2*y-z"},
      {R3, "x-y^2, y-z^3, x*z+1"},
  };
}

} // namespace

TEST(NormalForm, Examples) {
  auto R = make_ring({"x", "y"});
  auto grevlex = MonomialOrder::grevlex();
  EXPECT_EQ(normal_form(P("x^2*y", R), polys("x^2-y", R), grevlex), P("y^2", R));
  EXPECT_TRUE(normal_form(P("x^5*y-3", R), polys("1", R), MonomialOrder::lex()).is_zero());
  EXPECT_EQ(normal_form(P("y", R), polys("x", R), MonomialOrder::lex()), P("y", R));
  EXPECT_THROW(normal_form(P("y", R), {Polynomial::constant(R, 0)}, grevlex), precondition_violation);
}

TEST(Buchberger, Examples) {
  auto R = make_ring({"x", "y"});
  EXPECT_EQ(buchberger(polys("x^2+y^2-1, x-y", R), MonomialOrder::lex()), polys("x-y, y^2-1/2", R));
  EXPECT_EQ(buchberger(polys("x-1", R), MonomialOrder::grevlex()), polys("x-1", R));
  EXPECT_TRUE(buchberger({}, MonomialOrder::grevlex()).empty());
  EXPECT_EQ(buchberger(polys("2*x+4, x*y-7", R), MonomialOrder::grevlex()), polys("x+2, y+7/2", R));
  EXPECT_EQ(buchberger(polys("2*x+4, x*y-7, y^2", R), MonomialOrder::grevlex()), polys("1", R));
  auto R3 = make_ring({"x", "y", "z"});
  EXPECT_EQ(buchberger(polys("x*y, x*z, y*z", R3), MonomialOrder::grevlex()), polys("x*y, x*z, y*z", R3));
}

TEST(Buchberger, BudgetExhaustion) {
  auto R = make_ring({"x", "y", "z"});
  EXPECT_THROW(buchberger(polys("x^2+y+z-1, x+y^2+z-1, x+y+z^2-1", R), MonomialOrder::lex(), {3}),
               budget_exhausted);
}

TEST(Membership, Examples) {
  auto R = make_ring({"x", "y", "z"});
  Ideal q = I("x*y, x*z, y*z", R);
  EXPECT_TRUE(is_member(P("x*y*z", R), q));
  EXPECT_FALSE(is_member(P("x*y*z", R), power(q, 2)));
  EXPECT_TRUE(is_member(Polynomial::constant(R, 0), q));
  EXPECT_TRUE(is_member(Polynomial::constant(R, 0), Ideal::zero(R)));
  EXPECT_FALSE(is_member(P("x", R), Ideal::zero(R)));
  EXPECT_TRUE(contains(q, q));
  EXPECT_TRUE(contains(I("x", R), I("x^2", R)));
  auto w = containment_witness(power(q, 2), I("x*y*z, x^2*y^2", R));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, P("x*y*z", R));
}

TEST(Buchberger, PermutationUniqueness) {
  std::mt19937_64 rng(3);
  for (const auto& [ring, text] : fixed_examples()) {
    auto gens = polys(text, ring);
    for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      auto reference = buchberger(gens, order);
      for (int i = 0; i < 100; ++i) {
        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        // Scaling and adding a redundant combination must not change the basis either.
        for (auto& g : shuffled) g = g * Rational(static_cast<long>(rng() % 7 + 1));
        if (i % 4 == 0 && shuffled.size() > 1) shuffled.push_back(shuffled[0] * shuffled[1] + shuffled[1]);
        ASSERT_EQ(buchberger(shuffled, order), reference) << text;
      }
    }
  }
}

TEST(Buchberger, SPolynomialsReduceToZero) {
  for (const auto& [ring, text] : fixed_examples())
    for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(1)}) {
      auto basis = buchberger(polys(text, ring), order);
      EXPECT_TRUE(is_groebner_basis(basis, order)) << text;
      for (const auto& g : basis) EXPECT_EQ(g.leading_term(order).coefficient, Rational(1));
    }
  auto R = make_ring({"x", "y"});
  EXPECT_FALSE(is_groebner_basis(polys("x^2-y, x*y-1", R), MonomialOrder::grevlex()));
}

TEST(Membership, SoundnessRandom) {
  std::mt19937_64 rng(41);
  for (const auto& [ring, text] : fixed_examples()) {
    Ideal ideal = I(text, ring);
    const auto& gens = ideal.generators();
    for (int i = 0; i < 20; ++i) {
      Polynomial f = gens[rng() % gens.size()] * random_polynomial(ring, rng, 2, 3);
      Polynomial g = gens[rng() % gens.size()] * random_polynomial(ring, rng, 2, 3);
      ASSERT_TRUE(is_member(f, ideal));
      ASSERT_TRUE(is_member(f + g, ideal));
      ASSERT_TRUE(is_member(f * random_polynomial(ring, rng, 3, 4), ideal));
    }
  }
}

TEST(Containment, PartialOrder) {
  auto R = make_ring({"x", "y", "z"});
  std::vector<Ideal> pool = {I("x", R),         I("x^2", R),        I("x, y", R),    I("x*y, x*z, y*z", R),
                             I("x^2, y", R),    I("x*y*z", R),      I("x+y, z", R),  I("x^2-y^2, z^3", R),
                             I("x, y, z", R),   I("(x+y)^2, z", R)};
  for (const auto& a : pool) EXPECT_TRUE(contains(a, a));
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& c : pool)
        if (contains(a, b) && contains(b, c)) ASSERT_TRUE(contains(a, c));
  for (const auto& a : pool)
    for (const auto& b : pool)
      if (contains(a, b) && contains(b, a)) ASSERT_EQ(a.groebner_basis(), b.groebner_basis());
}

TEST(IdealOps, SumProductPower) {
  auto R = make_ring({"x", "y"});
  EXPECT_TRUE(equal(power(I("x, y", R), 2), I("x^2, x*y, y^2", R)));
  EXPECT_TRUE(equal(product(I("x", R), I("y", R)), I("x*y", R)));
  EXPECT_TRUE(equal(power(I("x^2-y, x*y", R), 1), I("x^2-y, x*y", R)));
  EXPECT_TRUE(power(I("x", R), 0).is_unit());
  EXPECT_TRUE(equal(sum(I("x", R), I("y", R)), I("x, y", R)));
  EXPECT_THROW(sum(I("x", R), I("x", make_ring({"x", "z"}))), ring_mismatch);
}

TEST(IdealOps, Intersect) {
  auto R = make_ring({"x", "y", "z"});
  EXPECT_TRUE(equal(intersect(I("x", R), I("y", R)), I("x*y", R)));
  Ideal a = I("x^2-y, y*z", R);
  EXPECT_TRUE(equal(intersect(a, a), a));
  Ideal three = intersect({power(I("x, y", R), 2), power(I("x, z", R), 2), power(I("y, z", R), 2)});
  EXPECT_TRUE(equal(three, I("x^2*y^2, x^2*z^2, y^2*z^2, x*y*z", R)));
  EXPECT_TRUE(is_member(P("x*y*z", R), three));
  EXPECT_TRUE(intersect(I("x", R), Ideal::zero(R)).is_zero());
}

TEST(IdealOps, Quotient) {
  auto R = make_ring({"x", "y", "z"});
  EXPECT_TRUE(equal(quotient(I("x*y", R), I("x", R)), I("y", R)));
  Ideal a = I("x^2-y*z, x*y", R);
  EXPECT_TRUE(equal(quotient(a, Ideal::unit(R)), a));
  EXPECT_TRUE(equal(quotient(I("x^2, x*y", R), I("x", R)), I("x, y", R)));
  EXPECT_THROW(quotient(a, Ideal::zero(R)), precondition_violation);
}

TEST(IdealOps, Saturate) {
  auto R = make_ring({"x", "y", "z"});
  auto s = saturate(I("x^2*y", R), I("x", R));
  EXPECT_TRUE(equal(s.ideal, I("y", R)));
  EXPECT_EQ(s.exponent, 2u);
  Ideal a = I("x^2-y, y*z", R);
  s = saturate(a, Ideal::unit(R));
  EXPECT_TRUE(equal(s.ideal, a));
  EXPECT_EQ(s.exponent, 0u);
  s = saturate(intersect(power(I("x, y", R), 2), I("z", R)), I("z", R));
  EXPECT_TRUE(equal(s.ideal, power(I("x, y", R), 2)));
  EXPECT_EQ(s.exponent, 1u);
}

TEST(IdealOps, Eliminate) {
  auto R = make_ring({"t", "x", "y"});
  EXPECT_TRUE(equal(eliminate(I("x-t^2, y-t^3", R), std::vector<std::string>{"t"}), I("y^2-x^3", R)));
  Ideal a = I("x-t^2, y-t^3", R);
  EXPECT_TRUE(equal(eliminate(a, std::vector<std::size_t>{}), a));
  EXPECT_TRUE(eliminate(I("t", R), std::vector<std::string>{"t"}).is_zero());
  EXPECT_THROW(eliminate(a, std::vector<std::string>{"w"}), std::exception);
}

TEST(IdealOps, RadicalMembership) {
  auto R = make_ring({"x", "y"});
  EXPECT_TRUE(radical_member(P("x", R), I("x^2", R)));
  EXPECT_FALSE(radical_member(P("y", R), I("x^2", R)));
  EXPECT_TRUE(radical_member(P("x", R), I("x^3, x^2*y", R)));
  EXPECT_TRUE(radical_member(P("x+y", R), I("(x+y)^3*(x-y), (x+y)^4", R)));
  auto W = make_ring({"w", "x"});
  EXPECT_TRUE(radical_member(P("w*x", W), I("w^2*x^2", W)));
}

TEST(IdealOps, Colength) {
  auto R = make_ring({"x", "y"});
  EXPECT_EQ(colength(I("x, y", R)), 1u);
  EXPECT_EQ(colength(I("x^2, y^3", R)), 6u);
  EXPECT_EQ(colength(I("x", R)), std::nullopt);
  EXPECT_EQ(colength(Ideal::unit(R)), 0u);
  EXPECT_EQ(colength(I("x^2+y^2-1, x-y", R)), 2u);
  for (unsigned k = 1; k <= 10; ++k) EXPECT_EQ(colength(power(I("x, y", R), k)), k * (k + 1) / 2) << k;
}

TEST(IdealOps, ElementwiseSemanticsRandom) {
  auto R = make_ring({"x", "y", "z"});
  Ideal a = I("x^2-y, x*z", R), b = I("y*z, x+z^2", R);
  Ideal meet = intersect(a, b);
  EXPECT_TRUE(contains(a, meet));
  EXPECT_TRUE(contains(b, meet));
  Ideal colon = quotient(a, b);
  EXPECT_TRUE(contains(a, product(colon, b)));
  EXPECT_TRUE(contains(colon, a));
  Ideal c = I("x^2*y, x*y^2*z", R), by = I("x", R);
  auto sat = saturate(c, by);
  EXPECT_TRUE(equal(quotient(sat.ideal, by), sat.ideal));
  std::mt19937_64 rng(59);
  Ideal ab = product(a, b);
  for (int i = 0; i < 200; ++i) {
    // Mix plain random elements with elements of a, b and a·b so both answers occur.
    Polynomial f = random_polynomial(R, rng, 3, 3);
    switch (i % 4) {
      case 1: f = a.generators()[rng() % 2] * f; break;
      case 2: f = b.generators()[rng() % 2] * f; break;
      case 3: f = ab.generators()[rng() % ab.generators().size()] * f; break;
      default: break;
    }
    bool in_a = is_member(f, a), in_b = is_member(f, b);
    ASSERT_EQ(is_member(f, meet), in_a && in_b) << format(f);
    Polynomial g = random_polynomial(R, rng, 2, 3);
    // f ∈ (a : b) iff f·b ⊆ a.
    bool in_colon = true;
    for (const auto& h : b.generators()) in_colon = in_colon && is_member(f * h, a);
    ASSERT_EQ(is_member(f, colon), in_colon) << format(f);
    // f ∈ (c : x^∞) iff x^k f ∈ c for k = stabilization exponent.
    Polynomial xk = Polynomial::variable(R, 0).pow(sat.exponent);
    ASSERT_EQ(is_member(g, sat.ideal), is_member(g * xk, c)) << format(g);
  }
}

TEST(IdealOps, PowerIsGraded) {
  auto R = make_ring({"x", "y"});
  Ideal a = I("x^2-y, x*y^2", R);
  for (unsigned i = 1; i <= 3; ++i)
    for (unsigned j = 1; i + j <= 4; ++j)
      EXPECT_TRUE(equal(product(power(a, i), power(a, j)), power(a, i + j)));
}

TEST(Ideal, WorkingOrder) {
  auto R = make_ring({"x", "y"});
  Ideal a = I("x^3, y-x-x^2/2", R).with_working_order(MonomialOrder::lex().with_priority({1, 0}));
  EXPECT_EQ(colength(a), 3u);
  EXPECT_TRUE(is_member(P("y^3", R), a));
  EXPECT_FALSE(is_member(P("x^2", R), a));
}
