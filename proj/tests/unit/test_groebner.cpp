#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "linear_oracle.hpp"
#include "seqcm/ideal.hpp"

using namespace seqcm;

namespace {

RingPtr xyz() { return make_ring({"x", "y", "z"}); }

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(P(g, r));
  return Ideal(r, std::move(ps));
}

// Random homogeneous polynomial of the given degree with a few terms.
Polynomial random_form(std::mt19937_64& rng, const RingPtr& r, unsigned degree, int terms) {
  auto monos = oracle::monomials_of_degree(r->num_vars(), degree);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i)
    ts.push_back({r->field().element(static_cast<std::int64_t>(rng() % 31) - 15),
                  monos[rng() % monos.size()]});
  return Polynomial::from_terms(r, std::move(ts));
}

Ideal random_homogeneous_ideal(std::mt19937_64& rng, const RingPtr& r) {
  std::vector<Polynomial> gens;
  const int n = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < n; ++i)
    gens.push_back(random_form(rng, r, 1 + static_cast<unsigned>(rng() % 2), 1 + static_cast<int>(rng() % 3)));
  return Ideal(r, std::move(gens));
}

}  // namespace

TEST(DivideTest, Examples) {
  auto r = xyz();
  auto g = std::vector<Polynomial>{P("x", r)};
  auto d1 = divide(P("x^2*y", r), g, MonomialOrder::grevlex());
  EXPECT_EQ(d1.quotients[0], P("x*y", r));
  EXPECT_TRUE(d1.remainder.is_zero());

  auto d2 = divide(P("y", r), g, MonomialOrder::grevlex());
  EXPECT_EQ(d2.remainder, P("y", r));

  std::vector<Polynomial> g3{P("x^2-z", r), P("y+z", r)};
  auto d3 = divide(P("x^2+y", r), g3, MonomialOrder::grevlex());
  EXPECT_TRUE(d3.remainder.is_zero());
  EXPECT_EQ(d3.quotients[0] * g3[0] + d3.quotients[1] * g3[1], P("x^2+y", r));
}

TEST(DivideTest, RemainderInvariants) {
  std::mt19937_64 rng(5);
  auto r = xyz();
  for (int it = 0; it < 100; ++it) {
    Polynomial f = random_form(rng, r, 3, 5) + random_form(rng, r, 2, 3);
    std::vector<Polynomial> gs{random_form(rng, r, 1, 2), random_form(rng, r, 2, 3)};
    if (gs[0].is_zero() || gs[1].is_zero()) continue;
    auto d = divide(f, gs, MonomialOrder::grevlex());
    Polynomial recomposed = d.remainder;
    for (std::size_t i = 0; i < gs.size(); ++i) recomposed = recomposed + d.quotients[i] * gs[i];
    EXPECT_EQ(recomposed, f);
    for (const auto& t : d.remainder.terms())
      for (const auto& g : gs) EXPECT_FALSE(g.leading_monomial().divides(t.mono));
  }
}

TEST(DivideTest, Errors) {
  auto r = xyz();
  std::vector<Polynomial> none;
  EXPECT_THROW(divide(P("x", r), none, MonomialOrder::grevlex()), InvalidArgument);
  std::vector<Polynomial> other{P("x", make_ring({"x", "y"}))};
  EXPECT_THROW(divide(P("x", r), other, MonomialOrder::grevlex()), RingMismatch);
}

TEST(BuchbergerTest, MonomialIdealIsItsOwnBasis) {
  auto r = xyz();
  std::vector<Polynomial> g{P("x^2", r), P("x*y", r)};
  auto gb = buchberger(g, MonomialOrder::grevlex());
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb[0], P("x*y", r));
  EXPECT_EQ(gb[1], P("x^2", r));
}

TEST(BuchbergerTest, SPairProducesCubicInZ) {
  auto r = xyz();
  std::vector<Polynomial> g{P("x*z-z^2", r), P("y*z", r), P("x^2", r), P("x*y", r), P("y^2", r)};
  auto gb = buchberger(g, MonomialOrder::grevlex());
  EXPECT_NE(std::find(gb.begin(), gb.end(), P("z^3", r)), gb.end());
  // oracle: z^3 lies in the degree-3 span of monomial multiples of the inputs
  EXPECT_TRUE(oracle::member(P("z^3", r), g));
  EXPECT_TRUE(is_groebner_basis(gb, MonomialOrder::grevlex()));
}

TEST(BuchbergerTest, RowReduction) {
  auto r = xyz();
  std::vector<Polynomial> g{P("x+y", r), P("y", r)};
  auto gb = buchberger(g, MonomialOrder::grevlex());
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb[0], P("y", r));
  EXPECT_EQ(gb[1], P("x", r));
  EXPECT_TRUE(buchberger(std::vector<Polynomial>{}, MonomialOrder::grevlex()).empty());
}

TEST(BuchbergerTest, ReducedBasisIsPresentationIndependent) {
  std::mt19937_64 rng(11);
  auto r = xyz();
  for (int it = 0; it < 40; ++it) {
    Ideal a = random_homogeneous_ideal(rng, r);
    // a second presentation: add random combinations of the generators
    std::vector<Polynomial> gens = a.generators();
    std::vector<Polynomial> other = gens;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (i != j) {
          int dd = gens[j].degree() - gens[i].degree();
          if (dd >= 0) other[j] = other[j] + random_form(rng, r, static_cast<unsigned>(dd), 2) * gens[i];
        }
    std::reverse(other.begin(), other.end());
    for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      auto g1 = buchberger(gens, ord), g2 = buchberger(other, ord);
      EXPECT_EQ(g1, g2);
      EXPECT_TRUE(is_groebner_basis(g1, ord));
      for (const auto& g : g1) EXPECT_EQ(g.leading_coefficient().value, 1u);
    }
  }
}

TEST(IdealTest, PowerExamples) {
  auto r = xyz();
  EXPECT_TRUE(ideal_equal(ideal_power(I(r, {"x", "y"}), 2), I(r, {"x^2", "x*y", "y^2"})));
  EXPECT_TRUE(ideal_equal(ideal_power(I(r, {"x+z", "y"}), 1), I(r, {"x+z", "y"})));
  auto sq = ideal_power(I(r, {"x+z", "y"}), 2);
  EXPECT_TRUE(ideal_equal(sq, I(r, {"x^2+2*x*z+z^2", "x*y+y*z", "y^2"})));
  EXPECT_EQ(sq.generators().size(), 3u);
  EXPECT_TRUE(ideal_power(I(r, {"x"}), 0).is_unit());
}

TEST(IdealTest, IntersectExamples) {
  auto r = xyz();
  EXPECT_TRUE(ideal_equal(ideal_intersect(I(r, {"x"}), I(r, {"y"})), I(r, {"x*y"})));
  Ideal meet = ideal_intersect(I(r, {"z"}), I(r, {"x", "y"}));
  EXPECT_TRUE(ideal_equal(meet, I(r, {"x*z", "y*z"})));
  // independent check of the same equality
  EXPECT_EQ(oracle::equal(meet.generators(), I(r, {"x*z", "y*z"}).generators()), true);
  Ideal a = I(r, {"x^2+y*z", "x*y"});
  EXPECT_TRUE(ideal_equal(ideal_intersect(a, a), a));
}

TEST(IdealTest, IntersectProperties) {
  std::mt19937_64 rng(17);
  auto r = xyz();
  for (int it = 0; it < 25; ++it) {
    Ideal a = random_homogeneous_ideal(rng, r), b = random_homogeneous_ideal(rng, r);
    Ideal meet = ideal_intersect(a, b);
    EXPECT_TRUE(ideal_contains(a, meet));
    EXPECT_TRUE(ideal_contains(b, meet));
    EXPECT_TRUE(ideal_contains(meet, a * b));
    EXPECT_TRUE(is_groebner_basis(meet.groebner_basis(), MonomialOrder::grevlex()));
    EXPECT_EQ(meet.groebner_basis(), buchberger(meet.generators(), MonomialOrder::grevlex()));
  }
}

TEST(IdealTest, ColonExamples) {
  auto r = xyz();
  EXPECT_TRUE(ideal_equal(ideal_colon(I(r, {"x*z", "y*z"}), P("z", r)), I(r, {"x", "y"})));
  Ideal a = I(r, {"x^2+y*z", "x*y"});
  EXPECT_TRUE(ideal_equal(ideal_colon(a, P("1", r)), a));
  EXPECT_TRUE(ideal_equal(ideal_colon(I(r, {"x^2"}), P("x", r)), I(r, {"x"})));
  EXPECT_THROW(ideal_colon(a, Polynomial(r)), DivisionByZero);
  EXPECT_TRUE(ideal_colon(a, Ideal::zero(r)).is_unit());
}

TEST(IdealTest, ColonByIdealIsIntersectionOfColons) {
  auto r = xyz();
  Ideal a = I(r, {"x*z", "y*z"});
  Ideal col = ideal_colon(a, I(r, {"x", "y"}));
  EXPECT_TRUE(ideal_equal(col, I(r, {"z"})));
}

TEST(IdealTest, ColonRoundTrip) {
  std::mt19937_64 rng(23);
  auto r = xyz();
  for (int it = 0; it < 25; ++it) {
    Ideal a = random_homogeneous_ideal(rng, r);
    Polynomial f = random_form(rng, r, 1, 2);
    if (f.is_zero()) continue;
    Ideal col = ideal_colon(a, f);
    for (const auto& g : col.generators()) EXPECT_TRUE(a.contains(g * f));
    EXPECT_TRUE(ideal_contains(col, a));
  }
}

TEST(IdealTest, SaturationExamples) {
  auto r = xyz();
  Ideal m = Ideal::maximal(r);
  Ideal a = I(r, {"x*z", "y*z"});
  EXPECT_TRUE(ideal_equal(ideal_colon(a, m), a));
  EXPECT_TRUE(ideal_equal(ideal_saturation(a, m), a));
  auto r2 = make_ring({"x", "y"});
  EXPECT_TRUE(ideal_equal(ideal_saturation(I(r2, {"x^2", "x*y"}), Ideal::maximal(r2)), I(r2, {"x"})));
  EXPECT_TRUE(ideal_saturation(Ideal::unit(r), m).is_unit());
}

TEST(IdealTest, EqualityAndMembership) {
  auto r = xyz();
  EXPECT_TRUE(ideal_equal(I(r, {"x", "y"}), I(r, {"y", "x+y"})));
  EXPECT_TRUE(ideal_membership(P("x*y", r), I(r, {"x^2", "y"})));
  EXPECT_FALSE(ideal_membership(P("x", r), I(r, {"x^2"})));
  EXPECT_THROW(ideal_equal(I(r, {"x"}), Ideal::unit(make_ring({"x"}))), RingMismatch);
}

TEST(IdealTest, MembershipAgreesWithLinearAlgebraOracle) {
  std::mt19937_64 rng(31);
  auto r = xyz();
  int members = 0;
  for (int it = 0; it < 30; ++it) {
    Ideal a = random_homogeneous_ideal(rng, r);
    for (unsigned d = 1; d <= 6; ++d) {
      // half the probes are forced members
      Polynomial f = random_form(rng, r, d, 3);
      const auto& g = a.generators()[rng() % a.generators().size()];
      if (rng() % 2 && static_cast<int>(d) >= g.degree())
        f = random_form(rng, r, d - static_cast<unsigned>(g.degree()), 2) * g;
      bool engine = a.contains(f);
      members += engine;
      EXPECT_EQ(engine, oracle::member(f, a.generators())) << to_string(f);
    }
  }
  EXPECT_GT(members, 10);
}

TEST(IdealTest, EliminationProjectsOntoRemainingVariables) {
  auto r = xyz();
  // x - y^2, z - y^3 ; eliminating y leaves the twisted-cubic relation x^3 - z^2
  Ideal a = I(r, {"x-y^2", "z-y^3"});
  std::vector<std::size_t> drop{1};
  Ideal e = eliminate(a, drop);
  ASSERT_EQ(e.ring()->variable_names(), (std::vector<std::string>{"x", "z"}));
  EXPECT_TRUE(ideal_equal(e, Ideal(e.ring(), {parse_polynomial("x^3-z^2", e.ring())})));
}

TEST(IdealTest, ConcurrentBasisRequestsAgree) {
  auto r = make_ring({"a", "b", "c", "d"});
  Ideal a(r, {P("a*b-c*d", r), P("a^2*c-b^3", r), P("b*c^2-a*d^2", r)});
  std::vector<std::vector<Polynomial>> seen(4);
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i)
    threads.emplace_back([&, i] { seen[static_cast<std::size_t>(i)] = a.groebner_basis(); });
  for (auto& t : threads) t.join();
  for (const auto& s : seen) EXPECT_EQ(s, seen.front());
  EXPECT_EQ(&a.groebner_basis(), &Ideal(a).groebner_basis());
}

TEST(IdealTest, EqualityAuditRecordsVerdicts) {
  auto r = xyz();
  EqualityAudit audit;
  ideal_equal(I(r, {"x"}), I(r, {"x"}));
  ideal_equal(I(r, {"x"}), I(r, {"y"}));
  ASSERT_EQ(audit.records().size(), 2u);
  EXPECT_TRUE(audit.records()[0].equal);
  EXPECT_FALSE(audit.records()[1].equal);
}
