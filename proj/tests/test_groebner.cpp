#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hesscoh/errors.hpp"
#include "hesscoh/generators.hpp"
#include "hesscoh/groebner.hpp"

using namespace hesscoh;

namespace {

Polynomial P(std::string_view text, int n) { return parsePolynomial(text, n); }

HessenbergFunction H(std::vector<int> v) { return HessenbergFunction::parse(v); }

GroebnerBasis gbOf(const HessenbergFunction& h, Mode mode, OrderKind kind = OrderKind::DegRevLex) {
  return buchberger(idealGenerators(h, mode).generators, MonomialOrder::standard(h.n(), kind));
}

std::vector<Polynomial> elementary(int n) {
  std::vector<Polynomial> out;
  for (int i = 1; i <= n; ++i) out.push_back(elementarySymmetric(n, i));
  return out;
}

// e_i(x) - e_i(t, 2t, ..., nt)
std::vector<Polynomial> equivariantBorel(int n) {
  std::vector<Polynomial> out;
  for (int i = 1; i <= n; ++i) {
    Polynomial weights = elementarySymmetric(n, i);
    std::vector<Rational> point;
    for (int k = 1; k <= n; ++k) point.emplace_back(k);
    point.emplace_back(0);
    out.push_back(elementarySymmetric(n, i) - pow(Polynomial::t(n), i) * evaluate(weights, point));
  }
  return out;
}

std::vector<std::int64_t> expectedOrdinarySeries(const HessenbergFunction& h) {
  std::vector<int> degrees;
  for (int j = 1; j <= h.n(); ++j) degrees.push_back(h(j) - j + 1);
  return productOfQIntegers(degrees);
}

// Independent count: monomials of each weight outside the monomial ideal.
std::vector<std::int64_t> bruteForceGradedCount(const std::vector<Monomial>& gens, int n, bool withT, int maxWeight) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(maxWeight) + 1, 0);
  std::vector<int> e(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto&& self, std::size_t slot, int remaining) -> void {
    if (slot == e.size()) {
      Monomial m(std::vector<int>(e.begin(), e.end() - 1), e.back());
      bool inIdeal = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
      if (!inIdeal) ++counts[static_cast<std::size_t>(m.totalWeight())];
      return;
    }
    int top = (slot + 1 == e.size() && !withT) ? 0 : remaining;
    for (int k = 0; k <= top; ++k) {
      e[slot] = k;
      self(self, slot + 1, remaining - k);
    }
    e[slot] = 0;
  };
  rec(rec, 0, maxWeight);
  return counts;
}

// Power series expansion of N(q)/(1-q)^k up to maxWeight.
std::vector<std::int64_t> expand(const HilbertData& hd, int maxWeight) {
  std::vector<std::int64_t> s(static_cast<std::size_t>(maxWeight) + 1, 0);
  for (std::size_t k = 0; k < hd.numerator.size() && k < s.size(); ++k) s[k] = hd.numerator[k];
  for (int power = 0; power < hd.denominatorPower; ++power) {
    for (std::size_t k = 1; k < s.size(); ++k) s[k] += s[k - 1];
  }
  return s;
}

}  // namespace

TEST_CASE("monomial orders") {
  auto drl = MonomialOrder::degrevlex(3);
  auto lex = MonomialOrder::lex(3);
  auto dl = MonomialOrder::deglex(3);
  Monomial a({1, 0, 1}, 0), b({0, 2, 0}, 0), c({2, 0, 0}, 1);
  CHECK(drl.greater(b, a));  // x2^2 > x1 x3 in degrevlex
  CHECK(dl.greater(a, b));   // x1 x3 > x2^2 in deglex
  CHECK(lex.greater(a, b));
  CHECK(drl.greater(c, a));
  CHECK(lex.greater(Monomial({1, 0, 0}, 0), Monomial({0, 5, 5}, 5)));
  CHECK_THROWS_AS(MonomialOrder(2, OrderKind::Lex, {Variable::x(1), Variable::x(1), Variable::t()}), Error);
  // Canonical display order is the standard degrevlex.
  for (const auto& [m1, m2] : std::vector<std::pair<Monomial, Monomial>>{{a, b}, {b, c}, {a, c}}) {
    CHECK((drl.compare(m1, m2) > 0) == (compareCanonical(m1, m2) > 0));
  }
}

TEST_CASE("normalForm") {
  auto gb = gbOf(HessenbergFunction::flag(3), Mode::Ordinary);
  for (const Polynomial& g : gb.basis()) CHECK(normalForm(g, gb).isZero());
  CHECK(normalForm(elementarySymmetric(3, 1) + elementarySymmetric(3, 2), gb).isZero());
  for (int n = 1; n <= 4; ++n) {
    for (const auto& h : enumerateAll(n)) {
      CHECK(normalForm(Polynomial::constant(n, 1), gbOf(h, Mode::Ordinary)) == Polynomial::constant(n, 1));
    }
  }
  // Division by a non-basis list.
  std::vector<Polynomial> divisors{P("x1 - x2", 2)};
  CHECK(normalForm(P("x1^2", 2), divisors, MonomialOrder::degrevlex(2)) == P("x2^2", 2));
}

TEST_CASE("buchberger") {
  std::vector<Polynomial> single{P("x1 - t", 1)};
  auto gb = buchberger(single, MonomialOrder::degrevlex(1));
  CHECK(gb.basis() == single);

  auto flag2 = gbOf(HessenbergFunction::flag(2), Mode::Ordinary);
  auto standard2 = standardMonomials(flag2);
  CHECK(standard2.size() == 2);
  CHECK(standard2 == std::vector<Monomial>{Monomial(2), Monomial({0, 1}, 0)});
  // With x2 ranked above x1 the surviving degree-one monomial is x1.
  MonomialOrder swapped(2, OrderKind::DegRevLex, {Variable::x(2), Variable::x(1), Variable::t()});
  auto flag2b = buchberger(idealGenerators(HessenbergFunction::flag(2), Mode::Ordinary).generators, swapped);
  CHECK(standardMonomials(flag2b) == std::vector<Monomial>{Monomial(2), Monomial({1, 0}, 0)});

  auto pet3 = gbOf(H({2, 3, 3}), Mode::Ordinary);
  CHECK(standardMonomials(pet3).size() == 4);
  CHECK(hilbertSeries(pet3).quotientDimension() == 4);

  // Reduced, monic, sorted.
  for (const Polynomial& g : pet3.basis()) CHECK(leadingCoefficient(g, pet3.order()) == Rational(1));
  auto lms = pet3.leadingMonomials();
  for (std::size_t a = 0; a < lms.size(); ++a) {
    if (a + 1 < lms.size()) CHECK(pet3.order().compare(lms[a], lms[a + 1]) < 0);
    for (std::size_t b = 0; b < lms.size(); ++b) {
      if (a == b) continue;
      for (const Term& term : pet3.basis()[b].terms()) CHECK_FALSE(lms[a].divides(term.monomial));
    }
  }
}

TEST_CASE("buchberger is deterministic") {
  auto gens = idealGenerators(HessenbergFunction::flag(4), Mode::Equivariant).generators;
  auto a = buchberger(gens, MonomialOrder::degrevlex(4));
  auto b = buchberger(gens, MonomialOrder::degrevlex(4));
  CHECK(a.basis() == b.basis());
  CHECK(a.stats().pairsProcessed == b.stats().pairsProcessed);
}

TEST_CASE("pair budget") {
  auto gens = idealGenerators(HessenbergFunction::flag(4), Mode::Equivariant).generators;
  GroebnerOptions tight;
  tight.pairBudget = 1;
  try {
    buchberger(gens, MonomialOrder::degrevlex(4), tight);
    FAIL("expected resource limit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
}

TEST_CASE("idealMembership") {
  auto gb = gbOf(HessenbergFunction::flag(3), Mode::Ordinary);
  CHECK(idealMembership(Polynomial(3), gb));
  for (int r = 1; r <= 3; ++r) CHECK(idealMembership(powerSum(3, r), gb));
  CHECK_FALSE(idealMembership(P("x1", 3), gbOf(H({2, 3, 3}), Mode::Ordinary)));
}

TEST_CASE("idealEquality") {
  for (int n = 1; n <= 4; ++n) {
    auto order = MonomialOrder::degrevlex(n);
    auto flag = idealGenerators(HessenbergFunction::flag(n), Mode::Ordinary).generators;
    CHECK(idealEquality(flag, elementary(n), order));
    auto eqFlag = idealGenerators(HessenbergFunction::flag(n), Mode::Equivariant).generators;
    CHECK(idealEquality(eqFlag, equivariantBorel(n), order));
    CHECK(idealEquality(flag, flag, order));
  }
  // Dropping a generator changes the ideal.
  auto order = MonomialOrder::degrevlex(3);
  auto e = elementary(3);
  std::vector<Polynomial> partial{e[0], e[1]};
  CHECK_FALSE(idealEquality(e, partial, order));
}

TEST_CASE("standardMonomials") {
  std::vector<Polynomial> x1{P("x1", 1)};
  CHECK(standardMonomials(buchberger(x1, MonomialOrder::degrevlex(1))) == std::vector<Monomial>{Monomial(1)});
  CHECK(standardMonomials(gbOf(HessenbergFunction::flag(3), Mode::Ordinary)).size() == 6);
  CHECK(standardMonomials(gbOf(HessenbergFunction::identity(3), Mode::Ordinary)) == std::vector<Monomial>{Monomial(3)});
  try {
    standardMonomials(gbOf(H({2, 3, 3}), Mode::Equivariant));
    FAIL("expected not-zero-dimensional");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotZeroDimensional);
  }
}

TEST_CASE("hilbertSeries") {
  std::vector<Polynomial> single{P("x1 - t", 1)};
  auto line = hilbertSeries(buchberger(single, MonomialOrder::degrevlex(1)));
  CHECK(line.numerator == std::vector<std::int64_t>{1});
  CHECK(line.denominatorPower == 1);
  CHECK_FALSE(line.quotientDimension().has_value());

  CHECK(hilbertSeries(gbOf(H({2, 3, 3}), Mode::Ordinary)).numerator == std::vector<std::int64_t>{1, 2, 1});
  CHECK(hilbertSeries(gbOf(HessenbergFunction::flag(3), Mode::Ordinary)).numerator ==
        std::vector<std::int64_t>{1, 2, 2, 1});

  for (int n = 1; n <= 4; ++n) {
    for (const auto& h : enumerateAll(n)) {
      HilbertData eq = hilbertSeries(gbOf(h, Mode::Equivariant));
      CHECK(eq.numerator == expectedOrdinarySeries(h));
      CHECK(eq.denominatorPower == 1);
    }
  }

  std::vector<Polynomial> inhomogeneous{P("x1^2 - x2", 2)};
  CHECK_THROWS_AS(hilbertSeries(buchberger(inhomogeneous, MonomialOrder::degrevlex(2))), Error);
}

TEST_CASE("Hilbert series of monomial ideals matches brute-force counting") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> exponent(0, 3), count(0, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3;
    const bool withT = trial % 2 == 0;
    std::vector<Monomial> gens;
    int k = count(rng);
    for (int g = 0; g < k; ++g) {
      std::vector<int> xs{exponent(rng), exponent(rng), exponent(rng)};
      Monomial m(xs, withT ? exponent(rng) : 0);
      if (!m.isOne()) gens.push_back(m);
    }
    std::vector<bool> active{true, true, true, withT};
    HilbertData hd = hilbertSeriesOfMonomialIdeal(gens, active);
    CHECK(expand(hd, 9) == bruteForceGradedCount(gens, n, withT, 9));
  }
}

TEST_CASE("S-pair criterion holds on computed bases") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& h : enumerateAll(n)) {
      CHECK(satisfiesBuchbergerCriterion(gbOf(h, Mode::Ordinary)));
      CHECK(satisfiesBuchbergerCriterion(gbOf(h, Mode::Equivariant)));
    }
  }
  for (const auto& h : {H({2, 3, 4, 4}), H({3, 3, 4, 4}), H({2, 4, 4, 4}), H({2, 3, 4, 5, 5})}) {
    CHECK(satisfiesBuchbergerCriterion(gbOf(h, Mode::Ordinary)));
    CHECK(satisfiesBuchbergerCriterion(gbOf(h, Mode::Equivariant)));
  }
}

TEST_CASE("normalForm is idempotent") {
  auto gb = gbOf(H({2, 3, 4, 4}), Mode::Equivariant);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> e(0, 2), c(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Term> terms;
    for (int k = 0; k < 5; ++k) terms.push_back(Term{Monomial({e(rng), e(rng), e(rng), e(rng)}, e(rng)), c(rng)});
    Polynomial f = Polynomial::fromTerms(4, terms);
    Polynomial r = normalForm(f, gb);
    CHECK(normalForm(r, gb) == r);
    CHECK(idealMembership(f - r, gb));
  }
}

TEST_CASE("quotient invariants do not depend on the order") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& h : enumerateAll(n)) {
      HilbertData a = hilbertSeries(gbOf(h, Mode::Ordinary, OrderKind::DegRevLex));
      HilbertData b = hilbertSeries(gbOf(h, Mode::Ordinary, OrderKind::DegLex));
      CHECK(a == b);
    }
  }
}

TEST_CASE("quotient dimension is the product of h(j) - j + 1") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& h : enumerateAll(n)) {
      std::int64_t product = 1;
      for (int j = 1; j <= n; ++j) product *= h(j) - j + 1;
      auto gb = gbOf(h, Mode::Ordinary);
      CHECK_MESSAGE(hilbertSeries(gb).quotientDimension() == product, h.toString());
      CHECK(static_cast<std::int64_t>(standardMonomials(gb).size()) == product);
    }
  }
}

TEST_CASE("equivariant series times (1 - q) is the ordinary series") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& h : enumerateAll(n)) {
      CHECK(hilbertSeries(gbOf(h, Mode::Equivariant)).timesOneMinusQ() == hilbertSeries(gbOf(h, Mode::Ordinary)));
    }
  }
}

TEST_CASE("lex bases agree on membership") {
  auto h = H({2, 3, 3});
  auto gens = idealGenerators(h, Mode::Ordinary).generators;
  auto lexGb = buchberger(gens, MonomialOrder::lex(3));
  auto drlGb = buchberger(gens, MonomialOrder::degrevlex(3));
  for (const auto& g : lexGb.basis()) CHECK(idealMembership(g, drlGb));
  for (const auto& g : drlGb.basis()) CHECK(idealMembership(g, lexGb));
}
