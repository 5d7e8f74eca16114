#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "hesscoh/errors.hpp"
#include "hesscoh/generators.hpp"
#include "hesscoh/polynomial.hpp"
#include "hesscoh/serialize.hpp"
#include "random_poly.hpp"

using namespace hesscoh;

namespace {

Polynomial P(std::string_view text, int n) { return parsePolynomial(text, n); }

ErrorKind kindOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  Rational a(6, -4);
  CHECK(a.numerator() == "-3");
  CHECK(a.denominator() == "2");
  CHECK(a.toFraction() == "-3/2");
  CHECK(Rational(0).toFraction() == "0/1");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK(kindOf([] { Rational::parse("1/0"); }) == ErrorKind::Parse);
  CHECK(kindOf([] { Rational::parse("1.5"); }) == ErrorKind::Parse);
  CHECK(kindOf([] { (void)(Rational(1) / Rational(0)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("add") {
  const int n = 4;
  CHECK((P("x1", n) + P("-x1", n)).isZero());
  CHECK(P("x1 - t", n) + P("x2 - 2t", n) == P("x1 + x2 - 3t", n));
  CHECK(p(1, n) + P("x2 - 2t", n) == p(2, n));
  CHECK(kindOf([] { (void)(Polynomial::x(2, 1) + Polynomial::x(3, 1)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("mul") {
  const int n = 4;
  CHECK(P("x1 - t", n) * Polynomial::constant(n, 1) == P("x1 - t", n));
  CHECK(P("x1 - x2 - t", n) * P("x1 - t", n) == fInductive(2, 1, n));
  CHECK(P("x1 + x2", n) * P("x1 - x2", n) == P("x1^2 - x2^2", n));
  CHECK(kindOf([] { (void)(Polynomial::x(2, 1) * Polynomial::x(3, 1)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("degree of a product is the sum of degrees") {
  testing::RandomPolynomials gen(3);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial a = gen.next(), b = gen.next();
    if (a.isZero() || b.isZero()) continue;
    CHECK(*(a * b).totalDegree() == *a.totalDegree() + *b.totalDegree());
  }
}

TEST_CASE("substitute") {
  SUBCASE("p_n vanishes at every permutation point") {
    const int n = 4;
    std::vector<int> w{3, 1, 4, 2};
    Substitution s;
    for (int k = 1; k <= n; ++k) s.emplace(Variable::x(k), Polynomial::t(n) * Rational(w[static_cast<std::size_t>(k - 1)]));
    CHECK(substitute(p(n, n), s).isZero());
  }
  SUBCASE("f_{2,1} at w = 21") {
    const int n = 2;
    Substitution s{{Variable::x(1), P("2t", n)}, {Variable::x(2), P("t", n)}};
    CHECK(substitute(fInductive(2, 1, n), s).isZero());
  }
  SUBCASE("x1 x2 with x1 -> x2") {
    CHECK(substitute(P("x1*x2", 2), {{Variable::x(1), P("x2", 2)}}) == P("x2^2", 2));
  }
  SUBCASE("identity assignment") {
    Polynomial f = fInductive(3, 1, 3);
    Substitution id;
    for (int k = 1; k <= 3; ++k) id.emplace(Variable::x(k), Polynomial::x(3, k));
    id.emplace(Variable::t(), Polynomial::t(3));
    CHECK(substitute(f, id) == f);
  }
  SUBCASE("wrong ambient n") {
    CHECK(kindOf([] { substitute(P("x1", 2), {{Variable::x(1), P("x1", 3)}}); }) == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("substitute is a ring homomorphism") {
  testing::RandomPolynomials gen(3, 7);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial a = gen.next(3, 2), b = gen.next(3, 2), c = gen.next(3, 2);
    Substitution s{{Variable::x(1), gen.next(2, 1)}, {Variable::t(), gen.next(2, 1)}, {Variable::x(3), gen.next(2, 1)}};
    CHECK(substitute(a * b + c, s) == substitute(a, s) * substitute(b, s) + substitute(c, s));
  }
}

TEST_CASE("ring axioms on random polynomials") {
  testing::RandomPolynomials gen(3, 99);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial a = gen.next(), b = gen.next(), c = gen.next();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).isZero());
  }
}

TEST_CASE("evaluate") {
  std::vector<Rational> point1{1, 1};
  CHECK(evaluate(P("x1 - t", 1), point1) == Rational(0));
  std::vector<Rational> point2{3, 2, 1};
  CHECK(evaluate(p(2, 2), point2) == Rational(2));
  CHECK(evaluate(Polynomial(2), point2) == Rational(0));
  CHECK(kindOf([&] { evaluate(p(2, 2), point1); }) == ErrorKind::DimensionMismatch);

  // Agrees with substitution followed by reading the constant.
  testing::RandomPolynomials gen(2, 5);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial f = gen.next();
    std::vector<Rational> pt{gen.scalar(), gen.scalar(), gen.scalar()};
    Substitution s{{Variable::x(1), Polynomial::constant(2, pt[0])},
                   {Variable::x(2), Polynomial::constant(2, pt[1])},
                   {Variable::t(), Polynomial::constant(2, pt[2])}};
    Polynomial c = substitute(f, s);
    CHECK(c.isConstant());
    CHECK(c.coefficient(Monomial(2)) == evaluate(f, pt));
  }
}

TEST_CASE("elementarySymmetric") {
  std::vector<int> some{2, 4};
  CHECK(elementarySymmetric(4, 0, some) == Polynomial::constant(4, 1));
  std::vector<int> three{1, 2, 3};
  CHECK(elementarySymmetric(3, 2, three) == P("x1*x2 + x1*x3 + x2*x3", 3));
  std::vector<int> last{3};
  CHECK(elementarySymmetric(3, 1, last) == P("x3", 3));
  CHECK(elementarySymmetric(3, 3) == P("x1 x2 x3", 3));
  CHECK(kindOf([&] { elementarySymmetric(3, 3, some); }) == ErrorKind::InvalidArgument);
  CHECK(kindOf([&] { elementarySymmetric(3, -1, some); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("powerSum") {
  CHECK(powerSum(3, 1) == P("x1 + x2 + x3", 3));
  CHECK(powerSum(2, 2) == P("x1^2 + x2^2", 2));
  CHECK(powerSum(5, 1) == q(1, 5));
  CHECK(kindOf([] { powerSum(3, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("Newton-style relation between q_r, e_i and power sums") {
  for (int n = 1; n <= 6; ++n) {
    for (int r = 1; r <= n; ++r) {
      std::vector<int> tail;
      for (int k = n + 2 - r; k <= n; ++k) tail.push_back(k);
      Polynomial rhs(n);
      for (int i = 0; i <= r - 1; ++i) {
        Polynomial term = elementarySymmetric(n, i, tail) * powerSum(n, r - i);
        if (i % 2) rhs -= term; else rhs += term;
      }
      CHECK_MESSAGE(rhs == q(r, n), "n=" << n << " r=" << r);
    }
  }
}

TEST_CASE("totalDegree") {
  CHECK(fInductive(4, 1, 4).totalDegree() == 4);
  CHECK(Polynomial::constant(3, 1).totalDegree() == 0);
  CHECK_FALSE(Polynomial(3).totalDegree().has_value());
  for (int i = 1; i <= 5; ++i) CHECK(p(i, 5).totalDegree() == 1);
}

TEST_CASE("canonical order is degrevlex with x1 > ... > xn > t") {
  Polynomial f = P("t^2 + x1*t + x2^2 + x1*x2 + x1^2 + x3", 3);
  CHECK(toText(f) == "x1^2 + x1*x2 + x2^2 + x1*t + t^2 + x3");
  CHECK(toText(P("-x1 + 1/2*t - 3", 2)) == "-x1 + 1/2*t - 3");
  CHECK(toLatex(P("x1^2 - 2x1x2 + 3/4t", 2)) == "x_{1}^{2} - 2 x_{1} x_{2} + \\frac{3}{4} t");
}

TEST_CASE("parser") {
  const int n = 4;
  std::map<std::string, Polynomial, std::less<>> sym{{"p1", p(1, n)}, {"p2", p(2, n)}};
  CHECK(parsePolynomial("(x1-x2-t)p1+(x2-x3-t)p2", n, sym) == fInductive(3, 2, n));
  CHECK(parsePolynomial("{x1 - t}^2", n) == P("x1^2 - 2 x1 t + t^2", n));
  CHECK(kindOf([] { P("x5", 4); }) == ErrorKind::DimensionMismatch);
  CHECK(kindOf([] { P("x1 +", 4); }) == ErrorKind::Parse);
  CHECK(kindOf([] { P("y", 4); }) == ErrorKind::Parse);
}

TEST_CASE("text rendering parses back to the same polynomial") {
  testing::RandomPolynomials gen(3, 11);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial f = gen.next(5, 3);
    CHECK(P(toText(f), 3) == f);
  }
}

TEST_CASE("JSON schema") {
  Polynomial f = P("x1^2 - 1/2*t", 2);
  Json j = toJson(f);
  CHECK(j.dump() == R"({"n":2,"terms":[{"c":"1/1","t":0,"x":[2,0]},{"c":"-1/2","t":1,"x":[0,0]}]})");
  CHECK(polynomialFromJson(j) == f);
  testing::RandomPolynomials gen(3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial g = gen.next();
    CHECK(polynomialFromJson(Json::parse(toJson(g).dump())) == g);
  }
  CHECK(kindOf([] { polynomialFromJson(Json{{"n", 2}, {"terms", Json::array({Json{{"x", {1}}, {"t", 0}, {"c", "1"}}})}}); }) ==
        ErrorKind::DimensionMismatch);
}
