#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "hesscoh/errors.hpp"
#include "hesscoh/generators.hpp"

using namespace hesscoh;

namespace {

Polynomial P(std::string_view text, int n) {
  std::map<std::string, Polynomial, std::less<>> sym;
  for (int i = 0; i <= n; ++i) sym.emplace("p" + std::to_string(i), p(i, n));
  return parsePolynomial(text, n, sym);
}

Polynomial atTZero(const Polynomial& f) {
  return substitute(f, {{Variable::t(), Polynomial(f.ambientN())}});
}

}  // namespace

TEST_CASE("p") {
  CHECK(p(0, 3).isZero());
  CHECK(p(1, 4) == P("x1 - t", 4));
  CHECK(p(3, 3) == P("x1 + x2 + x3 - 6t", 3));
  CHECK_THROWS_AS(p(4, 3), Error);
  CHECK_THROWS_AS(p(-1, 3), Error);
}

TEST_CASE("fInductive") {
  CHECK(fInductive(3, 2, 4) == P("(x1-x2-t)p1 + (x2-x3-t)p2", 4));
  CHECK(fInductive(4, 1, 4) == P("(x1-x4-t)(x1-x3-t)(x1-x2-t)p1", 4));
  for (int i = 0; i <= 4; ++i) CHECK(fInductive(i, 0, 4).isZero());
  for (int j = 1; j <= 4; ++j) CHECK(fInductive(j, j, 4) == p(j, 4));
  CHECK_THROWS_AS(fInductive(2, 3, 4), Error);
  CHECK_THROWS_AS(fInductive(5, 1, 4), Error);
}

TEST_CASE("delta") {
  for (int i = 1; i <= 4; ++i) CHECK(delta(i, i, 4) == P("x" + std::to_string(i) + " - " + std::to_string(i) + "t", 4));
  CHECK(delta(2, 1, 4) == P("(x1 - t)(x1 - x2 - t)", 4));
  CHECK(delta(3, 1, 4) == fInductive(3, 1, 4));
  CHECK(delta(3, 1, 4) == P("(x1-x3-t)(x1-x2-t)p1", 4));
  CHECK_THROWS_AS(delta(1, 2, 4), Error);
  CHECK_THROWS_AS(delta(1, 0, 4), Error);
}

TEST_CASE("fClosed") {
  for (int j = 1; j <= 5; ++j) CHECK(fClosed(j, j, 5) == p(j, 5));
  CHECK(fClosed(4, 2, 4) == P("(x1-x3-t)(x1-x2-t)p1 + (x2-x4-t){(x1-x2-t)p1 + (x2-x3-t)p2}", 4));
  CHECK(fClosed(2, 1, 2) == fInductive(2, 1, 2));
  CHECK_THROWS_AS(fClosed(3, 4, 4), Error);
}

TEST_CASE("closed form equals the recursion for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= i; ++j) CHECK_MESSAGE(fClosed(i, j, n) == fInductive(i, j, n), n << ":" << i << "," << j);
    }
  }
}

TEST_CASE("fCheck") {
  for (int j = 1; j <= 4; ++j) {
    Polynomial sum(4);
    for (int k = 1; k <= j; ++k) sum += Polynomial::x(4, k);
    CHECK(fCheck(j, j, 4) == sum);
  }
  CHECK(fCheck(2, 1, 2) == P("x1(x1 - x2)", 2));
  for (int n = 1; n <= 5; ++n) {
    for (int r = 1; r <= n; ++r) CHECK(fCheck(n, n + 1 - r, n) == q(r, n));
  }
}

TEST_CASE("t = 0 specialization matches the closed formula for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= i; ++j) CHECK(atTZero(fInductive(i, j, n)) == fCheck(i, j, n));
    }
  }
}

TEST_CASE("q") {
  CHECK(q(1, 4) == powerSum(4, 1));
  CHECK(q(2, 3) == P("x1^2 + x2^2 - x1*x3 - x2*x3", 3));
  CHECK(q(2, 3) == powerSum(3, 2) - P("x3", 3) * powerSum(3, 1));
  CHECK(q(4, 4) == P("x1(x1-x2)(x1-x3)(x1-x4)", 4));
  CHECK_THROWS_AS(q(0, 3), Error);
  CHECK_THROWS_AS(q(4, 3), Error);
}

TEST_CASE("entries are homogeneous of weight i - j + 1") {
  for (int n = 1; n <= 7; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= i; ++j) {
        Polynomial f = fInductive(i, j, n);
        CHECK(f.isHomogeneous());
        CHECK(f.totalDegree() == i - j + 1);
        CHECK(fCheck(i, j, n).isHomogeneous());
        CHECK(fCheck(i, j, n).totalDegree() == i - j + 1);
      }
    }
  }
}

TEST_CASE("Peterson coefficient rewriting") {
  for (int n = 2; n <= 8; ++n) {
    Polynomial t = Polynomial::t(n);
    for (int j = 1; j <= n - 1; ++j) {
      Polynomial coefficient = -p(j - 1, n) + p(j, n) * Rational(2) - p(j + 1, n) - t * Rational(2);
      CHECK(Polynomial::x(n, j) - Polynomial::x(n, j + 1) - t == coefficient);
      CHECK(fInductive(j + 1, j, n) == fInductive(j, j - 1, n) + coefficient * p(j, n));
    }
  }
}

TEST_CASE("idealGenerators") {
  auto h = HessenbergFunction::parse(std::vector<int>{3, 3, 4, 5, 7, 7, 7});
  auto ideal = idealGenerators(h, Mode::Equivariant);
  std::vector<std::pair<int, int>> expected{{3, 1}, {3, 2}, {4, 3}, {5, 4}, {7, 5}, {7, 6}, {7, 7}};
  REQUIRE(ideal.generators.size() == 7);
  for (int j = 1; j <= 7; ++j) {
    CHECK(ideal.index(j) == expected[static_cast<std::size_t>(j - 1)]);
    CHECK(ideal.generators[static_cast<std::size_t>(j - 1)] == fInductive(expected[static_cast<std::size_t>(j - 1)].first, j, 7));
  }
  auto flag = idealGenerators(HessenbergFunction::flag(4), Mode::Equivariant);
  for (int j = 1; j <= 4; ++j) CHECK(flag.generators[static_cast<std::size_t>(j - 1)] == fInductive(4, j, 4));
  auto one = idealGenerators(HessenbergFunction::flag(1), Mode::Equivariant);
  CHECK(one.generators == std::vector<Polynomial>{P("x1 - t", 1)});
  auto ordinary = idealGenerators(HessenbergFunction::parse(std::vector<int>{2, 3, 3}), Mode::Ordinary);
  for (const auto& g : ordinary.generators) CHECK_FALSE(g.involves(Variable::t()));
  // Construction is deterministic.
  CHECK(idealGenerators(h, Mode::Equivariant).generators == ideal.generators);
}

TEST_CASE("factored display reproduces the n = 4 table") {
  CHECK(factoredLatex(2, 1) == "(x_{1} - x_{2} - t)p_{1}");
  CHECK(factoredLatex(4, 3) == "(x_{1} - x_{2} - t)p_{1} + (x_{2} - x_{3} - t)p_{2} + (x_{3} - x_{4} - t)p_{3}");
  CHECK(factoredLatex(4, 2) ==
        "(x_{1} - x_{3} - t)(x_{1} - x_{2} - t)p_{1} + (x_{2} - x_{4} - t)\\{(x_{1} - x_{2} - t)p_{1} + (x_{2} - x_{3} - t)p_{2}\\}");
  CHECK(factoredLatex(4, 1) == "(x_{1} - x_{4} - t)(x_{1} - x_{3} - t)(x_{1} - x_{2} - t)p_{1}");
  CHECK(factoredCheckLatex(3, 2) == "x_{1}(x_{1} - x_{3}) + x_{2}(x_{2} - x_{3})");
}

TEST_CASE("factored display denotes the right polynomial") {
  // Strip LaTeX decoration and parse back with p_k as symbols.
  auto plain = [](std::string s) {
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] == '\\') continue;
      if (s[k] == '_' || (s[k] == '{' && k > 0 && s[k - 1] == '_')) continue;
      if (s[k] == '}' && k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) continue;
      out += s[k];
    }
    return out;
  };
  for (int n = 1; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= i; ++j) {
        CHECK(P(plain(factoredLatex(i, j)), n) == fInductive(i, j, n));
        CHECK(P(plain(factoredCheckLatex(i, j)), n) == fCheck(i, j, n));
      }
    }
  }
}
