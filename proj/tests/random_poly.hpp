#pragma once

#include <random>

#include "hesscoh/polynomial.hpp"

namespace hesscoh::testing {

// Small random polynomials for property checks; the seed makes failures
// reproducible.
class RandomPolynomials {
public:
  explicit RandomPolynomials(int n, unsigned seed = 20141017u) : n_(n), rng_(seed) {}

  Polynomial next(int maxTerms = 4, int maxExponent = 2) {
    std::uniform_int_distribution<int> termCount(0, maxTerms);
    std::uniform_int_distribution<int> exponent(0, maxExponent);
    std::uniform_int_distribution<int> numerator(-5, 5);
    std::uniform_int_distribution<int> denominator(1, 3);
    std::vector<Term> terms;
    int count = termCount(rng_);
    for (int k = 0; k < count; ++k) {
      std::vector<int> xs(static_cast<std::size_t>(n_));
      for (int& e : xs) e = exponent(rng_);
      terms.push_back(Term{Monomial(std::move(xs), exponent(rng_)),
                           Rational(numerator(rng_), denominator(rng_))});
    }
    return Polynomial::fromTerms(n_, std::move(terms));
  }

  Rational scalar() {
    std::uniform_int_distribution<int> numerator(-7, 7);
    std::uniform_int_distribution<int> denominator(1, 4);
    return Rational(numerator(rng_), denominator(rng_));
  }

private:
  int n_;
  std::mt19937 rng_;
};

}  // namespace hesscoh::testing
