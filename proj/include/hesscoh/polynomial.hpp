#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hesscoh/rational.hpp"

namespace hesscoh {

/// A ring variable: x_k for 1 <= k <= n, or t. Independent of the ambient n.
struct Variable {
  int index = 0;  // 0 is t, k >= 1 is x_k

  static constexpr Variable x(int k) { return Variable{k}; }
  static constexpr Variable t() { return Variable{0}; }
  constexpr bool isT() const { return index == 0; }

  friend constexpr auto operator<=>(const Variable&, const Variable&) = default;
};

/// Dense exponent vector (x_1, ..., x_n, t). Every variable has weight 1.
class Monomial {
public:
  Monomial() = default;
  /// The unit monomial of the ring with n x-variables.
  explicit Monomial(int n);
  Monomial(std::vector<int> xExponents, int tExponent);

  static Monomial ofVariable(int n, Variable v, int power = 1);

  int ambientN() const { return static_cast<int>(exponents_.size()) - 1; }
  int x(int k) const { return exponents_[static_cast<std::size_t>(k - 1)]; }
  int t() const { return exponents_.back(); }
  int exponent(Variable v) const { return v.isT() ? t() : x(v.index); }
  /// Storage order: x_1..x_n then t.
  std::span<const int> exponents() const { return exponents_; }
  int totalWeight() const { return weight_; }
  bool isOne() const { return weight_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprimeWith(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// this / other; requires other.divides(*this).
  Monomial divide(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }

  std::size_t hash() const;

private:
  std::vector<int> exponents_;
  int weight_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Canonical order: graded reverse lexicographic with x_1 > ... > x_n > t.
/// Returns <0, 0, >0 like strcmp.
int compareCanonical(const Monomial& a, const Monomial& b);

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in Q[x_1..x_n, t]. Terms are stored in descending
/// canonical order with nonzero coefficients, so structural equality is
/// polynomial equality.
class Polynomial {
public:
  /// Zero polynomial in the ring with n x-variables.
  explicit Polynomial(int n = 1);

  static Polynomial constant(int n, const Rational& c);
  static Polynomial variable(int n, Variable v);
  static Polynomial x(int n, int k) { return variable(n, Variable::x(k)); }
  static Polynomial t(int n) { return variable(n, Variable::t()); }
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  /// Combines like terms and drops zeros; input order is irrelevant.
  static Polynomial fromTerms(int n, std::vector<Term> terms);

  int ambientN() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;

  /// Maximum total weight over terms; nullopt for the zero polynomial.
  std::optional<int> totalDegree() const;
  /// Zero is homogeneous.
  bool isHomogeneous() const;
  bool involves(Variable v) const;
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

private:
  int n_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& base, int exponent);

/// Variables missing from the map are left unchanged.
using Substitution = std::map<Variable, Polynomial>;

/// Ring homomorphism sending each assigned variable to its image.
Polynomial substitute(const Polynomial& a, const Substitution& assignment);

/// point holds values for x_1..x_n followed by t.
Rational evaluate(const Polynomial& a, std::span<const Rational> point);

/// e_i in exactly the listed x-variables (1-based indices); e_0 = 1.
Polynomial elementarySymmetric(int n, int i, std::span<const int> variableIndices);
/// e_i(x_1, ..., x_n).
Polynomial elementarySymmetric(int n, int i);

/// x_1^r + ... + x_n^r.
Polynomial powerSum(int n, int r);

/// Human-readable form, e.g. "x1^2 - 2*x1*x2 + 1/2*t".
std::string toText(const Polynomial& a);
/// LaTeX body (no math delimiters), e.g. "x_{1}^{2} - 2 x_{1} x_{2}".
std::string toLatex(const Polynomial& a);

/// Parses expressions over x<k>, t, integers, rationals, + - * ^ and
/// parentheses or braces. Juxtaposition multiplies, so "(x1-t)p1" works once
/// p1 is supplied in symbols.
Polynomial parsePolynomial(std::string_view text, int n,
                           const std::map<std::string, Polynomial, std::less<>>& symbols = {});

}  // namespace hesscoh
