#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hesscoh/polynomial.hpp"

namespace hesscoh {

enum class OrderKind { DegRevLex, Lex, DegLex };

std::string toString(OrderKind kind);
OrderKind parseOrderKind(std::string_view text);

/// Monomial order over x_1..x_n, t. The priority lists all n+1 variables
/// from largest to smallest.
class MonomialOrder {
public:
  MonomialOrder(int n, OrderKind kind, std::vector<Variable> priority);

  /// Priority x_1 > ... > x_n > t.
  static MonomialOrder standard(int n, OrderKind kind = OrderKind::DegRevLex);
  static MonomialOrder degrevlex(int n) { return standard(n, OrderKind::DegRevLex); }
  static MonomialOrder lex(int n) { return standard(n, OrderKind::Lex); }
  static MonomialOrder deglex(int n) { return standard(n, OrderKind::DegLex); }

  int ambientN() const { return n_; }
  OrderKind kind() const { return kind_; }
  const std::vector<Variable>& priority() const { return priority_; }

  /// <0, 0, >0.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.priority_ == b.priority_;
  }

private:
  int n_;
  OrderKind kind_;
  std::vector<Variable> priority_;
  std::vector<std::size_t> slots_;  // storage slot of each priority rank
};

Monomial leadingMonomial(const Polynomial& f, const MonomialOrder& order);
Rational leadingCoefficient(const Polynomial& f, const MonomialOrder& order);

/// Which variables the quotient ring is taken over. x_1..x_n always
/// participate; t only for equivariant ideals.
enum class VariableScope { Auto, XOnly, XAndT };

struct GroebnerOptions {
  std::size_t pairBudget = 200000;
  /// Auto: t participates iff some generator involves it.
  VariableScope scope = VariableScope::Auto;
};

struct GroebnerStats {
  std::size_t pairsProcessed = 0;
  std::size_t reductionsToZero = 0;
  std::size_t pairsSkipped = 0;
};

/// Reduced Groebner basis: monic, inter-reduced, sorted by increasing
/// leading monomial.
class GroebnerBasis {
public:
  GroebnerBasis(MonomialOrder order, std::vector<Polynomial> basis, GroebnerStats stats,
                bool includesT, bool homogeneous);

  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  const GroebnerStats& stats() const { return stats_; }
  int ambientN() const { return order_.ambientN(); }
  bool includesT() const { return includesT_; }
  /// Whether every input generator was homogeneous.
  bool homogeneous() const { return homogeneous_; }
  std::vector<Monomial> leadingMonomials() const;

private:
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
  GroebnerStats stats_;
  bool includesT_;
  bool homogeneous_;
};

/// Remainder of multivariate division by basis (in list order).
Polynomial normalForm(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order);
Polynomial normalForm(const Polynomial& f, const GroebnerBasis& gb);

/// Throws Error(ResourceLimit) once more than options.pairBudget S-pairs
/// have been processed.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const GroebnerOptions& options = {});

bool idealMembership(const Polynomial& f, const GroebnerBasis& gb);

/// Mutual containment of the two generated ideals.
bool idealEquality(std::span<const Polynomial> gensA, std::span<const Polynomial> gensB,
                   const MonomialOrder& order, const GroebnerOptions& options = {});

/// Every S-polynomial of the basis reduces to zero.
bool satisfiesBuchbergerCriterion(const GroebnerBasis& gb);

/// Monomials outside the leading-term ideal, in increasing canonical order.
/// Throws Error(NotZeroDimensional) if the quotient is infinite.
std::vector<Monomial> standardMonomials(const GroebnerBasis& gb);

/// Hilbert series numerator(q) / (1 - q)^denominatorPower in lowest terms,
/// graded by internal weight.
struct HilbertData {
  std::vector<std::int64_t> numerator;
  int denominatorPower = 0;

  bool finite() const { return denominatorPower == 0; }
  /// Sum of the series when finite.
  std::optional<std::int64_t> quotientDimension() const;
  /// Numerator multiplied by (1 - q).
  HilbertData timesOneMinusQ() const;

  friend bool operator==(const HilbertData&, const HilbertData&) = default;
};

/// Requires homogeneous input generators; throws Error(InvalidArgument)
/// otherwise.
HilbertData hilbertSeries(const GroebnerBasis& gb);

/// Hilbert series of S/(generators) for a monomial ideal, where S is the
/// polynomial ring in the variables whose slot is flagged active.
HilbertData hilbertSeriesOfMonomialIdeal(std::vector<Monomial> generators, const std::vector<bool>& active);

/// prod_j (1 + q + ... + q^{d_j - 1}) as coefficient vector.
std::vector<std::int64_t> productOfQIntegers(std::span<const int> degrees);

}  // namespace hesscoh
