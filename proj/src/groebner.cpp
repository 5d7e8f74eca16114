#include "hesscoh/groebner.hpp"

#include <algorithm>
#include <numeric>

#include "hesscoh/errors.hpp"

namespace hesscoh {

std::string toString(OrderKind kind) {
  switch (kind) {
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::DegLex: return "deglex";
  }
  return "degrevlex";
}

OrderKind parseOrderKind(std::string_view text) {
  if (text == "degrevlex") return OrderKind::DegRevLex;
  if (text == "lex") return OrderKind::Lex;
  if (text == "deglex") return OrderKind::DegLex;
  fail(ErrorKind::InvalidArgument, "unknown monomial order '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// MonomialOrder

MonomialOrder::MonomialOrder(int n, OrderKind kind, std::vector<Variable> priority)
    : n_(n), kind_(kind), priority_(std::move(priority)) {
  if (static_cast<int>(priority_.size()) != n + 1) {
    fail(ErrorKind::InvalidArgument, "variable priority must list all n+1 variables");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (Variable v : priority_) {
    if (v.index < 0 || v.index > n || seen[static_cast<std::size_t>(v.index)]) {
      fail(ErrorKind::InvalidArgument, "variable priority is not a permutation of the variables");
    }
    seen[static_cast<std::size_t>(v.index)] = true;
    slots_.push_back(v.isT() ? static_cast<std::size_t>(n) : static_cast<std::size_t>(v.index - 1));
  }
}

MonomialOrder MonomialOrder::standard(int n, OrderKind kind) {
  std::vector<Variable> priority;
  for (int k = 1; k <= n; ++k) priority.push_back(Variable::x(k));
  priority.push_back(Variable::t());
  return MonomialOrder(n, kind, std::move(priority));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  auto ea = a.exponents();
  auto eb = b.exponents();
  if (kind_ != OrderKind::Lex && a.totalWeight() != b.totalWeight()) {
    return a.totalWeight() < b.totalWeight() ? -1 : 1;
  }
  if (kind_ == OrderKind::DegRevLex) {
    for (std::size_t r = slots_.size(); r-- > 0;) {
      std::size_t s = slots_[r];
      if (ea[s] != eb[s]) return ea[s] < eb[s] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t s : slots_) {
    if (ea[s] != eb[s]) return ea[s] > eb[s] ? 1 : -1;
  }
  return 0;
}

Monomial leadingMonomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.isZero()) fail(ErrorKind::InvalidArgument, "zero polynomial has no leading monomial");
  const Term* best = &f.terms().front();
  for (const Term& t : f.terms()) {
    if (order.greater(t.monomial, best->monomial)) best = &t;
  }
  return best->monomial;
}

Rational leadingCoefficient(const Polynomial& f, const MonomialOrder& order) {
  return f.coefficient(leadingMonomial(f, order));
}

// ---------------------------------------------------------------------------
// Ordered working representation

namespace {

// Terms sorted descending under the active order.
struct OrderedPoly {
  std::vector<Term> terms;

  bool empty() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().monomial; }
  const Rational& lc() const { return terms.front().coefficient; }
};

OrderedPoly toOrdered(const Polynomial& f, const MonomialOrder& order) {
  OrderedPoly out{f.terms()};
  std::sort(out.terms.begin(), out.terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  return out;
}

Polynomial toPolynomial(int n, const OrderedPoly& f) { return Polynomial::fromTerms(n, f.terms); }

void makeMonic(OrderedPoly& f) {
  if (f.empty() || f.lc().isOne()) return;
  Rational inv = Rational(1) / f.lc();
  for (Term& t : f.terms) t.coefficient *= inv;
}

// a[from..] - coeff * mono * b, merged under order.
std::vector<Term> subtractMultiple(const std::vector<Term>& a, std::size_t from, const Rational& coeff,
                                   const Monomial& mono, const OrderedPoly& b, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() - from + b.terms.size());
  std::size_t i = from, j = 0;
  while (i < a.size() && j < b.terms.size()) {
    Monomial bm = b.terms[j].monomial * mono;
    int c = order.compare(a[i].monomial, bm);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(Term{std::move(bm), -(coeff * b.terms[j].coefficient)});
      ++j;
    } else {
      Rational s = a[i].coefficient - coeff * b.terms[j].coefficient;
      if (!s.isZero()) out.push_back(Term{std::move(bm), std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.terms.size(); ++j) {
    out.push_back(Term{b.terms[j].monomial * mono, -(coeff * b.terms[j].coefficient)});
  }
  return out;
}

// Full reduction of f by the listed reducers (first divisor in list order).
OrderedPoly reduce(const OrderedPoly& f, const std::vector<const OrderedPoly*>& reducers,
                   const MonomialOrder& order) {
  OrderedPoly remainder;
  std::vector<Term> work = f.terms;
  std::size_t head = 0;
  while (head < work.size()) {
    const Term& lead = work[head];
    const OrderedPoly* divisor = nullptr;
    for (const OrderedPoly* g : reducers) {
      if (g->lm().divides(lead.monomial)) {
        divisor = g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.terms.push_back(lead);
      ++head;
      continue;
    }
    Rational coeff = lead.coefficient / divisor->lc();
    Monomial mono = lead.monomial.divide(divisor->lm());
    work = subtractMultiple(work, head, coeff, mono, *divisor, order);
    head = 0;
  }
  return remainder;
}

OrderedPoly sPolynomial(const OrderedPoly& a, const OrderedPoly& b, const MonomialOrder& order) {
  Monomial l = a.lm().lcm(b.lm());
  Monomial ma = l.divide(a.lm());
  Monomial mb = l.divide(b.lm());
  std::vector<Term> scaledA;
  scaledA.reserve(a.terms.size());
  Rational invA = Rational(1) / a.lc();
  for (const Term& t : a.terms) scaledA.push_back(Term{t.monomial * ma, t.coefficient * invA});
  Rational coeff = Rational(1) / b.lc();
  OrderedPoly out;
  out.terms = subtractMultiple(scaledA, 0, coeff, mb, b, order);
  return out;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

bool resolveIncludesT(std::span<const Polynomial> generators, VariableScope scope) {
  switch (scope) {
    case VariableScope::XOnly: return false;
    case VariableScope::XAndT: return true;
    case VariableScope::Auto: break;
  }
  return std::any_of(generators.begin(), generators.end(),
                     [](const Polynomial& g) { return g.involves(Variable::t()); });
}

}  // namespace

// ---------------------------------------------------------------------------
// GroebnerBasis

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::vector<Polynomial> basis, GroebnerStats stats,
                             bool includesT, bool homogeneous)
    : order_(std::move(order)),
      basis_(std::move(basis)),
      stats_(stats),
      includesT_(includesT),
      homogeneous_(homogeneous) {}

std::vector<Monomial> GroebnerBasis::leadingMonomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const Polynomial& g : basis_) out.push_back(leadingMonomial(g, order_));
  return out;
}

Polynomial normalForm(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order) {
  std::vector<OrderedPoly> ordered;
  ordered.reserve(basis.size());
  for (const Polynomial& g : basis) {
    if (g.ambientN() != f.ambientN()) fail(ErrorKind::DimensionMismatch, "basis element in a different ring");
    if (!g.isZero()) ordered.push_back(toOrdered(g, order));
  }
  std::vector<const OrderedPoly*> reducers;
  for (const OrderedPoly& g : ordered) reducers.push_back(&g);
  return toPolynomial(f.ambientN(), reduce(toOrdered(f, order), reducers, order));
}

Polynomial normalForm(const Polynomial& f, const GroebnerBasis& gb) {
  return normalForm(f, gb.basis(), gb.order());
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  const int n = order.ambientN();
  bool homogeneous = true;
  for (const Polynomial& g : generators) {
    if (g.ambientN() != n) fail(ErrorKind::DimensionMismatch, "generator outside the order's ring");
    homogeneous = homogeneous && g.isHomogeneous();
  }
  const bool includesT = resolveIncludesT(generators, options.scope);

  GroebnerStats stats;
  std::vector<OrderedPoly> polys;  // every basis element ever added
  std::vector<bool> active;        // membership in the current G
  std::vector<Pair> pairs;

  auto activeReducers = [&] {
    std::vector<const OrderedPoly*> out;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (active[k]) out.push_back(&polys[k]);
    }
    return out;
  };

  // Gebauer-Moeller installation of a new element h.
  auto update = [&](OrderedPoly h) {
    const std::size_t hIdx = polys.size();
    const Monomial hlm = h.lm();
    polys.push_back(std::move(h));
    active.push_back(false);

    std::vector<std::size_t> candidates;
    for (std::size_t g = 0; g < hIdx; ++g) {
      if (active[g]) candidates.push_back(g);
    }
    std::vector<Monomial> lcms;
    for (std::size_t g : candidates) lcms.push_back(hlm.lcm(polys[g].lm()));

    // Chain criterion among new pairs; coprime pairs are kept only to block
    // others and then dropped by the product criterion.
    std::vector<bool> keep(candidates.size(), false);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      bool coprime = hlm.coprimeWith(polys[candidates[a]].lm());
      bool dominated = false;
      for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
        if (b == a) continue;
        bool stillPending = b > a;
        if ((stillPending || keep[b]) && lcms[b].divides(lcms[a]) &&
            !(lcms[b] == lcms[a] && b > a)) {
          dominated = true;
        }
      }
      keep[a] = coprime || !dominated;
    }

    std::vector<Pair> next;
    next.reserve(pairs.size() + candidates.size());
    for (Pair& pr : pairs) {
      bool drop = hlm.divides(pr.lcm) && hlm.lcm(polys[pr.i].lm()) != pr.lcm &&
                  hlm.lcm(polys[pr.j].lm()) != pr.lcm;
      if (drop) {
        ++stats.pairsSkipped;
      } else {
        next.push_back(std::move(pr));
      }
    }
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (keep[a] && !hlm.coprimeWith(polys[candidates[a]].lm())) {
        next.push_back(Pair{candidates[a], hIdx, lcms[a]});
      } else {
        ++stats.pairsSkipped;
      }
    }
    pairs = std::move(next);

    for (std::size_t g : candidates) {
      if (hlm.divides(polys[g].lm())) active[g] = false;
    }
    active[hIdx] = true;
  };

  for (const Polynomial& g : generators) {
    if (g.isZero()) continue;
    OrderedPoly h = reduce(toOrdered(g, order), activeReducers(), order);
    if (h.empty()) continue;
    makeMonic(h);
    update(std::move(h));
  }

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first, ties broken by index.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.lcm.totalWeight() != b.lcm.totalWeight()) return a.lcm.totalWeight() < b.lcm.totalWeight();
      int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair pr = *best;
    pairs.erase(best);
    if (++stats.pairsProcessed > options.pairBudget) {
      fail(ErrorKind::ResourceLimit, "Groebner basis computation exceeded the S-pair budget of " +
                                         std::to_string(options.pairBudget));
    }
    OrderedPoly h = reduce(sPolynomial(polys[pr.i], polys[pr.j], order), activeReducers(), order);
    if (h.empty()) {
      ++stats.reductionsToZero;
      continue;
    }
    makeMonic(h);
    update(std::move(h));
  }

  // Reduce the surviving (minimal) elements against each other.
  std::vector<std::size_t> survivors;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (active[k]) survivors.push_back(k);
  }
  std::vector<OrderedPoly> reduced;
  for (std::size_t a : survivors) {
    std::vector<const OrderedPoly*> others;
    for (std::size_t b : survivors) {
      if (b != a) others.push_back(&polys[b]);
    }
    OrderedPoly r = reduce(polys[a], others, order);
    makeMonic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const OrderedPoly& a, const OrderedPoly& b) { return order.compare(a.lm(), b.lm()) < 0; });

  std::vector<Polynomial> basis;
  basis.reserve(reduced.size());
  for (const OrderedPoly& r : reduced) basis.push_back(toPolynomial(n, r));
  return GroebnerBasis(order, std::move(basis), stats, includesT, homogeneous);
}

bool idealMembership(const Polynomial& f, const GroebnerBasis& gb) {
  return normalForm(f, gb).isZero();
}

bool idealEquality(std::span<const Polynomial> gensA, std::span<const Polynomial> gensB,
                   const MonomialOrder& order, const GroebnerOptions& options) {
  GroebnerBasis gbA = buchberger(gensA, order, options);
  GroebnerBasis gbB = buchberger(gensB, order, options);
  for (const Polynomial& g : gensA) {
    if (!idealMembership(g, gbB)) return false;
  }
  for (const Polynomial& g : gensB) {
    if (!idealMembership(g, gbA)) return false;
  }
  return true;
}

bool satisfiesBuchbergerCriterion(const GroebnerBasis& gb) {
  const MonomialOrder& order = gb.order();
  std::vector<OrderedPoly> ordered;
  for (const Polynomial& g : gb.basis()) ordered.push_back(toOrdered(g, order));
  std::vector<const OrderedPoly*> reducers;
  for (const OrderedPoly& g : ordered) reducers.push_back(&g);
  for (std::size_t a = 0; a < ordered.size(); ++a) {
    for (std::size_t b = a + 1; b < ordered.size(); ++b) {
      if (!reduce(sPolynomial(ordered[a], ordered[b], order), reducers, order).empty()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Quotient invariants

namespace {

std::vector<bool> activeSlots(const GroebnerBasis& gb) {
  std::vector<bool> active(static_cast<std::size_t>(gb.ambientN()) + 1, true);
  active.back() = gb.includesT();
  return active;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.totalWeight() != b.totalWeight()) return a.totalWeight() < b.totalWeight();
    return compareCanonical(a, b) < 0;
  });
  std::vector<Monomial> out;
  for (Monomial& m : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) out.push_back(std::move(m));
  }
  return out;
}

using Series = std::vector<std::int64_t>;

void addInto(Series& acc, const Series& other, std::size_t shift) {
  if (acc.size() < other.size() + shift) acc.resize(other.size() + shift, 0);
  for (std::size_t k = 0; k < other.size(); ++k) acc[k + shift] += other[k];
}

Series multiply(const Series& a, const Series& b) {
  Series out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void trim(Series& s) {
  while (s.size() > 1 && s.back() == 0) s.pop_back();
}

// Numerator N(q) with HS(S/I) = N(q) / (1-q)^{#active}.
Series hilbertNumerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  const std::size_t slots = gens.front().exponents().size();

  std::vector<int> occurrences(slots, 0);
  bool pairwiseCoprime = true;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    auto e = gens[a].exponents();
    for (std::size_t s = 0; s < slots; ++s) occurrences[s] += e[s] > 0 ? 1 : 0;
  }
  for (int c : occurrences) pairwiseCoprime = pairwiseCoprime && c <= 1;

  if (pairwiseCoprime) {
    Series out{1};
    for (const Monomial& m : gens) {
      Series factor(static_cast<std::size_t>(m.totalWeight()) + 1, 0);
      factor.front() = 1;
      factor.back() -= 1;
      out = multiply(out, factor);
    }
    return out;
  }

  // Pivot on the variable shared by the most generators:
  // N(I) = N(I + (v)) + q N(I : v).
  std::size_t pivot = static_cast<std::size_t>(
      std::max_element(occurrences.begin(), occurrences.end()) - occurrences.begin());
  const int n = gens.front().ambientN();
  Monomial v = pivot == slots - 1 ? Monomial::ofVariable(n, Variable::t())
                                  : Monomial::ofVariable(n, Variable::x(static_cast<int>(pivot) + 1));

  std::vector<Monomial> withPivot{v};
  std::vector<Monomial> colon;
  for (const Monomial& m : gens) {
    if (m.exponents()[pivot] == 0) withPivot.push_back(m);
    colon.push_back(m.exponents()[pivot] > 0 ? m.divide(v) : m);
  }
  Series out = hilbertNumerator(std::move(withPivot));
  addInto(out, hilbertNumerator(std::move(colon)), 1);
  trim(out);
  return out;
}

}  // namespace

std::optional<std::int64_t> HilbertData::quotientDimension() const {
  if (!finite()) return std::nullopt;
  return std::accumulate(numerator.begin(), numerator.end(), std::int64_t{0});
}

HilbertData HilbertData::timesOneMinusQ() const {
  HilbertData out = *this;
  if (out.denominatorPower > 0) {
    --out.denominatorPower;
    return out;
  }
  Series s(numerator.size() + 1, 0);
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    s[k] += numerator[k];
    s[k + 1] -= numerator[k];
  }
  trim(s);
  out.numerator = std::move(s);
  return out;
}

HilbertData hilbertSeriesOfMonomialIdeal(std::vector<Monomial> generators, const std::vector<bool>& active) {
  for (const Monomial& m : generators) {
    auto e = m.exponents();
    for (std::size_t s = 0; s < e.size(); ++s) {
      if (e[s] > 0 && !active[s]) {
        fail(ErrorKind::InvalidArgument, "leading monomial involves a variable outside the quotient ring");
      }
    }
  }
  HilbertData data;
  data.denominatorPower = static_cast<int>(std::count(active.begin(), active.end(), true));
  bool unitIdeal = std::any_of(generators.begin(), generators.end(), [](const Monomial& m) { return m.isOne(); });
  data.numerator = unitIdeal ? Series{0} : hilbertNumerator(std::move(generators));
  if (unitIdeal) {
    data.denominatorPower = 0;
    return data;
  }
  // Cancel common factors of (1 - q): N(1) = 0 means (1 - q) divides N.
  while (data.denominatorPower > 0 &&
         std::accumulate(data.numerator.begin(), data.numerator.end(), std::int64_t{0}) == 0) {
    Series quotient(data.numerator.size() - 1, 0);
    std::int64_t carry = 0;
    for (std::size_t k = 0; k + 1 < data.numerator.size(); ++k) {
      carry += data.numerator[k];
      quotient[k] = carry;
    }
    data.numerator = std::move(quotient);
    --data.denominatorPower;
  }
  trim(data.numerator);
  return data;
}

HilbertData hilbertSeries(const GroebnerBasis& gb) {
  if (!gb.homogeneous()) fail(ErrorKind::InvalidArgument, "Hilbert series requires a homogeneous ideal");
  return hilbertSeriesOfMonomialIdeal(gb.leadingMonomials(), activeSlots(gb));
}

std::vector<Monomial> standardMonomials(const GroebnerBasis& gb) {
  std::vector<Monomial> lms = gb.leadingMonomials();
  std::vector<bool> active = activeSlots(gb);
  const std::size_t slots = active.size();

  // Each active variable needs a pure power among the leading monomials.
  std::vector<int> bound(slots, 0);
  for (std::size_t s = 0; s < slots; ++s) {
    if (!active[s]) continue;
    int best = -1;
    for (const Monomial& m : lms) {
      auto e = m.exponents();
      bool pure = e[s] > 0 && m.totalWeight() == e[s];
      if (pure && (best < 0 || e[s] < best)) best = e[s];
    }
    bool unit = std::any_of(lms.begin(), lms.end(), [](const Monomial& m) { return m.isOne(); });
    if (best < 0 && !unit) {
      fail(ErrorKind::NotZeroDimensional, "quotient ring is not finite-dimensional");
    }
    bound[s] = unit ? 0 : best - 1;
  }

  std::vector<Monomial> out;
  std::vector<int> exps(slots, 0);
  auto visit = [&](auto&& self, std::size_t s) -> void {
    if (s == slots) {
      Monomial m(std::vector<int>(exps.begin(), exps.end() - 1), exps.back());
      bool divisible = std::any_of(lms.begin(), lms.end(), [&](const Monomial& g) { return g.divides(m); });
      if (!divisible) out.push_back(std::move(m));
      return;
    }
    for (int e = 0; e <= bound[s]; ++e) {
      exps[s] = e;
      self(self, s + 1);
    }
    exps[s] = 0;
  };
  visit(visit, 0);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return compareCanonical(a, b) < 0; });
  return out;
}

std::vector<std::int64_t> productOfQIntegers(std::span<const int> degrees) {
  Series out{1};
  for (int d : degrees) {
    if (d < 1) fail(ErrorKind::InvalidArgument, "q-integer index must be >= 1");
    out = multiply(out, Series(static_cast<std::size_t>(d), 1));
  }
  return out;
}

}  // namespace hesscoh
