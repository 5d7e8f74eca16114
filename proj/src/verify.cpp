#include "hesscoh/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "hesscoh/errors.hpp"

namespace hesscoh {

namespace {

using Clock = std::chrono::steady_clock;

Json hJson(const HessenbergFunction& h) { return h.values(); }

Json scopeOf(int n) { return {{"n", n}}; }
Json scopeOf(const HessenbergFunction& h) { return {{"n", h.n()}, {"h", hJson(h)}}; }

CheckResult pass(std::string name, Json scope) {
  CheckResult r;
  r.name = std::move(name);
  r.scope = std::move(scope);
  return r;
}

void reject(CheckResult& r, Json witness) {
  r.passed = false;
  r.witness = std::move(witness);
}

Json residueWitness(int i, int j, const Polynomial& residue) {
  return {{"entry", {i, j}}, {"residue", toText(residue)}};
}

Polynomial zeroT(const Polynomial& f) {
  return substitute(f, {{Variable::t(), Polynomial(f.ambientN())}});
}

/// f with x_k -> w(k) t. Homogeneous inputs take the shortcut
/// f(w(1), ..., w(n), 1) t^deg, which is the same polynomial.
Polynomial localize(const Polynomial& f, const Permutation& w) {
  const int n = f.ambientN();
  if (f.isZero()) return f;
  if (f.isHomogeneous()) {
    std::vector<Rational> point;
    for (int k = 1; k <= n; ++k) point.emplace_back(w(k));
    point.emplace_back(1);
    Rational value = evaluate(f, point);
    return Polynomial::monomial(Monomial::ofVariable(n, Variable::t(), *f.totalDegree()), value);
  }
  Substitution s;
  for (int k = 1; k <= n; ++k) s.emplace(Variable::x(k), Polynomial::t(n) * Rational(w(k)));
  return substitute(f, s);
}

std::vector<Permutation> allPermutations(int n) {
  std::vector<int> line(static_cast<std::size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::fromOneLine(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

/// Index and residue of the first generator that does not vanish at w.
std::optional<std::pair<int, Polynomial>> firstNonVanishing(const std::vector<Polynomial>& gens, const Permutation& w) {
  for (std::size_t j = 0; j < gens.size(); ++j) {
    Polynomial r = localize(gens[j], w);
    if (!r.isZero()) return std::make_pair(static_cast<int>(j) + 1, std::move(r));
  }
  return std::nullopt;
}

/// First generator of a outside (b), with its normal form.
std::optional<Json> containmentFailure(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                       const MonomialOrder& order, const GroebnerContext& ctx, const char* side) {
  GroebnerBasis gb = computeGroebnerBasis(b, order, ctx);
  for (std::size_t k = 0; k < a.size(); ++k) {
    Polynomial r = normalForm(a[k], gb);
    if (!r.isZero()) {
      return Json{{"direction", side}, {"generator", static_cast<int>(k) + 1},
                  {"polynomial", toText(a[k])}, {"normalForm", toText(r)}};
    }
  }
  return std::nullopt;
}

std::optional<Json> idealMismatch(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                  const GroebnerContext& ctx) {
  auto order = MonomialOrder::degrevlex(a.front().ambientN());
  if (auto w = containmentFailure(a, b, order, ctx, "first-in-second")) return w;
  return containmentFailure(b, a, order, ctx, "second-in-first");
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

/// Coefficients indexed by cohomological degree 2d.
Json poincareJson(const std::vector<std::int64_t>& numerator) {
  Json out = Json::array();
  for (std::size_t d = 0; d < numerator.size(); ++d) {
    if (d > 0) out.push_back(0);
    out.push_back(numerator[d]);
  }
  return out;
}

Json hilbertJson(const HilbertData& hd) {
  return {{"numerator", poincareJson(hd.numerator)}, {"denominator", "(1 - q^2)^" + std::to_string(hd.denominatorPower)}};
}

template <class F>
CheckResult timed(F&& check) {
  auto start = Clock::now();
  CheckResult r = check();
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::string scopeText(const Json& scope) {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << ' ';
    first = false;
  };
  if (scope.contains("n")) {
    sep();
    out << "n=" << scope["n"].get<int>();
  }
  if (scope.contains("h")) {
    sep();
    out << "h=(";
    for (std::size_t k = 0; k < scope["h"].size(); ++k) out << (k ? "," : "") << scope["h"][k].get<int>();
    out << ')';
  }
  for (const auto& [key, value] : scope.items()) {
    if (key == "n" || key == "h") continue;
    sep();
    out << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return out.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Report

bool VerificationReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::size_t VerificationReport::passedCount() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; }));
}

Json VerificationReport::toJson(bool includeTiming) const {
  Json list = Json::array();
  for (const CheckResult& r : results) {
    Json item = {{"name", r.name}, {"scope", r.scope}, {"passed", r.passed}, {"witness", r.witness}};
    if (!r.details.is_null()) item["details"] = r.details;
    if (includeTiming) item["seconds"] = r.seconds;
    list.push_back(std::move(item));
  }
  return {{"schemaVersion", 1},
          {"passed", passed()},
          {"summary", {{"total", results.size()}, {"passed", passedCount()}, {"failed", failedCount()}}},
          {"results", std::move(list)}};
}

std::string VerificationReport::toText(bool includeTiming) const {
  std::ostringstream out;
  for (const CheckResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    std::string scope = scopeText(r.scope);
    if (!scope.empty()) out << ' ' << scope;
    if (includeTiming) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " (%.3fs)", r.seconds);
      out << buf;
    }
    if (!r.passed) out << ": " << r.witness.dump();
    out << '\n';
  }
  out << passedCount() << '/' << results.size() << " checks passed\n";
  return out.str();
}

const Inputs& Inputs::standard() {
  static const Inputs in;
  return in;
}

std::vector<Polynomial> presentedGenerators(const HessenbergFunction& h, Mode mode, const Inputs& in) {
  std::vector<Polynomial> gens;
  for (int j = 1; j <= h.n(); ++j) {
    gens.push_back(mode == Mode::Equivariant ? in.f(h(j), j, h.n()) : in.fCheck(h(j), j, h.n()));
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Checks

CheckResult checkExampleN4(const Inputs& in) {
  return timed([&] {
    constexpr int n = 4;
    std::map<std::string, Polynomial, std::less<>> symbols;
    for (int k = 0; k <= n; ++k) symbols.emplace("p_" + std::to_string(k), p(k, n));
    struct Printed {
      int i, j;
      const char* text;
    };
    static const Printed printed[] = {
        {1, 1, "p_1"},
        {2, 2, "p_2"},
        {3, 3, "p_3"},
        {4, 4, "p_4"},
        {2, 1, "(x_1-x_2-t)p_1"},
        {3, 2, "(x_1-x_2-t)p_1+(x_2-x_3-t)p_2"},
        {4, 3, "(x_1-x_2-t)p_1+(x_2-x_3-t)p_2+(x_3-x_4-t)p_3"},
        {3, 1, "(x_1-x_3-t)(x_1-x_2-t)p_1"},
        {4, 2, "(x_1-x_3-t)(x_1-x_2-t)p_1+(x_2-x_4-t)\\{(x_1-x_2-t)p_1+(x_2-x_3-t)p_2\\}"},
        {4, 1, "(x_1-x_4-t)(x_1-x_3-t)(x_1-x_2-t)p_1"},
    };
    CheckResult r = pass("example-n4", scopeOf(n));
    for (const Printed& e : printed) {
      std::string text = e.text;
      std::erase(text, '\\');
      Polynomial expected = parsePolynomial(text, n, symbols);
      Polynomial residue = in.f(e.i, e.j, n) - expected;
      if (!residue.isZero()) {
        Json w = residueWitness(e.i, e.j, residue);
        w["printed"] = e.text;
        reject(r, std::move(w));
        break;
      }
    }
    return r;
  });
}

CheckResult checkClosedForm(int n, const Inputs& in) {
  return timed([&] {
    CheckResult r = pass("closed-form", scopeOf(n));
    for (int i = 1; i <= n && r.passed; ++i) {
      for (int j = 1; j <= i; ++j) {
        Polynomial residue = in.fClosed(i, j, n) - in.f(i, j, n);
        if (!residue.isZero()) {
          reject(r, residueWitness(i, j, residue));
          break;
        }
      }
    }
    return r;
  });
}

CheckResult checkTSpecialization(int n, const Inputs& in) {
  return timed([&] {
    CheckResult r = pass("t-specialization", scopeOf(n));
    for (int i = 1; i <= n && r.passed; ++i) {
      for (int j = 1; j <= i; ++j) {
        Polynomial residue = zeroT(in.f(i, j, n)) - in.fCheck(i, j, n);
        if (!residue.isZero()) {
          reject(r, residueWitness(i, j, residue));
          break;
        }
      }
    }
    return r;
  });
}

CheckResult checkHomogeneity(int n, const Inputs& in) {
  return timed([&] {
    CheckResult r = pass("homogeneity", scopeOf(n));
    for (int i = 1; i <= n && r.passed; ++i) {
      for (int j = 1; j <= i; ++j) {
        Polynomial f = in.f(i, j, n);
        const int weight = i - j + 1;
        if (!f.isHomogeneous() || f.totalDegree() != weight) {
          Json w = {{"entry", {i, j}}, {"expectedWeight", weight}, {"polynomial", toText(f)}};
          if (auto d = f.totalDegree()) w["degree"] = *d;
          reject(r, std::move(w));
          break;
        }
      }
    }
    return r;
  });
}

CheckResult checkLocalizationVanishing(const HessenbergFunction& h, const Inputs& in) {
  return timed([&] {
    CheckResult r = pass("localization", scopeOf(h));
    auto gens = presentedGenerators(h, Mode::Equivariant, in);
    auto points = in.fixedPoints(h);
    for (const Permutation& w : points) {
      if (auto bad = firstNonVanishing(gens, w)) {
        auto [j, residue] = *bad;
        reject(r, {{"w", w.toString()}, {"generator", {h(j), j}}, {"residue", toText(residue)}});
        break;
      }
    }
    r.details = {{"fixedPoints", points.size()}};
    return r;
  });
}

CheckResult checkFixedPointExactness(const HessenbergFunction& h, const Inputs& in) {
  return timed([&] {
    CheckResult r = pass("fixed-point-exactness", scopeOf(h));
    auto gens = presentedGenerators(h, Mode::Equivariant, in);
    auto listed = in.fixedPoints(h);
    std::set<Permutation> fixed(listed.begin(), listed.end());
    for (const Permutation& w : allPermutations(h.n())) {
      auto bad = firstNonVanishing(gens, w);
      const bool vanishes = !bad.has_value();
      const bool isFixed = fixed.count(w) > 0;
      if (vanishes != isFixed) {
        Json witness = {{"w", w.toString()}, {"vanishes", vanishes}, {"listedAsFixedPoint", isFixed}};
        if (bad) {
          witness["generator"] = {h(bad->first), bad->first};
          witness["residue"] = toText(bad->second);
        }
        reject(r, std::move(witness));
        break;
      }
    }
    return r;
  });
}

CheckResult checkPeterson(int n, const GroebnerContext& ctx, const Inputs& in) {
  return timed([&] {
    CheckResult r = pass("peterson", scopeOf(HessenbergFunction::peterson(n)));
    const Polynomial t = Polynomial::t(n);
    auto coefficient = [&](int j) {
      return in.p(j, n) * Rational(2) - in.p(j - 1, n) - in.p(j + 1, n) - t * Rational(2);
    };
    for (int j = 1; j < n; ++j) {
      Polynomial lhs = Polynomial::x(n, j) - Polynomial::x(n, j + 1) - t;
      Polynomial residue = lhs - coefficient(j);
      if (!residue.isZero()) {
        reject(r, {{"part", "coefficient-identity"}, {"j", j}, {"residue", toText(residue)}});
        return r;
      }
    }
    std::vector<Polynomial> presentation;
    for (int j = 1; j < n; ++j) presentation.push_back(coefficient(j) * in.p(j, n));
    presentation.push_back(in.p(n, n));
    auto gens = presentedGenerators(HessenbergFunction::peterson(n), Mode::Equivariant, in);
    if (auto w = idealMismatch(gens, presentation, ctx)) {
      (*w)["part"] = "ideal-equality";
      reject(r, std::move(*w));
    }
    return r;
  });
}

CheckResult checkFlagBorel(int n, FlagBorelParts parts, const GroebnerContext& ctx, const Inputs& in) {
  return timed([&] {
    CheckResult r = pass("flag-borel", scopeOf(n));
    r.scope["groebner"] = parts.groebner;
    r.scope["equivariant"] = parts.groebner && parts.equivariant;
    for (int rr = 1; rr <= n; ++rr) {
      Polynomial qr = in.q(rr, n);
      Polynomial residue = qr - in.fCheck(n, n + 1 - rr, n);
      if (!residue.isZero()) {
        reject(r, {{"part", "q-equals-fcheck"}, {"r", rr}, {"residue", toText(residue)}});
        return r;
      }
      std::vector<int> tail;
      for (int k = n + 2 - rr; k <= n; ++k) tail.push_back(k);
      Polynomial sum(n);
      for (int i = 0; i <= rr - 1; ++i) {
        Polynomial term = elementarySymmetric(n, i, tail) * powerSum(n, rr - i);
        sum += (i % 2 == 0) ? term : -term;
      }
      residue = qr - sum;
      if (!residue.isZero()) {
        reject(r, {{"part", "power-sum-expansion"}, {"r", rr}, {"residue", toText(residue)}});
        return r;
      }
    }
    if (!parts.groebner) return r;

    std::vector<Polynomial> elementary;
    for (int i = 1; i <= n; ++i) elementary.push_back(elementarySymmetric(n, i));
    auto ordinary = presentedGenerators(HessenbergFunction::flag(n), Mode::Ordinary, in);
    if (auto w = idealMismatch(ordinary, elementary, ctx)) {
      (*w)["part"] = "borel-ideal";
      reject(r, std::move(*w));
      return r;
    }
    GroebnerBasis gb = computeGroebnerBasis(ordinary, MonomialOrder::degrevlex(n), ctx);
    const auto dimension = static_cast<std::int64_t>(standardMonomials(gb).size());
    r.details = {{"dimension", dimension}};
    if (dimension != factorial(n)) {
      reject(r, {{"part", "dimension"}, {"dimension", dimension}, {"expected", factorial(n)}});
      return r;
    }
    if (!parts.equivariant) return r;

    std::vector<Polynomial> shifted;
    std::vector<Rational> weights;
    for (int k = 1; k <= n; ++k) weights.emplace_back(k);
    weights.emplace_back(0);
    for (int i = 1; i <= n; ++i) {
      Rational ei = evaluate(elementarySymmetric(n, i), weights);
      shifted.push_back(elementarySymmetric(n, i) - pow(Polynomial::t(n), i) * ei);
    }
    auto equivariant = presentedGenerators(HessenbergFunction::flag(n), Mode::Equivariant, in);
    if (auto w = idealMismatch(equivariant, shifted, ctx)) {
      (*w)["part"] = "equivariant-borel-ideal";
      reject(r, std::move(*w));
    }
    return r;
  });
}

CheckResult checkHilbert(const HessenbergFunction& h, const GroebnerContext& ctx, const Inputs& in) {
  return timed([&] {
    CheckResult r = pass("hilbert", scopeOf(h));
    const int n = h.n();
    std::vector<int> degrees;
    std::int64_t product = 1;
    for (int j = 1; j <= n; ++j) {
      degrees.push_back(h(j) - j + 1);
      product *= h(j) - j + 1;
    }
    HilbertData expected{productOfQIntegers(degrees), 0};

    auto order = MonomialOrder::degrevlex(n);
    HilbertData ordinary = hilbertSeries(computeGroebnerBasis(presentedGenerators(h, Mode::Ordinary, in), order, ctx));
    r.details = {{"poincare", poincareJson(ordinary.numerator)}};
    if (auto d = ordinary.quotientDimension()) r.details["dimension"] = *d;
    if (n <= kDefaultFixedPointCap) r.details["fixedPoints"] = fixedPoints(h).size();

    if (ordinary != expected) {
      reject(r, {{"part", "product-formula"}, {"series", hilbertJson(ordinary)}, {"expected", hilbertJson(expected)}});
      return r;
    }
    if (ordinary.quotientDimension() != product) {
      reject(r, {{"part", "dimension"}, {"expected", product}});
      return r;
    }
    HilbertData equivariant =
        hilbertSeries(computeGroebnerBasis(presentedGenerators(h, Mode::Equivariant, in), order, ctx));
    if (equivariant.denominatorPower != 1 || equivariant.timesOneMinusQ() != ordinary) {
      reject(r, {{"part", "equivariant-series"}, {"series", hilbertJson(equivariant)}});
    }
    return r;
  });
}

// ---------------------------------------------------------------------------
// Negative controls

namespace {

struct Mutation {
  std::string target;
  std::string description;
  std::function<CheckResult(const Inputs&, const GroebnerContext&)> run;
  std::function<void(Inputs&)> mutate;
};

std::vector<Mutation> mutations() {
  const auto h233 = HessenbergFunction::parse(std::vector<int>{2, 3, 3});
  auto standardF = [](int i, int j, int n) { return fInductive(i, j, n); };
  auto at = [](int i0, int j0, auto base, auto change) {
    return [=](int i, int j, int n) {
      Polynomial v = base(i, j, n);
      return (i == i0 && j == j0) ? change(v, n) : v;
    };
  };
  std::vector<Mutation> list;
  list.push_back({"example-n4", "f_{2,1} with its sign flipped",
                  [](const Inputs& in, const GroebnerContext&) { return checkExampleN4(in); },
                  [=](Inputs& in) { in.f = at(2, 1, standardF, [](Polynomial v, int) { return -v; }); }});
  list.push_back({"closed-form", "closed f_{3,2} plus x_1 t",
                  [](const Inputs& in, const GroebnerContext&) { return checkClosedForm(4, in); },
                  [=](Inputs& in) {
                    in.fClosed = at(3, 2, [](int i, int j, int n) { return fClosed(i, j, n); },
                                    [](Polynomial v, int n) { return v + Polynomial::x(n, 1) * Polynomial::t(n); });
                  }});
  list.push_back({"t-specialization", "t-free f_{3,1} plus x_2^3",
                  [](const Inputs& in, const GroebnerContext&) { return checkTSpecialization(4, in); },
                  [=](Inputs& in) {
                    in.fCheck = at(3, 1, [](int i, int j, int n) { return fCheck(i, j, n); },
                                   [](Polynomial v, int n) { return v + pow(Polynomial::x(n, 2), 3); });
                  }});
  list.push_back({"homogeneity", "f_{2,1} plus x_1",
                  [](const Inputs& in, const GroebnerContext&) { return checkHomogeneity(3, in); },
                  [=](Inputs& in) { in.f = at(2, 1, standardF, [](Polynomial v, int n) { return v + Polynomial::x(n, 1); }); }});
  list.push_back({"localization", "231 added to the fixed points of (2,3,3)",
                  [=](const Inputs& in, const GroebnerContext&) { return checkLocalizationVanishing(h233, in); },
                  [](Inputs& in) {
                    in.fixedPoints = [](const HessenbergFunction& h) {
                      auto pts = fixedPoints(h);
                      pts.push_back(Permutation::fromOneLine({2, 3, 1}));
                      return pts;
                    };
                  }});
  list.push_back({"fixed-point-exactness", "321 removed from the fixed points of (2,3,3)",
                  [=](const Inputs& in, const GroebnerContext&) { return checkFixedPointExactness(h233, in); },
                  [](Inputs& in) {
                    in.fixedPoints = [](const HessenbergFunction& h) {
                      auto pts = fixedPoints(h);
                      std::erase(pts, Permutation::fromOneLine({3, 2, 1}));
                      return pts;
                    };
                  }});
  list.push_back({"peterson", "p_2 plus t",
                  [](const Inputs& in, const GroebnerContext& ctx) { return checkPeterson(3, ctx, in); },
                  [](Inputs& in) {
                    in.p = [](int i, int n) { return i == 2 ? p(i, n) + Polynomial::t(n) : p(i, n); };
                  }});
  list.push_back({"peterson", "f_{3,2} plus x_1 t",
                  [](const Inputs& in, const GroebnerContext& ctx) { return checkPeterson(3, ctx, in); },
                  [=](Inputs& in) {
                    in.f = at(3, 2, standardF, [](Polynomial v, int n) { return v + Polynomial::x(n, 1) * Polynomial::t(n); });
                  }});
  list.push_back({"flag-borel", "q_2 with its sign flipped",
                  [](const Inputs& in, const GroebnerContext& ctx) { return checkFlagBorel(3, {}, ctx, in); },
                  [](Inputs& in) { in.q = [](int r, int n) { return r == 2 ? -q(r, n) : q(r, n); }; }});
  list.push_back({"flag-borel", "f_{3,1} plus x_1 x_2 t",
                  [](const Inputs& in, const GroebnerContext& ctx) { return checkFlagBorel(3, {}, ctx, in); },
                  [=](Inputs& in) {
                    in.f = at(3, 1, standardF, [](Polynomial v, int n) {
                      return v + Polynomial::x(n, 1) * Polynomial::x(n, 2) * Polynomial::t(n);
                    });
                  }});
  list.push_back({"hilbert", "t-free f_{2,1} replaced by x_1 e_1",
                  [=](const Inputs& in, const GroebnerContext& ctx) { return checkHilbert(h233, ctx, in); },
                  [](Inputs& in) {
                    in.fCheck = [](int i, int j, int n) {
                      if (i == 2 && j == 1) return Polynomial::x(n, 1) * elementarySymmetric(n, 1);
                      return fCheck(i, j, n);
                    };
                  }});
  return list;
}

}  // namespace

std::vector<CheckResult> runNegativeControls(const GroebnerContext& ctx) {
  std::vector<CheckResult> out;
  for (const Mutation& m : mutations()) {
    out.push_back(timed([&] {
      Inputs in;
      m.mutate(in);
      CheckResult mutated = m.run(in, ctx);
      CheckResult r = pass("negative-controls", {{"target", m.target}, {"mutation", m.description}});
      if (mutated.passed || mutated.witness.is_null()) {
        reject(r, {{"undetected", m.description}, {"check", mutated.name}});
      } else {
        r.details = {{"witness", mutated.witness}};
      }
      return r;
    }));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names = {
      "example-n4", "closed-form", "t-specialization", "homogeneity", "localization",
      "fixed-point-exactness", "peterson", "flag-borel", "hilbert", "negative-controls",
  };
  return names;
}

VerificationReport runSuite(const std::vector<std::string>& names, const SuiteOptions& options, const Inputs& in) {
  if (options.symbolicNMax < 1 || options.groebnerNMax < 1) {
    fail(ErrorKind::InvalidArgument, "n-max must be at least 1");
  }
  std::set<std::string> selected;
  for (const std::string& name : names) {
    if (name == "all") {
      selected.insert(suiteNames().begin(), suiteNames().end());
    } else if (std::find(suiteNames().begin(), suiteNames().end(), name) != suiteNames().end()) {
      selected.insert(name);
    } else {
      fail(ErrorKind::InvalidArgument, "unknown check suite '" + name + "'");
    }
  }
  if (selected.empty()) fail(ErrorKind::InvalidArgument, "no check suite selected");

  // Each task yields one or more results; the slot order is the report order.
  using Task = std::function<std::vector<CheckResult>()>;
  std::vector<Task> tasks;
  const int symN = options.symbolicNMax;
  const int grbN = options.groebnerNMax;
  const GroebnerContext& ctx = options.groebner;
  auto one = [](auto f) -> Task { return [f] { return std::vector<CheckResult>{f()}; }; };

  for (const std::string& name : suiteNames()) {
    if (!selected.count(name)) continue;
    if (name == "example-n4") {
      tasks.push_back(one([&in] { return checkExampleN4(in); }));
    } else if (name == "closed-form") {
      for (int n = 1; n <= symN; ++n) tasks.push_back(one([&in, n] { return checkClosedForm(n, in); }));
    } else if (name == "t-specialization") {
      for (int n = 1; n <= symN; ++n) tasks.push_back(one([&in, n] { return checkTSpecialization(n, in); }));
    } else if (name == "homogeneity") {
      for (int n = 1; n <= symN; ++n) tasks.push_back(one([&in, n] { return checkHomogeneity(n, in); }));
    } else if (name == "localization") {
      for (int n = 1; n <= symN; ++n) {
        for (const auto& h : enumerateAll(n)) tasks.push_back(one([&in, h] { return checkLocalizationVanishing(h, in); }));
      }
    } else if (name == "fixed-point-exactness") {
      for (int n = 1; n <= symN; ++n) {
        for (const auto& h : enumerateAll(n)) tasks.push_back(one([&in, h] { return checkFixedPointExactness(h, in); }));
      }
    } else if (name == "peterson") {
      for (int n = 2; n <= grbN; ++n) tasks.push_back(one([&in, &ctx, n] { return checkPeterson(n, ctx, in); }));
    } else if (name == "flag-borel") {
      for (int n = 1; n <= symN; ++n) {
        FlagBorelParts parts{n <= grbN, n <= std::min(grbN, options.equivariantFlagNMax)};
        tasks.push_back(one([&in, &ctx, n, parts] { return checkFlagBorel(n, parts, ctx, in); }));
      }
    } else if (name == "hilbert") {
      for (int n = 1; n <= grbN; ++n) {
        for (const auto& h : enumerateAll(n)) tasks.push_back(one([&in, &ctx, h] { return checkHilbert(h, ctx, in); }));
      }
    } else if (name == "negative-controls") {
      tasks.push_back([&ctx] { return runNegativeControls(ctx); });
    }
  }

  std::vector<std::vector<CheckResult>> slots(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      try {
        slots[k] = tasks[k]();
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const auto jobs = static_cast<std::size_t>(std::max(1, options.jobs));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < std::min(jobs, tasks.size()); ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  VerificationReport report;
  for (auto& s : slots) {
    for (auto& r : s) report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace hesscoh
