#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hesscoh/cache.hpp"
#include "hesscoh/generators.hpp"
#include "hesscoh/hessenberg.hpp"
#include "hesscoh/serialize.hpp"

namespace hesscoh {

struct CheckResult {
  std::string name;
  /// n, h and any extra parameters.
  Json scope = Json::object();
  bool passed = true;
  /// Null when passed; otherwise the offending index, polynomial or
  /// permutation together with the nonzero residue.
  Json witness;
  /// Observations reported without being asserted.
  Json details;
  double seconds = 0.0;
};

struct VerificationReport {
  std::vector<CheckResult> results;

  bool passed() const;
  std::size_t passedCount() const;
  std::size_t failedCount() const { return results.size() - passedCount(); }

  /// {"schemaVersion": 1, "passed", "summary", "results": [...]}.
  Json toJson(bool includeTiming) const;
  /// One "PASS name scope" / "FAIL name scope: witness" line per result.
  std::string toText(bool includeTiming) const;
};

/// The constructions the checks consume. Defaults are the library
/// functions; tests substitute mutated versions to confirm that the checks
/// notice.
struct Inputs {
  std::function<Polynomial(int i, int j, int n)> f = fInductive;
  std::function<Polynomial(int i, int j, int n)> fClosed = hesscoh::fClosed;
  std::function<Polynomial(int i, int j, int n)> fCheck = hesscoh::fCheck;
  std::function<Polynomial(int r, int n)> q = hesscoh::q;
  std::function<Polynomial(int i, int n)> p = hesscoh::p;
  std::function<std::vector<Permutation>(const HessenbergFunction&)> fixedPoints =
      [](const HessenbergFunction& h) { return hesscoh::fixedPoints(h); };

  static const Inputs& standard();
};

/// Generators of I(h) or its t = 0 form built from the given inputs.
std::vector<Polynomial> presentedGenerators(const HessenbergFunction& h, Mode mode, const Inputs& in);

CheckResult checkExampleN4(const Inputs& in = Inputs::standard());
CheckResult checkClosedForm(int n, const Inputs& in = Inputs::standard());
CheckResult checkTSpecialization(int n, const Inputs& in = Inputs::standard());
/// Every f_{i,j} for the given n is homogeneous of weight i - j + 1, which
/// covers every generator of every I(h).
CheckResult checkHomogeneity(int n, const Inputs& in = Inputs::standard());
CheckResult checkLocalizationVanishing(const HessenbergFunction& h, const Inputs& in = Inputs::standard());
CheckResult checkFixedPointExactness(const HessenbergFunction& h, const Inputs& in = Inputs::standard());
CheckResult checkPeterson(int n, const GroebnerContext& ctx = {}, const Inputs& in = Inputs::standard());

struct FlagBorelParts {
  /// Ideal equality with the elementary symmetric polynomials and n!.
  bool groebner = true;
  /// Ideal equality of I(n,...,n) with e_i(x) - e_i(t, 2t, ..., nt).
  bool equivariant = true;
};
CheckResult checkFlagBorel(int n, FlagBorelParts parts, const GroebnerContext& ctx = {},
                           const Inputs& in = Inputs::standard());
CheckResult checkHilbert(const HessenbergFunction& h, const GroebnerContext& ctx = {},
                         const Inputs& in = Inputs::standard());

/// Runs every check against a mutated input. Each result passes iff the
/// mutated check failed and produced a witness.
std::vector<CheckResult> runNegativeControls(const GroebnerContext& ctx = {});

struct SuiteOptions {
  int symbolicNMax = 6;
  int groebnerNMax = 4;
  /// Largest n for the equivariant flag comparison.
  int equivariantFlagNMax = 3;
  int jobs = 1;
  GroebnerContext groebner;
};

/// Known suite names in report order; "all" selects every one of them.
const std::vector<std::string>& suiteNames();

/// Unknown names throw Error(InvalidArgument). Results are ordered by suite
/// then by n and h regardless of jobs. Resource-limit errors propagate.
VerificationReport runSuite(const std::vector<std::string>& names, const SuiteOptions& options = {},
                            const Inputs& in = Inputs::standard());

}  // namespace hesscoh
