#include "hesscoh/generators.hpp"

#include <map>
#include <mutex>

#include "hesscoh/errors.hpp"

namespace hesscoh {

namespace {

void requireTriangle(int i, int j, int n, int jMin = 1) {
  if (n < 1 || j < jMin || i < j || i > n) {
    fail(ErrorKind::InvalidArgument, "index (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") outside n >= i >= j >= " + std::to_string(jMin) +
                                         " with n=" + std::to_string(n));
  }
}

// x_a - x_b - t
Polynomial linearFactor(int a, int b, int n) {
  return Polynomial::x(n, a) - Polynomial::x(n, b) - Polynomial::t(n);
}

template <class Table>
std::shared_ptr<const Table> cachedTable(int n, std::shared_ptr<const Table> (*build)(int)) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const Table>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build(n)).first;
  return it->second;
}

}  // namespace

std::string toString(Mode mode) { return mode == Mode::Equivariant ? "equivariant" : "ordinary"; }

Mode parseMode(std::string_view text) {
  if (text == "equivariant") return Mode::Equivariant;
  if (text == "ordinary") return Mode::Ordinary;
  fail(ErrorKind::InvalidArgument, "unknown mode '" + std::string(text) + "'");
}

Polynomial p(int i, int n) {
  if (n < 1 || i < 0 || i > n) {
    fail(ErrorKind::InvalidArgument, "p_" + std::to_string(i) + " undefined for n=" + std::to_string(n));
  }
  std::vector<Term> terms;
  for (int k = 1; k <= i; ++k) terms.push_back(Term{Monomial::ofVariable(n, Variable::x(k)), 1});
  terms.push_back(Term{Monomial::ofVariable(n, Variable::t()), Rational(-i * (i + 1) / 2)});
  return Polynomial::fromTerms(n, std::move(terms));
}

// ---------------------------------------------------------------------------

GeneratorMatrix::GeneratorMatrix(int n) : n_(n), zero_(n) {
  rows_.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) rows_[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(i), Polynomial(n));
  for (int j = 1; j <= n; ++j) {
    rows_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(j - 1)] = p(j, n);
  }
  // Fill by increasing i so f_{i-1,*} is complete before row i.
  for (int i = 2; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      Polynomial value = linearFactor(j, i, n) * entry(i - 1, j);
      value += entry(i - 1, j - 1);
      rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::move(value);
    }
  }
}

std::shared_ptr<const GeneratorMatrix> GeneratorMatrix::forN(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "n must be >= 1");
  return cachedTable<GeneratorMatrix>(n, [](int m) {
    return std::shared_ptr<const GeneratorMatrix>(new GeneratorMatrix(m));
  });
}

const Polynomial& GeneratorMatrix::entry(int i, int j) const {
  if (j == 0 && i >= 0 && i <= n_) return zero_;
  requireTriangle(i, j, n_);
  return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

DeltaMatrix::DeltaMatrix(int n) : n_(n) {
  rows_.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) rows_[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(i), Polynomial(n));
  for (int i = 1; i <= n; ++i) {
    rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] =
        Polynomial::x(n, i) - Polynomial::t(n) * Rational(i);
  }
  // Lower diagonal k uses only diagonal k-1.
  for (int k = 1; k < n; ++k) {
    for (int j = 1; j + k <= n; ++j) {
      const int i = j + k;
      Polynomial sum(n);
      for (int l = 1; l <= j; ++l) sum += entry(i - j + l - 1, l);
      rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = sum * linearFactor(j, i, n);
    }
  }
}

std::shared_ptr<const DeltaMatrix> DeltaMatrix::forN(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "n must be >= 1");
  return cachedTable<DeltaMatrix>(n, [](int m) {
    return std::shared_ptr<const DeltaMatrix>(new DeltaMatrix(m));
  });
}

const Polynomial& DeltaMatrix::entry(int i, int j) const {
  requireTriangle(i, j, n_);
  return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

Polynomial fInductive(int i, int j, int n) {
  requireTriangle(i, j, n, 0);
  return GeneratorMatrix::forN(n)->entry(i, j);
}

Polynomial delta(int i, int j, int n) {
  requireTriangle(i, j, n);
  return DeltaMatrix::forN(n)->entry(i, j);
}

Polynomial fClosed(int i, int j, int n) {
  requireTriangle(i, j, n);
  auto table = DeltaMatrix::forN(n);
  Polynomial sum(n);
  for (int k = 1; k <= j; ++k) sum += table->entry(i - j + k, k);
  return sum;
}

Polynomial fCheck(int i, int j, int n) {
  requireTriangle(i, j, n);
  Polynomial sum(n);
  for (int k = 1; k <= j; ++k) {
    Polynomial term = Polynomial::x(n, k);
    for (int l = j + 1; l <= i; ++l) term *= Polynomial::x(n, k) - Polynomial::x(n, l);
    sum += term;
  }
  return sum;
}

Polynomial q(int r, int n) {
  if (n < 1 || r < 1 || r > n) {
    fail(ErrorKind::InvalidArgument, "q_" + std::to_string(r) + " undefined for n=" + std::to_string(n));
  }
  Polynomial sum(n);
  for (int k = 1; k <= n + 1 - r; ++k) {
    Polynomial term = Polynomial::x(n, k);
    for (int l = n + 2 - r; l <= n; ++l) term *= Polynomial::x(n, k) - Polynomial::x(n, l);
    sum += term;
  }
  return sum;
}

PresentedIdeal idealGenerators(const HessenbergFunction& h, Mode mode) {
  const int n = h.n();
  PresentedIdeal ideal{h, mode, {}};
  ideal.generators.reserve(static_cast<std::size_t>(n));
  auto table = GeneratorMatrix::forN(n);
  for (int j = 1; j <= n; ++j) {
    ideal.generators.push_back(mode == Mode::Equivariant ? table->entry(h(j), j) : fCheck(h(j), j, n));
  }
  return ideal;
}

// ---------------------------------------------------------------------------
// Factored display

namespace {

std::string linearLatex(int a, int b) {
  return "(x_{" + std::to_string(a) + "} - x_{" + std::to_string(b) + "} - t)";
}

// Summands of f_{i,j} as products of linear factors with a trailing p_k or a
// braced sub-sum, following the recursion.
std::vector<std::string> factoredSummands(int i, int j) {
  if (j == 0) return {};
  if (i == j) return {"p_{" + std::to_string(j) + "}"};
  std::vector<std::string> out = factoredSummands(i - 1, j - 1);
  std::vector<std::string> inner = factoredSummands(i - 1, j);
  std::string prefix = linearLatex(j, i);
  if (inner.size() == 1) {
    out.push_back(prefix + inner.front());
  } else {
    std::string body;
    for (std::size_t k = 0; k < inner.size(); ++k) body += (k ? " + " : "") + inner[k];
    out.push_back(prefix + "\\{" + body + "\\}");
  }
  return out;
}

}  // namespace

std::string factoredLatex(int i, int j) {
  if (j < 1 || i < j) fail(ErrorKind::InvalidArgument, "index outside the lower triangle");
  std::vector<std::string> parts = factoredSummands(i, j);
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? " + " : "") + parts[k];
  return out;
}

std::string factoredCheckLatex(int i, int j) {
  if (j < 1 || i < j) fail(ErrorKind::InvalidArgument, "index outside the lower triangle");
  std::string out;
  for (int k = 1; k <= j; ++k) {
    if (k > 1) out += " + ";
    out += "x_{" + std::to_string(k) + "}";
    for (int l = j + 1; l <= i; ++l) out += "(x_{" + std::to_string(k) + "} - x_{" + std::to_string(l) + "})";
  }
  return out;
}

}  // namespace hesscoh
