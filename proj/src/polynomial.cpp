#include "hesscoh/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <utility>

#include "hesscoh/errors.hpp"

namespace hesscoh {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(int n) : exponents_(static_cast<std::size_t>(n) + 1, 0) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "ambient n must be positive");
}

Monomial::Monomial(std::vector<int> xExponents, int tExponent) : exponents_(std::move(xExponents)) {
  if (exponents_.empty()) fail(ErrorKind::InvalidArgument, "ambient n must be positive");
  exponents_.push_back(tExponent);
  for (int e : exponents_) {
    if (e < 0) fail(ErrorKind::InvalidArgument, "negative exponent");
    weight_ += e;
  }
}

Monomial Monomial::ofVariable(int n, Variable v, int power) {
  if (v.index < 0 || v.index > n) {
    fail(ErrorKind::DimensionMismatch,
         "variable x" + std::to_string(v.index) + " outside ring with n=" + std::to_string(n));
  }
  Monomial m(n);
  std::size_t pos = v.isT() ? static_cast<std::size_t>(n) : static_cast<std::size_t>(v.index - 1);
  m.exponents_[pos] = power;
  m.weight_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

bool Monomial::coprimeWith(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  r.weight_ = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    r.exponents_[i] = std::max(exponents_[i], other.exponents_[i]);
    r.weight_ += r.exponents_[i];
  }
  return r;
}

Monomial Monomial::divide(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) r.exponents_[i] -= other.exponents_[i];
  r.weight_ -= other.weight_;
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.exponents_.size(); ++i) r.exponents_[i] += b.exponents_[i];
  r.weight_ += b.weight_;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int e : exponents_) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

int compareCanonical(const Monomial& a, const Monomial& b) {
  if (a.totalWeight() != b.totalWeight()) return a.totalWeight() < b.totalWeight() ? -1 : 1;
  auto ea = a.exponents();
  auto eb = b.exponents();
  // Last variable first: t, then x_n, ..., x_1. Smaller exponent wins.
  for (std::size_t i = ea.size(); i-- > 0;) {
    if (ea[i] != eb[i]) return ea[i] < eb[i] ? 1 : -1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

void requireSameRing(const Polynomial& a, const Polynomial& b) {
  if (a.ambientN() != b.ambientN()) {
    fail(ErrorKind::DimensionMismatch, "polynomials live in rings with n=" +
                                           std::to_string(a.ambientN()) + " and n=" +
                                           std::to_string(b.ambientN()));
  }
}

bool canonicalGreater(const Term& a, const Term& b) {
  return compareCanonical(a.monomial, b.monomial) > 0;
}

// Merges two descending term lists, b scaled by sign.
std::vector<Term> mergeTerms(const std::vector<Term>& a, const std::vector<Term>& b, bool negateB) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compareCanonical(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (negateB) out.back().coefficient = -out.back().coefficient;
      ++j;
    } else {
      Rational s = negateB ? a[i].coefficient - b[j].coefficient : a[i].coefficient + b[j].coefficient;
      if (!s.isZero()) out.push_back(Term{a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (negateB) out.back().coefficient = -out.back().coefficient;
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(int n) : n_(n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "ambient n must be positive");
}

Polynomial Polynomial::constant(int n, const Rational& c) {
  Polynomial p(n);
  if (!c.isZero()) p.terms_.push_back(Term{Monomial(n), c});
  return p;
}

Polynomial Polynomial::variable(int n, Variable v) {
  return monomial(Monomial::ofVariable(n, v), 1);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.ambientN());
  if (!c.isZero()) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::fromTerms(int n, std::vector<Term> terms) {
  Polynomial p(n);
  for (const Term& t : terms) {
    if (t.monomial.ambientN() != n) {
      fail(ErrorKind::DimensionMismatch, "term monomial has wrong ambient n");
    }
  }
  std::sort(terms.begin(), terms.end(), canonicalGreater);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient.isZero()) p.terms_.pop_back();
    } else if (!t.coefficient.isZero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.isOne());
}

std::optional<int> Polynomial::totalDegree() const {
  if (terms_.empty()) return std::nullopt;
  // Graded order: the first term has maximal weight.
  return terms_.front().monomial.totalWeight();
}

bool Polynomial::isHomogeneous() const {
  if (terms_.empty()) return true;
  int w = terms_.front().monomial.totalWeight();
  return terms_.back().monomial.totalWeight() == w;
}

bool Polynomial::involves(Variable v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.exponent(v) != 0; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return compareCanonical(t.monomial, key) > 0;
  });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return Rational(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  requireSameRing(*this, other);
  terms_ = mergeTerms(terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  requireSameRing(*this, other);
  terms_ = mergeTerms(terms_, other.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.isZero()) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coefficient *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  requireSameRing(a, b);
  if (a.isZero() || b.isZero()) return Polynomial(a.ambientN());
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const Term& ta : a.terms()) {
    for (const Term& tb : b.terms()) {
      Monomial m = ta.monomial * tb.monomial;
      auto [it, inserted] = acc.try_emplace(std::move(m), ta.coefficient);
      if (inserted) {
        it->second *= tb.coefficient;
      } else {
        it->second += ta.coefficient * tb.coefficient;
      }
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.isZero()) terms.push_back(Term{m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(), canonicalGreater);
  Polynomial r(a.ambientN());
  r.terms_ = std::move(terms);
  return r;
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial pow(const Polynomial& base, int exponent) {
  if (exponent < 0) fail(ErrorKind::InvalidArgument, "negative exponent");
  Polynomial result = Polynomial::constant(base.ambientN(), 1);
  Polynomial square = base;
  while (exponent > 0) {
    if (exponent & 1) result *= square;
    exponent >>= 1;
    if (exponent > 0) square *= square;
  }
  return result;
}

Polynomial substitute(const Polynomial& a, const Substitution& assignment) {
  const int n = a.ambientN();
  for (const auto& [var, image] : assignment) {
    if (var.index < 0 || var.index > n) {
      fail(ErrorKind::DimensionMismatch, "substitution for a variable outside the ring");
    }
    if (image.ambientN() != n) {
      fail(ErrorKind::DimensionMismatch, "substituted polynomial has ambient n=" +
                                             std::to_string(image.ambientN()) + ", expected " +
                                             std::to_string(n));
    }
  }
  std::map<std::pair<int, int>, Polynomial> powers;
  auto imagePower = [&](const Variable& v, const Polynomial& image, int e) -> const Polynomial& {
    auto key = std::make_pair(v.index, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, pow(image, e)).first;
    return it->second;
  };

  Polynomial result(n);
  for (const Term& term : a.terms()) {
    std::vector<int> xs(term.monomial.exponents().begin(), term.monomial.exponents().end() - 1);
    int te = term.monomial.t();
    Polynomial product = Polynomial::constant(n, term.coefficient);
    for (const auto& [var, image] : assignment) {
      int e = term.monomial.exponent(var);
      if (e == 0) continue;
      if (var.isT()) {
        te = 0;
      } else {
        xs[static_cast<std::size_t>(var.index - 1)] = 0;
      }
      product *= imagePower(var, image, e);
    }
    product *= Polynomial::monomial(Monomial(std::move(xs), te));
    result += product;
  }
  return result;
}

Rational evaluate(const Polynomial& a, std::span<const Rational> point) {
  const int n = a.ambientN();
  if (point.size() != static_cast<std::size_t>(n) + 1) {
    fail(ErrorKind::DimensionMismatch, "evaluation point has " + std::to_string(point.size()) +
                                           " coordinates, expected " + std::to_string(n + 1));
  }
  Rational total(0);
  for (const Term& term : a.terms()) {
    Rational value = term.coefficient;
    auto exps = term.monomial.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      for (int e = 0; e < exps[i]; ++e) value *= point[i];
    }
    total += value;
  }
  return total;
}

Polynomial elementarySymmetric(int n, int i, std::span<const int> variableIndices) {
  const int m = static_cast<int>(variableIndices.size());
  if (i < 0 || i > m) {
    fail(ErrorKind::InvalidArgument, "elementary symmetric degree " + std::to_string(i) +
                                         " out of range for " + std::to_string(m) + " variables");
  }
  for (int k : variableIndices) {
    if (k < 1 || k > n) fail(ErrorKind::InvalidArgument, "variable index out of range");
  }
  // Coefficients of prod_k (1 + x_k z), truncated at z^i.
  std::vector<Polynomial> e(static_cast<std::size_t>(i) + 1, Polynomial(n));
  e[0] = Polynomial::constant(n, 1);
  for (int k : variableIndices) {
    Polynomial xk = Polynomial::x(n, k);
    for (int d = i; d >= 1; --d) e[static_cast<std::size_t>(d)] += xk * e[static_cast<std::size_t>(d - 1)];
  }
  return e[static_cast<std::size_t>(i)];
}

Polynomial elementarySymmetric(int n, int i) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) all[static_cast<std::size_t>(k)] = k + 1;
  return elementarySymmetric(n, i, all);
}

Polynomial powerSum(int n, int r) {
  if (r < 1) fail(ErrorKind::InvalidArgument, "power sum exponent must be >= 1");
  std::vector<Term> terms;
  for (int k = 1; k <= n; ++k) terms.push_back(Term{Monomial::ofVariable(n, Variable::x(k), r), 1});
  return Polynomial::fromTerms(n, std::move(terms));
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string monomialText(const Monomial& m) {
  std::string out;
  auto emit = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e > 1) out += '^' + std::to_string(e);
  };
  for (int k = 1; k <= m.ambientN(); ++k) emit("x" + std::to_string(k), m.x(k));
  emit("t", m.t());
  return out;
}

std::string monomialLatex(const Monomial& m) {
  std::string out;
  auto emit = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += name;
    if (e > 1) out += "^{" + std::to_string(e) + "}";
  };
  for (int k = 1; k <= m.ambientN(); ++k) emit("x_{" + std::to_string(k) + "}", m.x(k));
  emit("t", m.t());
  return out;
}

template <class MonoFn, class CoeffFn>
std::string render(const Polynomial& a, MonoFn mono, CoeffFn coeff, const char* joiner) {
  if (a.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& term : a.terms()) {
    Rational c = term.coefficient;
    bool negative = c.sign() < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string m = mono(term.monomial);
    if (m.empty()) {
      out += coeff(c);
    } else if (c.isOne()) {
      out += m;
    } else {
      out += coeff(c) + joiner + m;
    }
  }
  return out;
}

}  // namespace

std::string toText(const Polynomial& a) {
  return render(a, monomialText, [](const Rational& c) { return c.toString(); }, "*");
}

std::string toLatex(const Polynomial& a) {
  auto coeff = [](const Rational& c) {
    if (c.isInteger()) return c.numerator();
    return "\\frac{" + c.numerator() + "}{" + c.denominator() + "}";
  };
  return render(a, monomialLatex, coeff, " ");
}

// ---------------------------------------------------------------------------
// Parsing: recursive descent over
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := atom ['^' integer]
//   atom   := number | identifier | '(' expr ')' | '{' expr '}'

namespace {

class Parser {
public:
  Parser(std::string_view text, int n,
         const std::map<std::string, Polynomial, std::less<>>& symbols)
      : text_(text), n_(n), symbols_(symbols) {}

  Polynomial parse() {
    Polynomial p = expr();
    skipSpace();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, "polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc(n_);
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    Polynomial first = term();
    acc = negate ? -first : first;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial next = term();
      if (c == '+') acc += next; else acc -= next;
    }
    return acc;
  }

  bool startsFactor(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '{' || c == '_';
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (startsFactor(c)) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (peek() == '^') {
      ++pos_;
      skipSpace();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      base = pow(base, std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(' || c == '{') {
      char close = c == '(' ? ')' : '}';
      ++pos_;
      Polynomial inner = expr();
      if (peek() != close) error(std::string("expected '") + close + "'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      return Polynomial::constant(n_, Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      // letters, optional '_', digits: "x12", "x_3", "p1", "t"
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ + 1 < text_.size() && text_[pos_] == '_' &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
      }
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) error("unexpected '_'");
      std::string_view name = text_.substr(start, pos_ - start);
      if (auto it = symbols_.find(name); it != symbols_.end()) return it->second;
      if (name == "t") return Polynomial::t(n_);
      if (name.size() > 1 && name[0] == 'x') {
        std::string_view digits = name.substr(1);
        if (!digits.empty() && digits[0] == '_') digits = digits.substr(1);
        if (!digits.empty() &&
            std::all_of(digits.begin(), digits.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
          int k = std::stoi(std::string(digits));
          if (k < 1 || k > n_) {
            fail(ErrorKind::DimensionMismatch,
                 "variable " + std::string(name) + " outside ring with n=" + std::to_string(n_));
          }
          return Polynomial::x(n_, k);
        }
      }
      error("unknown symbol '" + std::string(name) + "'");
    }
    error(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int n_;
  const std::map<std::string, Polynomial, std::less<>>& symbols_;
};

}  // namespace

Polynomial parsePolynomial(std::string_view text, int n,
                           const std::map<std::string, Polynomial, std::less<>>& symbols) {
  return Parser(text, n, symbols).parse();
}

}  // namespace hesscoh
