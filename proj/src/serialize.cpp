#include "hesscoh/serialize.hpp"

#include "hesscoh/errors.hpp"

namespace hesscoh {

Json toJson(const Monomial& m) {
  auto exps = m.exponents();
  return Json{{"x", std::vector<int>(exps.begin(), exps.end() - 1)}, {"t", m.t()}};
}

Json toJson(const Polynomial& p) {
  Json terms = Json::array();
  for (const Term& term : p.terms()) {
    Json entry = toJson(term.monomial);
    entry["c"] = term.coefficient.toFraction();
    terms.push_back(std::move(entry));
  }
  return Json{{"n", p.ambientN()}, {"terms", std::move(terms)}};
}

Polynomial polynomialFromJson(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Term> terms;
    for (const Json& entry : j.at("terms")) {
      auto xs = entry.at("x").get<std::vector<int>>();
      if (static_cast<int>(xs.size()) != n) {
        fail(ErrorKind::DimensionMismatch, "term exponent vector does not match n");
      }
      terms.push_back(Term{Monomial(std::move(xs), entry.at("t").get<int>()),
                           Rational::parse(entry.at("c").get<std::string>())});
    }
    return Polynomial::fromTerms(n, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed polynomial JSON: ") + e.what());
  }
}

}  // namespace hesscoh
