#include "hesscoh/render.hpp"

#include <sstream>

#include "hesscoh/errors.hpp"

namespace hesscoh {

namespace {

std::string dumpJson(const Json& j) { return j.dump(2) + "\n"; }

std::string variablesText(int n, Mode mode) {
  std::string out;
  for (int k = 1; k <= n; ++k) out += (k > 1 ? ", x" : "x") + std::to_string(k);
  if (mode == Mode::Equivariant) out += ", t";
  return out;
}

Json variablesJson(int n, Mode mode) {
  Json out = Json::array();
  for (int k = 1; k <= n; ++k) out.push_back("x" + std::to_string(k));
  if (mode == Mode::Equivariant) out.push_back("t");
  return out;
}

std::string ringLatex(int n, Mode mode) {
  std::string out = "\\mathbb{Q}[";
  for (int k = 1; k <= n; ++k) out += (k > 1 ? ", x_{" : "x_{") + std::to_string(k) + "}";
  if (mode == Mode::Equivariant) out += ", t";
  return out + "]";
}

std::string latexDocument(const std::string& body) {
  return std::string(kLatexPreamble) + "\\begin{document}\n" + body + "\\end{document}\n";
}

std::string entryName(int i, int j, Mode mode) {
  return std::string(mode == Mode::Equivariant ? "f_{" : "fcheck_{") + std::to_string(i) + "," + std::to_string(j) + "}";
}

std::string entryLatex(int i, int j, Mode mode) {
  return std::string(mode == Mode::Equivariant ? "f_{" : "\\check{f}_{") + std::to_string(i) + "," + std::to_string(j) + "}";
}

Polynomial entry(int i, int j, int n, Mode mode) {
  return mode == Mode::Equivariant ? fInductive(i, j, n) : fCheck(i, j, n);
}

std::string factored(int i, int j, Mode mode) {
  return mode == Mode::Equivariant ? factoredLatex(i, j) : factoredCheckLatex(i, j);
}

Json entryJson(int i, int j, int n, Mode mode) {
  Polynomial f = entry(i, j, n, mode);
  return {{"i", i}, {"j", j}, {"text", toText(f)}, {"polynomial", toJson(f)}};
}

std::string seriesNumerator(const std::vector<std::int64_t>& numerator) {
  std::string out;
  for (std::size_t d = 0; d < numerator.size(); ++d) {
    std::int64_t c = numerator[d];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    std::int64_t mag = c < 0 ? -c : c;
    if (d == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += d == 1 ? std::string("q^2") : "q^" + std::to_string(2 * d);
  }
  return out.empty() ? "0" : out;
}

Json poincareCoefficients(const std::vector<std::int64_t>& numerator) {
  Json out = Json::array();
  for (std::size_t d = 0; d < numerator.size(); ++d) {
    if (d > 0) out.push_back(0);
    out.push_back(numerator[d]);
  }
  return out;
}

std::string hTuple(const HessenbergFunction& h) { return h.toString(); }

}  // namespace

std::string toString(Format format) {
  switch (format) {
    case Format::Text: return "text";
    case Format::Json: return "json";
    case Format::Latex: return "latex";
  }
  return "text";
}

Format parseFormat(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "latex") return Format::Latex;
  fail(ErrorKind::InvalidArgument, "unknown format '" + std::string(text) + "'");
}

std::string poincareText(const HilbertData& hd) {
  std::string num = seriesNumerator(hd.numerator);
  if (hd.denominatorPower == 0) return num;
  std::string den = hd.denominatorPower == 1 ? "(1 - q^2)" : "(1 - q^2)^" + std::to_string(hd.denominatorPower);
  bool single = num.find(' ') == std::string::npos;
  return (single ? num : "(" + num + ")") + "/" + den;
}

std::string renderPresent(const HessenbergFunction& h, const RenderOptions& options) {
  const int n = h.n();
  const Mode mode = options.mode;
  PresentedIdeal ideal = idealGenerators(h, mode);
  switch (options.format) {
    case Format::Json: {
      Json gens = Json::array();
      for (int j = 1; j <= n; ++j) gens.push_back(entryJson(h(j), j, n, mode));
      return dumpJson({{"schemaVersion", 1},
                       {"command", "present"},
                       {"h", h.values()},
                       {"n", n},
                       {"mode", toString(mode)},
                       {"variables", variablesJson(n, mode)},
                       {"generators", gens}});
    }
    case Format::Latex: {
      std::ostringstream body;
      body << "\\section*{Presentation for $h = " << hTuple(h) << "$ (" << toString(mode) << ")}\n";
      body << "\\[\n  " << ringLatex(n, mode) << " \\big/ \\big(";
      for (int j = 1; j <= n; ++j) body << (j > 1 ? ", " : "") << entryLatex(h(j), j, mode);
      body << "\\big)\n\\]\n\\begin{align*}\n";
      for (int j = 1; j <= n; ++j) {
        body << "  " << entryLatex(h(j), j, mode) << " &= " << factored(h(j), j, mode);
        body << (j < n ? " \\\\\n" : "\n");
      }
      body << "\\end{align*}\n";
      if (mode == Mode::Equivariant) {
        body << "Here $p_{k} = \\sum_{m=1}^{k} (x_{m} - m t)$.\n";
      }
      return latexDocument(body.str());
    }
    case Format::Text: break;
  }
  std::ostringstream out;
  out << "h: " << hTuple(h) << "\n";
  out << "mode: " << toString(mode) << "\n";
  out << "ring: Q[" << variablesText(n, mode) << "]\n";
  out << "generators:\n";
  for (int j = 1; j <= n; ++j) {
    out << "  " << entryName(h(j), j, mode) << " = " << toText(ideal.generators[static_cast<std::size_t>(j - 1)]) << "\n";
  }
  return out.str();
}

std::string renderGenerators(int n, const RenderOptions& options) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "n must be positive");
  if (n > options.enumerationCap) {
    fail(ErrorKind::ResourceLimit, "n = " + std::to_string(n) + " exceeds the cap " + std::to_string(options.enumerationCap));
  }
  const Mode mode = options.mode;
  switch (options.format) {
    case Format::Json: {
      Json entries = Json::array();
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) entries.push_back(entryJson(i, j, n, mode));
      }
      return dumpJson({{"schemaVersion", 1},
                       {"command", "generators"},
                       {"n", n},
                       {"mode", toString(mode)},
                       {"variables", variablesJson(n, mode)},
                       {"entries", entries}});
    }
    case Format::Latex: {
      std::ostringstream body;
      body << "\\section*{The polynomials $" << (mode == Mode::Equivariant ? "f" : "\\check{f}") << "_{i,j}$ for $n = " << n << "$}\n";
      body << "\\begin{align*}\n";
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
          body << "  " << entryLatex(i, j, mode) << " &= " << factored(i, j, mode);
          body << ((i == n && j == n) ? "\n" : " \\\\\n");
        }
      }
      body << "\\end{align*}\n";
      return latexDocument(body.str());
    }
    case Format::Text: break;
  }
  std::ostringstream out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) out << entryName(i, j, mode) << " = " << toText(entry(i, j, n, mode)) << "\n";
  }
  return out.str();
}

std::string renderFixedPoints(const HessenbergFunction& h, const RenderOptions& options) {
  auto points = fixedPoints(h, options.fixedPointCap);
  switch (options.format) {
    case Format::Json: {
      Json list = Json::array();
      for (const auto& w : points) list.push_back(w.oneLine());
      return dumpJson({{"schemaVersion", 1},
                       {"command", "fixed-points"},
                       {"h", h.values()},
                       {"count", points.size()},
                       {"fixedPoints", list}});
    }
    case Format::Latex: {
      std::ostringstream body;
      body << "\\section*{Fixed points for $h = " << hTuple(h) << "$}\n";
      body << points.size() << " permutations in one-line notation:\n\\begin{itemize}\n";
      for (const auto& w : points) body << "  \\item $" << w.toString() << "$\n";
      body << "\\end{itemize}\n";
      return latexDocument(body.str());
    }
    case Format::Text: break;
  }
  std::ostringstream out;
  for (const auto& w : points) out << w.toString() << "\n";
  return out.str();
}

std::string renderEnumerate(int n, const RenderOptions& options) {
  auto all = enumerateAll(n, options.enumerationCap);
  switch (options.format) {
    case Format::Json: {
      Json list = Json::array();
      for (const auto& h : all) list.push_back(h.values());
      return dumpJson({{"schemaVersion", 1}, {"command", "enumerate"}, {"n", n}, {"count", all.size()}, {"functions", list}});
    }
    case Format::Latex: {
      std::ostringstream body;
      body << "\\section*{Hessenberg functions for $n = " << n << "$}\n";
      body << all.size() << " functions:\n\\begin{itemize}\n";
      for (const auto& h : all) body << "  \\item $" << h.toString() << "$\n";
      body << "\\end{itemize}\n";
      return latexDocument(body.str());
    }
    case Format::Text: break;
  }
  std::ostringstream out;
  for (const auto& h : all) out << h.toString() << "\n";
  return out.str();
}

std::string renderHilbert(const HessenbergFunction& h, const RenderOptions& options) {
  const Mode mode = options.mode;
  auto gens = idealGenerators(h, mode).generators;
  HilbertData hd = hilbertSeries(computeGroebnerBasis(gens, MonomialOrder::degrevlex(h.n()), options.groebner));
  std::optional<std::size_t> fixedCount;
  if (h.n() <= options.fixedPointCap) fixedCount = fixedPoints(h, options.fixedPointCap).size();
  auto dimension = hd.quotientDimension();

  switch (options.format) {
    case Format::Json: {
      Json j = {{"schemaVersion", 1},
                {"command", "hilbert"},
                {"h", h.values()},
                {"mode", toString(mode)},
                {"poincare", poincareText(hd)},
                {"numerator", poincareCoefficients(hd.numerator)},
                {"denominatorPower", hd.denominatorPower},
                {"dimension", nullptr},
                {"fixedPoints", nullptr}};
      if (dimension) j["dimension"] = *dimension;
      if (fixedCount) j["fixedPoints"] = *fixedCount;
      return dumpJson(j);
    }
    case Format::Latex: {
      std::string series = poincareText(hd);
      std::ostringstream body;
      body << "\\section*{Poincar\\'e series for $h = " << hTuple(h) << "$ (" << toString(mode) << ")}\n";
      std::string num = seriesNumerator(hd.numerator);
      body << "\\[\n  ";
      if (hd.denominatorPower == 0) {
        body << num;
      } else {
        body << "\\frac{" << num << "}{(1 - q^{2})" << (hd.denominatorPower > 1 ? "^{" + std::to_string(hd.denominatorPower) + "}" : "") << "}";
      }
      body << "\n\\]\n";
      if (dimension) body << "Total dimension " << *dimension << ".\n";
      if (fixedCount) body << "Number of fixed points " << *fixedCount << ".\n";
      return latexDocument(body.str());
    }
    case Format::Text: break;
  }
  std::ostringstream out;
  out << "h: " << hTuple(h) << "\n";
  out << "mode: " << toString(mode) << "\n";
  out << "poincare: " << poincareText(hd) << "\n";
  if (dimension) {
    out << "dimension: " << *dimension << "\n";
  } else {
    out << "dimension: infinite\n";
  }
  if (fixedCount) out << "fixed points: " << *fixedCount << "\n";
  return out.str();
}

std::string renderReport(const VerificationReport& report, const RenderOptions& options) {
  switch (options.format) {
    case Format::Json: {
      Json j = report.toJson(options.timing);
      j["command"] = "verify";
      return dumpJson(j);
    }
    case Format::Latex: {
      std::ostringstream body;
      body << "\\section*{Verification report}\n";
      body << report.passedCount() << " of " << report.results.size() << " checks passed.\n";
      body << "\\begin{itemize}\n";
      for (const auto& r : report.results) {
        body << "  \\item \\texttt{" << r.name << "} " << (r.passed ? "passed" : "failed");
        body << " \\verb|" << r.scope.dump() << "|\n";
      }
      body << "\\end{itemize}\n";
      return latexDocument(body.str());
    }
    case Format::Text: break;
  }
  return report.toText(options.timing);
}

}  // namespace hesscoh
