#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hesscoh/cache.hpp"
#include "hesscoh/generators.hpp"
#include "hesscoh/verify.hpp"

namespace hesscoh {

enum class Format { Text, Json, Latex };

std::string toString(Format format);
Format parseFormat(std::string_view text);

struct RenderOptions {
  Mode mode = Mode::Equivariant;
  Format format = Format::Text;
  int fixedPointCap = kDefaultFixedPointCap;
  int enumerationCap = kDefaultEnumerationCap;
  GroebnerContext groebner;
  bool timing = true;
};

/// Poincare series in cohomological degrees, e.g. "1 + 2q^2 + q^4" or
/// "1/(1 - q^2)".
std::string poincareText(const HilbertData& hd);

/// LaTeX output is a complete document using the preamble below.
inline constexpr std::string_view kLatexPreamble =
    "\\documentclass{article}\n"
    "\\usepackage{amsmath,amssymb}\n"
    "\\allowdisplaybreaks\n";

std::string renderPresent(const HessenbergFunction& h, const RenderOptions& options);
/// Full lower-triangular table f_{i,j} (or the t = 0 forms in ordinary mode).
std::string renderGenerators(int n, const RenderOptions& options);
std::string renderFixedPoints(const HessenbergFunction& h, const RenderOptions& options);
std::string renderEnumerate(int n, const RenderOptions& options);
std::string renderHilbert(const HessenbergFunction& h, const RenderOptions& options);
std::string renderReport(const VerificationReport& report, const RenderOptions& options);

}  // namespace hesscoh
