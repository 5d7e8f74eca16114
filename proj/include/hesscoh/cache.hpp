#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>

#include "hesscoh/groebner.hpp"
#include "hesscoh/serialize.hpp"

namespace hesscoh {

/// Buchberger settings plus an optional directory of cached reduced bases.
struct GroebnerContext {
  GroebnerOptions options;
  std::optional<std::filesystem::path> cacheDir;
};

/// Hex SHA-256 of the canonical serialization of (generators, order, scope).
std::string groebnerCacheKey(std::span<const Polynomial> generators, const MonomialOrder& order,
                             VariableScope scope);

Json toJson(const MonomialOrder& order);
Json toJson(const GroebnerBasis& gb);
GroebnerBasis groebnerBasisFromJson(const Json& j);

/// buchberger() with a read-through cache. Unreadable or mismatched cache
/// entries are recomputed and overwritten.
GroebnerBasis computeGroebnerBasis(std::span<const Polynomial> generators, const MonomialOrder& order,
                                   const GroebnerContext& context);

}  // namespace hesscoh
