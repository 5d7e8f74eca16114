#include "hesscoh/cache.hpp"

#include <openssl/evp.h>

#include <array>
#include <atomic>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "hesscoh/errors.hpp"

namespace hesscoh {

namespace {

constexpr int kCacheFormat = 1;

std::string toString(VariableScope scope) {
  switch (scope) {
    case VariableScope::Auto: return "auto";
    case VariableScope::XOnly: return "x";
    case VariableScope::XAndT: return "xt";
  }
  return "auto";
}

std::string sha256Hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    fail(ErrorKind::Io, "SHA-256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

MonomialOrder orderFromJson(const Json& j, int n) {
  std::vector<Variable> priority;
  for (const auto& v : j.at("priority")) priority.push_back(Variable{v.get<int>()});
  return MonomialOrder(n, parseOrderKind(j.at("kind").get<std::string>()), std::move(priority));
}

std::optional<GroebnerBasis> load(const std::filesystem::path& file, const MonomialOrder& order) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (j.at("format").get<int>() != kCacheFormat) return std::nullopt;
    GroebnerBasis gb = groebnerBasisFromJson(j.at("basis"));
    if (!(gb.order() == order)) return std::nullopt;
    return gb;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store(const std::filesystem::path& dir, const std::filesystem::path& file, const GroebnerBasis& gb) {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorKind::Io, "cannot create cache directory " + dir.string() + ": " + ec.message());
  Json j = {{"format", kCacheFormat}, {"basis", toJson(gb)}};
  auto tmp = file;
  tmp += ".tmp" + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp);
    if (!out) fail(ErrorKind::Io, "cannot write cache entry " + tmp.string());
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    fail(ErrorKind::Io, "cannot publish cache entry " + file.string());
  }
}

}  // namespace

Json toJson(const MonomialOrder& order) {
  Json priority = Json::array();
  for (Variable v : order.priority()) priority.push_back(v.index);
  return {{"kind", toString(order.kind())}, {"priority", priority}};
}

Json toJson(const GroebnerBasis& gb) {
  Json basis = Json::array();
  for (const Polynomial& g : gb.basis()) basis.push_back(toJson(g));
  const auto& s = gb.stats();
  return {{"n", gb.ambientN()},
          {"order", toJson(gb.order())},
          {"basis", basis},
          {"includesT", gb.includesT()},
          {"homogeneous", gb.homogeneous()},
          {"stats",
           {{"pairsProcessed", s.pairsProcessed},
            {"reductionsToZero", s.reductionsToZero},
            {"pairsSkipped", s.pairsSkipped}}}};
}

GroebnerBasis groebnerBasisFromJson(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Polynomial> basis;
    for (const auto& g : j.at("basis")) basis.push_back(polynomialFromJson(g));
    GroebnerStats stats;
    stats.pairsProcessed = j.at("stats").at("pairsProcessed").get<std::size_t>();
    stats.reductionsToZero = j.at("stats").at("reductionsToZero").get<std::size_t>();
    stats.pairsSkipped = j.at("stats").at("pairsSkipped").get<std::size_t>();
    return GroebnerBasis(orderFromJson(j.at("order"), n), std::move(basis), stats,
                         j.at("includesT").get<bool>(), j.at("homogeneous").get<bool>());
  } catch (const Json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed Groebner basis JSON: ") + e.what());
  }
}

std::string groebnerCacheKey(std::span<const Polynomial> generators, const MonomialOrder& order,
                             VariableScope scope) {
  Json gens = Json::array();
  for (const Polynomial& g : generators) gens.push_back(toJson(g));
  Json key = {{"format", kCacheFormat}, {"generators", gens}, {"order", toJson(order)}, {"scope", toString(scope)}};
  return sha256Hex(key.dump());
}

GroebnerBasis computeGroebnerBasis(std::span<const Polynomial> generators, const MonomialOrder& order,
                                   const GroebnerContext& context) {
  if (!context.cacheDir) return buchberger(generators, order, context.options);
  const auto file = *context.cacheDir / (groebnerCacheKey(generators, order, context.options.scope) + ".json");
  if (auto cached = load(file, order)) return *cached;
  GroebnerBasis gb = buchberger(generators, order, context.options);
  store(*context.cacheDir, file, gb);
  return gb;
}

}  // namespace hesscoh
