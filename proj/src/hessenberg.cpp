#include "hesscoh/hessenberg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hesscoh/errors.hpp"

namespace hesscoh {

HessenbergFunction HessenbergFunction::parse(std::span<const int> values) {
  if (values.empty()) fail(ErrorKind::Parse, "empty");
  const int n = static_cast<int>(values.size());
  for (int i = 1; i <= n; ++i) {
    int hi = values[static_cast<std::size_t>(i - 1)];
    if (hi > n || hi < 1) {
      fail(ErrorKind::Parse, "out-of-range: h(" + std::to_string(i) + ")=" + std::to_string(hi) +
                                 " is not in 1.." + std::to_string(n));
    }
    if (hi < i) {
      fail(ErrorKind::Parse, "not-above-diagonal: h(" + std::to_string(i) + ")=" +
                                 std::to_string(hi) + " < " + std::to_string(i));
    }
    if (i > 1 && hi < values[static_cast<std::size_t>(i - 2)]) {
      fail(ErrorKind::Parse, "not-weakly-increasing: h(" + std::to_string(i) + ")=" +
                                 std::to_string(hi) + " < h(" + std::to_string(i - 1) + ")=" +
                                 std::to_string(values[static_cast<std::size_t>(i - 2)]));
    }
  }
  return HessenbergFunction(std::vector<int>(values.begin(), values.end()));
}

std::string HessenbergFunction::toString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out + ")";
}

HessenbergFunction HessenbergFunction::flag(int n) {
  return HessenbergFunction(std::vector<int>(static_cast<std::size_t>(n), n));
}

HessenbergFunction HessenbergFunction::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return HessenbergFunction(std::move(v));
}

HessenbergFunction HessenbergFunction::peterson(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = std::min(i + 1, n);
  return HessenbergFunction(std::move(v));
}

Permutation::Permutation(std::vector<int> oneLine)
    : oneLine_(std::move(oneLine)), inverse_(oneLine_.size()) {
  for (std::size_t j = 0; j < oneLine_.size(); ++j) {
    inverse_[static_cast<std::size_t>(oneLine_[j] - 1)] = static_cast<int>(j) + 1;
  }
}

Permutation Permutation::fromOneLine(std::vector<int> oneLine) {
  const int n = static_cast<int>(oneLine.size());
  if (n == 0) fail(ErrorKind::InvalidArgument, "empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : oneLine) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      fail(ErrorKind::InvalidArgument, "not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return Permutation(std::move(oneLine));
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::string Permutation::toString() const {
  std::string out;
  for (std::size_t i = 0; i < oneLine_.size(); ++i) {
    if (n() >= 10 && i) out += ',';
    out += std::to_string(oneLine_[i]);
  }
  return out;
}

namespace {

void extend(std::vector<int>& prefix, int n, std::vector<HessenbergFunction>& out) {
  const int i = static_cast<int>(prefix.size()) + 1;
  if (i > n) {
    out.push_back(HessenbergFunction::parse(prefix));
    return;
  }
  int lo = std::max(i, prefix.empty() ? 1 : prefix.back());
  for (int v = lo; v <= n; ++v) {
    prefix.push_back(v);
    extend(prefix, n, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<HessenbergFunction> enumerateAll(int n, int cap) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "n must be >= 1");
  if (n > cap) {
    fail(ErrorKind::ResourceLimit, "enumeration of Hessenberg functions capped at n=" + std::to_string(cap));
  }
  std::vector<HessenbergFunction> out;
  std::vector<int> prefix;
  extend(prefix, n, out);
  return out;
}

int complexDimension(const HessenbergFunction& h) {
  int d = 0;
  for (int j = 1; j <= h.n(); ++j) d += h(j) - j;
  return d;
}

bool oracleFixedPointCheck(const Permutation& w, const HessenbergFunction& h) {
  const int n = h.n();
  if (w.n() != n) fail(ErrorKind::DimensionMismatch, "permutation and Hessenberg function differ in n");
  for (int i = 1; i <= n; ++i) {
    std::set<int> target;  // basis vectors spanning V_{h(i)}
    for (int k = 1; k <= h(i); ++k) target.insert(w(k));
    for (int k = 1; k <= i; ++k) {
      int image = w(k) - 1;  // N e_{w(k)} = e_{w(k)-1}, or 0
      if (image >= 1 && !target.contains(image)) return false;
    }
  }
  return true;
}

std::vector<Permutation> fixedPoints(const HessenbergFunction& h, int cap) {
  const int n = h.n();
  if (n > cap) {
    fail(ErrorKind::ResourceLimit, "fixed-point enumeration capped at n=" + std::to_string(cap));
  }
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<int> position(static_cast<std::size_t>(n));
  std::vector<Permutation> out;
  do {
    for (int j = 0; j < n; ++j) position[static_cast<std::size_t>(w[static_cast<std::size_t>(j)] - 1)] = j + 1;
    bool ok = true;
    for (int j = 1; j <= n && ok; ++j) {
      int v = w[static_cast<std::size_t>(j - 1)];
      if (v >= 2 && position[static_cast<std::size_t>(v - 2)] > h(j)) ok = false;
    }
    if (ok) out.push_back(Permutation::fromOneLine(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

bool dominatedBy(const HessenbergFunction& h, const HessenbergFunction& other) {
  if (h.n() != other.n()) return false;
  for (int i = 1; i <= h.n(); ++i) {
    if (h(i) > other(i)) return false;
  }
  return true;
}

}  // namespace hesscoh
