#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hesscoh {

/// Largest n for which all of S_n is enumerated by default (7! = 5040).
inline constexpr int kDefaultFixedPointCap = 7;
/// Largest n accepted by enumerateAll by default (Catalan(12) = 208012).
inline constexpr int kDefaultEnumerationCap = 12;

/// A weakly increasing h: {1..n} -> {1..n} with h(i) >= i.
class HessenbergFunction {
public:
  /// Throws Error(Parse) with one of the diagnostics "empty",
  /// "not-above-diagonal", "not-weakly-increasing", "out-of-range".
  static HessenbergFunction parse(std::span<const int> values);

  int n() const { return static_cast<int>(values_.size()); }
  /// 1-based.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& values() const { return values_; }

  /// "(2,3,3)"
  std::string toString() const;

  static HessenbergFunction flag(int n);
  static HessenbergFunction identity(int n);
  static HessenbergFunction peterson(int n);

  friend bool operator==(const HessenbergFunction&, const HessenbergFunction&) = default;
  friend auto operator<=>(const HessenbergFunction&, const HessenbergFunction&) = default;

private:
  explicit HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {}
  std::vector<int> values_;
};

inline HessenbergFunction parseHessenberg(std::span<const int> values) {
  return HessenbergFunction::parse(values);
}

/// A bijection of {1..n} in one-line notation: oneLine[j-1] = w(j).
class Permutation {
public:
  static Permutation fromOneLine(std::vector<int> oneLine);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(oneLine_.size()); }
  int operator()(int j) const { return oneLine_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<int>& oneLine() const { return oneLine_; }
  /// 1-based position of value v.
  int positionOf(int v) const { return inverse_[static_cast<std::size_t>(v - 1)]; }

  /// "132" for n < 10, "1,3,2" otherwise.
  std::string toString() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.oneLine_ == b.oneLine_; }
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.oneLine_ <=> b.oneLine_; }

private:
  explicit Permutation(std::vector<int> oneLine);
  std::vector<int> oneLine_;
  std::vector<int> inverse_;
};

/// All Hessenberg functions on {1..n} in lexicographic order.
std::vector<HessenbergFunction> enumerateAll(int n, int cap = kDefaultEnumerationCap);

/// sum_j (h(j) - j).
int complexDimension(const HessenbergFunction& h);

/// Direct test of N V_i subset V_{h(i)} for every i, where V_i is the
/// coordinate flag of w and N is the principal nilpotent with N e_1 = 0,
/// N e_m = e_{m-1}.
bool oracleFixedPointCheck(const Permutation& w, const HessenbergFunction& h);

/// Permutations w with pos(w(j) - 1) <= h(j) whenever w(j) >= 2, sorted
/// lexicographically.
std::vector<Permutation> fixedPoints(const HessenbergFunction& h, int cap = kDefaultFixedPointCap);

/// Pointwise h <= h'.
bool dominatedBy(const HessenbergFunction& h, const HessenbergFunction& other);

}  // namespace hesscoh
