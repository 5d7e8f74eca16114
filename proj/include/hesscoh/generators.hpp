#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hesscoh/hessenberg.hpp"
#include "hesscoh/polynomial.hpp"

namespace hesscoh {

enum class Mode { Equivariant, Ordinary };

std::string toString(Mode mode);
Mode parseMode(std::string_view text);

/// p_i = sum_{k<=i} (x_k - k t), with p_0 = 0.
Polynomial p(int i, int n);

/// Lower-triangular table of f_{i,j}, n >= i >= j >= 1, built by the column
/// recursion f_{i,j} = f_{i-1,j-1} + (x_j - x_i - t) f_{i-1,j} from the
/// diagonal f_{j,j} = p_j. Instances are shared and immutable.
class GeneratorMatrix {
public:
  static std::shared_ptr<const GeneratorMatrix> forN(int n);

  int n() const { return n_; }
  /// j = 0 gives the zero polynomial.
  const Polynomial& entry(int i, int j) const;

private:
  explicit GeneratorMatrix(int n);
  int n_;
  Polynomial zero_;
  std::vector<std::vector<Polynomial>> rows_;  // rows_[i-1][j-1]
};

/// Same shape as GeneratorMatrix, holding the diagonal-sum pieces Delta_{i,j}.
class DeltaMatrix {
public:
  static std::shared_ptr<const DeltaMatrix> forN(int n);

  int n() const { return n_; }
  const Polynomial& entry(int i, int j) const;

private:
  explicit DeltaMatrix(int n);
  int n_;
  std::vector<std::vector<Polynomial>> rows_;
};

Polynomial fInductive(int i, int j, int n);
Polynomial delta(int i, int j, int n);
/// f_{i,j} as sum_{k=1}^j Delta_{i-j+k,k}.
Polynomial fClosed(int i, int j, int n);
/// t-free closed formula sum_{k=1}^j x_k prod_{l=j+1}^i (x_k - x_l).
Polynomial fCheck(int i, int j, int n);
/// q_r = sum_{k=1}^{n+1-r} x_k prod_{l=n+2-r}^n (x_k - x_l), 1 <= r <= n.
Polynomial q(int r, int n);

struct PresentedIdeal {
  HessenbergFunction h;
  Mode mode;
  /// Column order j = 1..n; generator j is f_{h(j),j} (or its t = 0 form).
  std::vector<Polynomial> generators;

  std::pair<int, int> index(int j) const { return {h(j), j}; }
};

PresentedIdeal idealGenerators(const HessenbergFunction& h, Mode mode);

/// Display of f_{i,j} unrolled through the recursion and factored through
/// the p_k, e.g. "(x_{1} - x_{2} - t) p_{1}" for f_{2,1}.
std::string factoredLatex(int i, int j);
/// Display of the t = 0 form as a sum of products of linear factors.
std::string factoredCheckLatex(int i, int j);

}  // namespace hesscoh
