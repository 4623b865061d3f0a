#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "enprune/betti.hpp"
#include "enprune/pattern.hpp"

namespace enprune {

struct RegPdim {
  int regularity;
  int projective_dimension;
};

/// reg = max(j - i), pdim = largest i with a nonzero entry.
RegPdim reg_and_pdim(const BettiTable& b);

/// beta_0 = 1 in degree 0, beta_i = C(k+i-2, k-1) C(n, k+i-1) in degree k+i-1.
BettiTable en_betti_formula(int k, int n);

long binomial(long n, long k);

/// Pure diagram on degrees 0 = d_0 < d_1 < ... < d_p, normalized so that
/// beta_0 = 1: beta_i = prod_{j >= 1, j != i} d_j / |d_j - d_i|.
struct PureDiagram {
  std::vector<int> degrees;
  std::vector<mpq_class> betti;

  static PureDiagram herzog_kuhl(std::vector<int> degrees);
};

struct TwoDiagramSolution {
  PureDiagram b1;
  PureDiagram b2;
  mpq_class a1;
  mpq_class a2;
  BettiTable table;
};

/// Betti table a1 B1 + a2 B2 with B1 pure on (0, d, ..., d+pd-1), B2 pure on
/// (0, d, ..., d+pd-2), and a1, a2 fixed by beta_0 = 1 and beta_1 = mu.
/// Throws InputError when a coefficient is negative, VerificationError when
/// the combination is not integral.
TwoDiagramSolution betti_from_mu(int d, int pd, long mu);

struct PerimeterStats {
  int max_perimeter = 0;
  int zero_columns = 0;
  std::optional<ZeroRectangle> rectangle;
};

PerimeterStats perimeter_stats(const SparsePattern& p);

}  // namespace enprune
