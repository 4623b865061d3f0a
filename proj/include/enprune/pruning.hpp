#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enprune/complex.hpp"
#include "enprune/homology.hpp"
#include "enprune/pattern.hpp"

namespace enprune {

/// Sets the variables in `zero` to zero and, for i = 1..t, deletes the zero
/// columns of A_i together with the matching generators of F_i and rows of
/// A_{i+1}. The result lives over T = S / (killed variables).
BasedComplex prune(const BasedComplex& c, const std::vector<std::size_t>& zero);

struct VerificationReport {
  bool composes = true;
  std::optional<std::size_t> compose_failure;
  bool minimal = true;
  HomologyReport homology;

  bool exact() const { return homology.vanishes_from(1); }
  bool ok() const { return composes && minimal && exact(); }
  /// One line per check, naming the first failing invariant.
  std::string summary() const;
};

/// compose_check, is_minimal and truncated homology in positions >= 1.
VerificationReport verify_resolution(const BasedComplex& c, std::optional<int> bound = std::nullopt,
                                     bool witnesses = true);

struct SparseResolution {
  BasedComplex complex;
  BettiTable betti;
  VerificationReport report;
};

/// prune(eagon_northcott(k, n), Z(p)) with its verification report.
/// `verify` = false skips the truncated homology step.
SparseResolution resolve_sparse_determinantal(const SparsePattern& p, const Field& field = Field(),
                                              bool verify = true, std::optional<int> bound = std::nullopt);

/// Pruned resolution of S/I_k(p) without any verification.
BasedComplex pruned_resolution(const SparsePattern& p, const Field& field = Field());

/// Betti table of (I:v)/I for the variable at cell (row, col): the difference
/// of the pruned tables of I and of I with that cell zeroed, moved so that
/// beta_0 sits at the generator degree k - 1.
BettiTable colon_quotient_betti(const SparsePattern& p, int row, int col, const Field& field = Field());

}  // namespace enprune
