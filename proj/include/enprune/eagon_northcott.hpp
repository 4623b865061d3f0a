#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enprune/complex.hpp"
#include "enprune/pattern.hpp"
#include "enprune/term_order.hpp"

namespace enprune {

/// Eagon-Northcott complex of the generic k x n matrix over the generic ring
/// of `pattern` (row-column graded). When the pattern has zeros they are
/// substituted into every map and recorded as killed; nothing is deleted.
BasedComplex eagon_northcott(const SparsePattern& pattern, const Field& field = Field());
BasedComplex eagon_northcott(int k, int n, const Field& field = Field());

/// Divided-power exponents of total `degree` over `k` rows, (degree,0,...,0) first.
std::vector<std::vector<int>> divided_power_basis(int k, int degree);

/// Entries of maps A_2.. are single signed variables, with no variable
/// repeated inside a row or a column of one map. Returns a description of the
/// first violation.
std::optional<std::string> check_entry_structure(const BasedComplex& c);

/// Weight homogenization of every map over the ring extended by `t`. Column
/// degrees are the smallest that make every entry homogeneous.
BasedComplex homogenize_complex(const BasedComplex& c, const std::vector<long>& weights);

/// Sets the homogenizing variable (last ring variable, named t) to zero and
/// drops it from the ring; total degree reverts to the original grading.
/// Complexes without such a variable are returned unchanged.
BasedComplex set_t_zero(const BasedComplex& c);

/// 0 -> S --(D23, -D13, D12)^T--> S^3 --M--> S^2 for the 2 x 3 matrix M whose
/// entries are the six given variable names (row-major). Standard grading.
BasedComplex buchsbaum_rim_2x3(const std::vector<std::string>& names = {"x", "y", "z", "a", "b", "c"},
                               const Field& field = Field());

}  // namespace enprune
