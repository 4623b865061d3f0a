#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "enprune/complex.hpp"

namespace enprune {

struct HomologyOptions {
  /// Largest total degree examined; defaults to top generator degree + 3.
  std::optional<int> bound;
  /// Positions below this are skipped.
  std::size_t min_position = 0;
  /// Also report pieces whose homology is zero.
  bool keep_all_pieces = false;
  /// Attach a representative cycle to each nonzero piece.
  bool witnesses = false;
  /// When set, only degrees accepted by the filter are examined.
  std::function<bool(const MultiDegree&)> degree_filter;
};

struct HomologyPiece {
  std::size_t position = 0;
  MultiDegree degree;
  int total = 0;
  std::size_t dim = 0;
  std::size_t kernel = 0;
  std::size_t image = 0;
  std::size_t homology = 0;
  /// Coordinates in F_position of a cycle that is not a boundary.
  std::optional<std::vector<Polynomial>> witness;
};

struct HomologyReport {
  int bound = 0;
  std::vector<HomologyPiece> pieces;

  /// Sum of homology dimensions at one position over all examined degrees.
  std::size_t total_at(std::size_t position) const;
  /// True when no examined piece at a position >= `from` has homology.
  bool vanishes_from(std::size_t from) const;
  const HomologyPiece* first_nonzero(std::size_t from = 0) const;
};

int default_homology_bound(const BasedComplex& c);

/// Homology of the complex restricted to each graded piece of total degree at
/// most the bound, over T = S / (killed variables). Every variable that is not
/// killed must have positive total degree.
HomologyReport truncated_homology(const BasedComplex& c, const HomologyOptions& options = {});

}  // namespace enprune
