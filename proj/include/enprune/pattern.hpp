#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "enprune/grading.hpp"
#include "enprune/polynomial.hpp"

namespace enprune {

/// Zero/variable layout of a k x n sparse generic matrix.
///
/// Every cell, zero or not, owns a variable of the generic ring (row-major),
/// so the generic matrix X and its sparse specialization share one ring. Zero
/// cells are the variables Z that the pattern sets to zero.
class SparsePattern {
 public:
  SparsePattern(int k, int n, std::vector<bool> zero, std::vector<std::string> names = {});

  /// Fully generic k x n matrix with variables x_i_j.
  static SparsePattern generic(int k, int n);
  /// Bit r*n + j of `mask` set means cell (r, j) is zero.
  static SparsePattern from_mask(int k, int n, std::uint64_t mask);
  /// .pat text: "k n" then k rows of `0`, `*` or a variable name.
  static SparsePattern parse(std::string_view text);
  static SparsePattern load(const std::string& path);

  int k() const { return k_; }
  int n() const { return n_; }
  std::size_t cell_index(int r, int j) const { return static_cast<std::size_t>(r * n_ + j); }
  bool is_zero(int r, int j) const { return zero_[cell_index(r, j)]; }
  const std::string& name(int r, int j) const { return names_[cell_index(r, j)]; }
  std::uint64_t mask() const;
  std::size_t zero_count() const;

  /// Same variable names with every cell generic.
  SparsePattern without_zeros() const;
  /// Same layout with one more cell set to zero.
  SparsePattern with_zero(int r, int j) const;
  /// Indices (into the generic ring) of the zero cells.
  std::vector<std::size_t> killed() const;
  std::vector<int> zero_columns() const;
  /// The pattern's variable at generic-ring index v: (row, column).
  std::pair<int, int> cell_of(std::size_t v) const {
    return {static_cast<int>(v) / n_, static_cast<int>(v) % n_};
  }

  RingPtr generic_ring(const Field& field = Field()) const;
  Grading row_column_grading() const;
  std::string to_text() const;

  friend bool operator==(const SparsePattern&, const SparsePattern&) = default;

 private:
  int k_;
  int n_;
  std::vector<bool> zero_;
  std::vector<std::string> names_;
};

struct Minor {
  std::vector<int> columns;  // 0-based, increasing
  Polynomial value;
};

/// All C(n, k) maximal minors in lex order of column sets, with the zero cells
/// substituted. Zero minors are kept (value is the zero polynomial).
std::vector<Minor> minors(const SparsePattern& p, const RingPtr& ring);

struct ZeroRectangle {
  std::vector<int> rows;
  std::vector<int> columns;
  int perimeter() const { return 2 * static_cast<int>(rows.size() + columns.size()); }
};

/// Largest-perimeter all-zero submatrix with nonempty row and column sets;
/// nullopt when the pattern has no zero.
std::optional<ZeroRectangle> largest_zero_rectangle(const SparsePattern& p);

/// True when every maximal minor vanishes: some zero rectangle has
/// perimeter at least 2n + 2.
bool is_ideal_zero(const SparsePattern& p);

/// Column subsets (0-based) of size k from {0..n-1} in lex order.
std::vector<std::vector<int>> subsets(int n, int k);

}  // namespace enprune
