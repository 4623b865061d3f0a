#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "enprune/betti.hpp"
#include "enprune/grading.hpp"
#include "enprune/polynomial.hpp"

namespace enprune {

struct Generator {
  std::string label;
  MultiDegree degree;
};

/// Free module with an ordered, labeled, graded basis.
struct GradedFreeModule {
  std::vector<Generator> gens;

  std::size_t rank() const { return gens.size(); }
};

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  Polynomial value;
};

/// Sparse matrix of polynomials stored as (row, col, value) triplets, sorted
/// by (row, col), with no zero values.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<MatrixEntry>& entries() const { return entries_; }

  /// Sets (row, col); a zero value removes the entry.
  void set(std::size_t row, std::size_t col, Polynomial value);
  const Polynomial* find(std::size_t row, std::size_t col) const;
  /// Entries of one column, ordered by row.
  std::vector<const MatrixEntry*> column(std::size_t col) const;

  /// Keeps only the listed rows and columns, in the given order.
  SparseMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  SparseMatrix transform(const std::function<Polynomial(const Polynomial&)>& f) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

/// F_t --A_t--> F_{t-1} --> ... --> F_1 --A_1--> F_0 with explicit bases.
///
/// `killed` lists ring variables that are zero in the base ring: the complex
/// lives over T = S / (killed).
class BasedComplex {
 public:
  BasedComplex(RingPtr ring, Grading grading, std::vector<GradedFreeModule> modules,
               std::vector<SparseMatrix> maps, std::vector<std::size_t> killed = {});

  const RingPtr& ring() const { return ring_; }
  const Grading& grading() const { return grading_; }
  const std::vector<std::size_t>& killed() const { return killed_; }
  std::vector<bool> killed_mask() const;

  /// t: number of maps.
  std::size_t length() const { return maps_.size(); }
  const GradedFreeModule& module(std::size_t i) const { return modules_.at(i); }
  const std::vector<GradedFreeModule>& modules() const { return modules_; }
  /// A_i : F_i -> F_{i-1}, for 1 <= i <= length().
  const SparseMatrix& map(std::size_t i) const { return maps_.at(i - 1); }
  const std::vector<SparseMatrix>& maps() const { return maps_; }
  std::vector<std::size_t> ranks() const;

  /// Throws InputError on dimension mismatch, duplicate labels, or an entry
  /// that is not homogeneous of the degree forced by its row and column.
  void validate() const;

 private:
  RingPtr ring_;
  Grading grading_;
  std::vector<GradedFreeModule> modules_;
  std::vector<SparseMatrix> maps_;
  std::vector<std::size_t> killed_;
};

struct ComposeResult {
  bool ok = true;
  /// Position i of the first failing product A_{i-1} * A_i (so i >= 2).
  std::optional<std::size_t> failing_position;
};

/// Checks A_{i-1} * A_i == 0 exactly (modulo the killed variables).
ComposeResult compose_check(const BasedComplex& c);
/// No matrix entry has a nonzero constant term.
bool is_minimal(const BasedComplex& c);
/// Cancels unit entries until the complex is minimal. Pivot order: lowest map
/// index first, then first unit in row-major order.
BasedComplex minimize(const BasedComplex& c);
/// beta_{i,j} = number of generators of F_i of total degree j. Rejects
/// non-minimal input.
BettiTable betti_table(const BasedComplex& c);
/// Tensor product with the Koszul complex 0 -> S(-deg v) --v--> S.
BasedComplex tensor_koszul_variable(const BasedComplex& c, std::size_t var);
/// Tensor with S/(vars): set the variables to zero without deleting anything.
BasedComplex kill_variables(const BasedComplex& c, const std::vector<std::size_t>& vars);
/// Same complex over another coefficient field (coefficients reduced or lifted).
BasedComplex change_field(const BasedComplex& c, const Field& field);
/// Drops trailing modules of rank zero (keeps F_0).
BasedComplex trim(const BasedComplex& c);

}  // namespace enprune
