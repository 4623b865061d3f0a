#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enprune/polynomial.hpp"

namespace enprune {

using MultiDegree = std::vector<int>;

MultiDegree operator+(const MultiDegree& a, const MultiDegree& b);
MultiDegree operator-(const MultiDegree& a, const MultiDegree& b);
std::string to_string(const MultiDegree& d);

/// Grading of a polynomial ring by a free abelian group Z^dim: each variable
/// has a degree vector, and a linear functional `total_weights` defines the
/// total degree used for truncation and Betti tables.
class Grading {
 public:
  Grading() = default;
  Grading(std::string name, std::vector<MultiDegree> var_degrees, std::vector<int> total_weights);

  /// N^vars: variable i has degree e_i.
  static Grading fine(std::size_t nvars);
  /// Z: every variable has degree 1.
  static Grading standard(std::size_t nvars);
  /// Z^(k+n): variable for cell (i, j) has degree e_i + f_j; total degree is
  /// the column part. `cells[v]` is the (row, column) of variable v.
  static Grading row_column(int k, int n, const std::vector<std::pair<int, int>>& cells);
  /// Z: variable i has degree w[i].
  static Grading weighted(const std::vector<long>& w);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return total_weights_.size(); }
  std::size_t nvars() const { return var_degrees_.size(); }
  const MultiDegree& var_degree(std::size_t v) const { return var_degrees_.at(v); }
  const std::vector<MultiDegree>& var_degrees() const { return var_degrees_; }
  const std::vector<int>& total_weights() const { return total_weights_; }

  MultiDegree zero() const { return MultiDegree(dim(), 0); }
  MultiDegree degree(const Monomial& m) const;
  int total(const MultiDegree& d) const;
  int total(const Monomial& m) const { return total(degree(m)); }

  /// Degree of a homogeneous polynomial, nullopt if f is zero or not homogeneous.
  std::optional<MultiDegree> homogeneous_degree(const Polynomial& f) const;
  bool is_homogeneous(const Polynomial& f, const MultiDegree& d) const;

  /// Prepends one component carrying the given weights; the new variable
  /// (appended last) gets degree (1, 0, ..., 0). Total degree becomes the
  /// weight component.
  Grading with_weight_component(const std::vector<long>& w) const;
  /// Drops the variable at `var` from the grading (degrees of other variables kept).
  Grading without_variable(std::size_t var) const;
  Grading with_total_weights(std::vector<int> total) const;
  /// For a grading built by with_weight_component: total degree taken from the
  /// original components again (the weight component is ignored).
  Grading with_base_total() const;
  const std::vector<int>& base_total() const { return base_total_; }
  Grading with_stored_base_total(std::vector<int> base) const;

  friend bool operator==(const Grading&, const Grading&) = default;

 private:
  std::string name_;
  std::vector<MultiDegree> var_degrees_;
  std::vector<int> total_weights_;
  std::vector<int> base_total_;
};

}  // namespace enprune
