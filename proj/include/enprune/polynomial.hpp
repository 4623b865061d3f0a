#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "enprune/ring.hpp"

namespace enprune {

/// Sparse polynomial over a Ring. Terms are kept in a map keyed by exponent
/// vector; zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Coeff>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial variable(RingPtr ring, std::size_t var);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial term(RingPtr ring, Monomial m, const Coeff& c);
  /// Parses the plain-text grammar: `3/2*x_1_2^2 - y_3 + 7`.
  static Polynomial parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const Monomial& m) const;
  Coeff constant_term() const;
  bool is_constant() const;
  /// True when the polynomial is c * m for a single monomial m.
  bool is_monomial_term() const { return terms_.size() == 1; }
  int total_degree() const;
  /// Largest exponent of one variable, or -1 for the zero polynomial.
  int degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial scaled(const Coeff& c) const;
  Polynomial times_monomial(const Monomial& m, const Coeff& c) const;

  /// Replace variable `var` by `value` everywhere.
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  /// Set every variable flagged in `kill` to zero.
  Polynomial kill(const std::vector<bool>& kill) const;
  /// Re-express in another ring; `var_map[i]` is the target index of variable i,
  /// or nullopt when variable i must not occur.
  Polynomial map_to(const RingPtr& target, const std::vector<std::optional<std::size_t>>& var_map) const;
  Polynomial with_field(const RingPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void add_term(const Monomial& m, const Coeff& c);
  void check_same_ring(const Polynomial& other) const;

  RingPtr ring_;
  TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

/// Prints a coefficient the way the text grammar reads it back.
std::string coeff_to_string(const Field& f, const Coeff& c);

}  // namespace enprune
