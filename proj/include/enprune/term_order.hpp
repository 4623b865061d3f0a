#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "enprune/polynomial.hpp"

namespace enprune {

/// Monomial order. Weight orders compare by a non-negative integer weight
/// first and break ties with lex or grevlex.
class TermOrder {
 public:
  enum class Kind { lex, grevlex, weight };

  static TermOrder lex() { return TermOrder(Kind::lex, {}, Kind::lex); }
  static TermOrder grevlex() { return TermOrder(Kind::grevlex, {}, Kind::grevlex); }
  static TermOrder weight(std::vector<long> w, Kind tiebreak = Kind::grevlex);
  /// `lex`, `grevlex`, `weight:1,1,2,...[;lex|;grevlex]`.
  static TermOrder parse(std::string_view spec, std::size_t nvars);

  Kind kind() const { return kind_; }
  Kind tiebreak() const { return tiebreak_; }
  const std::vector<long>& weights() const { return weights_; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string to_string() const;

 private:
  TermOrder(Kind k, std::vector<long> w, Kind tie) : kind_(k), weights_(std::move(w)), tiebreak_(tie) {}

  Kind kind_;
  std::vector<long> weights_;
  Kind tiebreak_;
};

int compare_lex(const Monomial& a, const Monomial& b);
int compare_grevlex(const Monomial& a, const Monomial& b);
long weight_of(const Monomial& m, const std::vector<long>& w);

struct LeadTerm {
  Monomial monomial;
  Coeff coefficient;
};

/// Order-maximal term of a nonzero polynomial.
LeadTerm lead_term(const Polynomial& f, const TermOrder& order);

/// Largest w-weight among the terms of f (f nonzero).
long max_weight(const Polynomial& f, const std::vector<long>& w);

/// Homogenizes f with respect to w using a new variable of weight 1: each term
/// is multiplied by t^(max weight - its weight). If `target` is null the ring
/// of f is extended by a variable named "t"; otherwise `target` must be that
/// extension (same variables followed by the homogenizing variable).
Polynomial weight_homogenize(const Polynomial& f, const std::vector<long>& w, RingPtr target = nullptr);

}  // namespace enprune
