#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "enprune/field.hpp"

namespace enprune {

/// Dense exponent vector indexed by ring variables.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  static Monomial variable(std::size_t nvars, std::size_t var, int power = 1);

  std::size_t size() const { return exps.size(); }
  int operator[](std::size_t i) const { return exps[i]; }
  int& operator[](std::size_t i) { return exps[i]; }

  int degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;
  /// Indices of variables with positive exponent.
  std::vector<std::size_t> support() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// Exact quotient; throws if b does not divide a.
Monomial operator/(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring K[v_0, ..., v_{n-1}] with named variables.
///
/// Variable order is the declaration order; index 0 is the largest variable
/// for lex and grevlex.
class Ring {
 public:
  static RingPtr make(Field field, std::vector<std::string> names);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  /// Same field, one more variable appended.
  RingPtr extended(const std::string& name) const;
  /// Same variables over another field.
  RingPtr with_field(Field f) const;

  std::string to_string(const Monomial& m) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.names_ == b.names_;
  }

 private:
  Ring(Field field, std::vector<std::string> names);

  Field field_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
bool is_valid_variable_name(std::string_view name);

}  // namespace enprune
