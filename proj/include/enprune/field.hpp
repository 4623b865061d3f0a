#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace enprune {

/// Raised for malformed input: bad text, mismatched rings, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed object fails a check that should hold by construction.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Coeff = mpq_class;

/// Coefficient field: the rationals or a prime field GF(p).
///
/// Prime-field elements are stored as integers in [0, p) inside an mpq_class so
/// that polynomials have one coefficient type regardless of the field.
class Field {
 public:
  enum class Kind { rationals, prime };

  static constexpr std::uint32_t default_prime = 32003;

  Field() : Field(Kind::prime, default_prime) {}

  static Field rationals() { return Field(Kind::rationals, 0); }
  static Field prime(std::uint32_t p);
  /// "rational", "QQ", "gf:<p>".
  static Field parse(std::string_view spec);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::prime; }
  std::uint32_t characteristic() const { return p_; }

  Coeff normalize(const Coeff& c) const;
  Coeff from_int(long v) const { return normalize(Coeff(v)); }
  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;

  /// Representative in [0, p) of a normalized prime-field element.
  std::uint32_t to_residue(const Coeff& c) const;
  /// Signed representative in (-p/2, p/2] for printing.
  Coeff symmetric(const Coeff& c) const;

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

/// Arithmetic modulo a word-sized prime, used by the linear algebra kernels.
struct ModArith {
  std::uint32_t p;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t inv(std::uint32_t a) const;
};

}  // namespace enprune
