#include "enprune/field.hpp"

#include <charconv>

namespace enprune {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t ModArith::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in prime field");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime_number(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (p > 2147483647u) throw InputError("field characteristic too large");
  return Field(Kind::prime, p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "rational" || spec == "rationals" || spec == "QQ" || spec == "Q") return rationals();
  if (spec.starts_with("gf:")) {
    std::uint32_t p = 0;
    auto body = spec.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size())
      throw InputError("bad field characteristic in '" + std::string(spec) + "'");
    return prime(p);
  }
  throw InputError("unknown field '" + std::string(spec) + "' (expected rational or gf:<p>)");
}

Coeff Field::normalize(const Coeff& c) const {
  if (kind_ == Kind::rationals) {
    Coeff r = c;
    r.canonicalize();
    return r;
  }
  mpz_class num = c.get_num(), den = c.get_den();
  mpz_class p(p_);
  num %= p;
  if (num < 0) num += p;
  den %= p;
  if (den < 0) den += p;
  if (den == 0) throw InputError("denominator divisible by field characteristic");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class v = (num * inv) % p;
  return Coeff(v);
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::rationals) return a + b;
  return Coeff((to_residue(a) + static_cast<std::uint64_t>(to_residue(b))) % p_);
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::rationals) return a - b;
  return Coeff((to_residue(a) + static_cast<std::uint64_t>(p_ - to_residue(b))) % p_);
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::rationals) return a * b;
  return Coeff(static_cast<unsigned long>(static_cast<std::uint64_t>(to_residue(a)) * to_residue(b) % p_));
}

Coeff Field::neg(const Coeff& a) const {
  if (kind_ == Kind::rationals) return -a;
  auto r = to_residue(a);
  return Coeff(r == 0 ? 0u : p_ - r);
}

Coeff Field::inv(const Coeff& a) const {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero");
  if (kind_ == Kind::rationals) return 1 / a;
  return Coeff(ModArith{p_}.inv(to_residue(a)));
}

std::uint32_t Field::to_residue(const Coeff& c) const {
  return static_cast<std::uint32_t>(c.get_num().get_ui());
}

Coeff Field::symmetric(const Coeff& c) const {
  if (kind_ == Kind::rationals) return c;
  auto r = to_residue(c);
  if (r > p_ / 2) return Coeff(static_cast<long>(r) - static_cast<long>(p_));
  return c;
}

std::string Field::to_string() const {
  if (kind_ == Kind::rationals) return "rational";
  return "gf:" + std::to_string(p_);
}

}  // namespace enprune
