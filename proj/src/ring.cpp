#include "enprune/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace enprune {

Monomial Monomial::variable(std::size_t nvars, std::size_t var, int power) {
  Monomial m(nvars);
  m.exps.at(var) = power;
  return m;
}

int Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > 0) s.push_back(i);
  return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) {
    r.exps[i] -= b.exps[i];
    if (r.exps[i] < 0) throw std::domain_error("monomial division is not exact");
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(r.exps[i], b.exps[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::min(r.exps[i], b.exps[i]);
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exps) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

bool is_valid_variable_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Ring::Ring(Field field, std::vector<std::string> names) : field_(field), names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_valid_variable_name(names_[i])) throw InputError("invalid variable name '" + names_[i] + "'");
    if (!index_.emplace(names_[i], i).second) throw InputError("duplicate variable name '" + names_[i] + "'");
  }
}

RingPtr Ring::make(Field field, std::vector<std::string> names) {
  return RingPtr(new Ring(field, std::move(names)));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Ring::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw InputError("unknown variable '" + std::string(name) + "'");
  return *idx;
}

RingPtr Ring::extended(const std::string& name) const {
  auto names = names_;
  names.push_back(name);
  return make(field_, std::move(names));
}

RingPtr Ring::with_field(Field f) const { return make(f, names_); }

std::string Ring::to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace enprune
