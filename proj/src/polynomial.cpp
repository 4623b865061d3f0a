#include "enprune/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace enprune {

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
  Polynomial p(std::move(ring));
  p.add_term(Monomial(p.ring_->nvars()), c);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t var) {
  Polynomial p(std::move(ring));
  p.add_term(Monomial::variable(p.ring_->nvars(), var), Coeff(1));
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->require_index(name);
  return variable(std::move(ring), idx);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Coeff& c) {
  Polynomial p(std::move(ring));
  if (m.size() != p.ring_->nvars()) throw InputError("monomial length does not match ring");
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Coeff& c) {
  const Field& f = ring_->field();
  Coeff v = f.normalize(c);
  if (sgn(v) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (!inserted) {
    it->second = f.add(it->second, v);
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw InputError("polynomials live in different rings");
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff(0) : it->second;
}

Coeff Polynomial::constant_term() const { return coefficient(Monomial(ring_->nvars())); }

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, ring_->field().neg(c));
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_ring(other);
  const Field& f = ring_->field();
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = f.add(it->second, c);
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_ring(other);
  *this += -other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  check_same_ring(other);
  const Field& f = ring_->field();
  Polynomial r(ring_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, f.mul(ca, cb));
  terms_ = std::move(r.terms_);
  return *this;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  const Field& f = ring_->field();
  Coeff s = f.normalize(c);
  Polynomial r(ring_);
  if (sgn(s) == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, f.mul(v, s));
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& mono, const Coeff& c) const {
  const Field& f = ring_->field();
  Coeff s = f.normalize(c);
  Polynomial r(ring_);
  if (sgn(s) == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m * mono, f.mul(v, s));
  return r;
}

Polynomial operator+(Polynomial a, const Polynomial& b) {
  a += b;
  return a;
}

Polynomial operator-(Polynomial a, const Polynomial& b) {
  a -= b;
  return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r *= b;
  return r;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  check_same_ring(value);
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    int e = rest[var];
    rest[var] = 0;
    Polynomial piece = Polynomial::term(ring_, rest, c);
    for (int i = 0; i < e; ++i) piece = piece * value;
    r += piece;
  }
  return r;
}

Polynomial Polynomial::kill(const std::vector<bool>& kill) const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    bool dies = false;
    for (std::size_t i = 0; i < m.size() && !dies; ++i) dies = m[i] > 0 && kill[i];
    if (!dies) r.terms_.emplace(m, c);
  }
  return r;
}

Polynomial Polynomial::map_to(const RingPtr& target,
                              const std::vector<std::optional<std::size_t>>& var_map) const {
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Monomial out(target->nvars());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!var_map[i]) throw InputError("variable " + ring_->name(i) + " has no image in target ring");
      out[*var_map[i]] += m[i];
    }
    r.add_term(out, ring_->field() == target->field() ? c : ring_->field().symmetric(c));
  }
  return r;
}

Polynomial Polynomial::with_field(const RingPtr& target) const {
  if (target->names() != ring_->names()) throw InputError("with_field requires identical variables");
  std::vector<std::optional<std::size_t>> identity(ring_->nvars());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  return map_to(target, identity);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::string coeff_to_string(const Field& f, const Coeff& c) {
  Coeff v = f.symmetric(c);
  return v.get_str();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Descending lex: index 0 is the largest variable.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Coeff v = ring_->field().symmetric(it->second);
    bool negative = sgn(v) < 0;
    Coeff mag = negative ? Coeff(-v) : v;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (it->first.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += ring_->to_string(it->first);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    Polynomial result(ring_);
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Polynomial t = parse_term();
      result += negative ? -t : t;
    }
    return result;
  }

 private:
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cannot parse polynomial '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  mpz_class parse_integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial parse_term() {
    Coeff coeff(1);
    Monomial mono(ring_->nvars());
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) fail("expected factor");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        mpz_class num = parse_integer();
        mpz_class den = 1;
        skip_ws();
        if (pos_ < text_.size() && peek() == '/') {
          ++pos_;
          skip_ws();
          den = parse_integer();
          if (den == 0) fail("zero denominator");
        }
        coeff *= Coeff(num, den);
        coeff.canonicalize();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          ++pos_;
        auto name = text_.substr(start, pos_ - start);
        auto idx = ring_->index_of(name);
        if (!idx) fail("unknown variable '" + std::string(name) + "'");
        int power = 1;
        skip_ws();
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          skip_ws();
          power = static_cast<int>(parse_integer().get_si());
        }
        mono[*idx] += power;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      any = true;
      skip_ws();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return Polynomial::term(ring_, mono, coeff);
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) { return Parser(ring, text).parse(); }

}  // namespace enprune
