#include "enprune/term_order.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace enprune {

int compare_lex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

int compare_grevlex(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

long weight_of(const Monomial& m, const std::vector<long>& w) {
  long s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += w[i] * m[i];
  return s;
}

TermOrder TermOrder::weight(std::vector<long> w, Kind tiebreak) {
  if (tiebreak == Kind::weight) throw InputError("weight order tiebreak must be lex or grevlex");
  for (long v : w)
    if (v < 0) throw InputError("weight orders need non-negative weights");
  return TermOrder(Kind::weight, std::move(w), tiebreak);
}

TermOrder TermOrder::parse(std::string_view spec, std::size_t nvars) {
  if (spec == "lex") return lex();
  if (spec == "grevlex") return grevlex();
  if (!spec.starts_with("weight:")) throw InputError("unknown term order '" + std::string(spec) + "'");
  auto body = spec.substr(7);
  Kind tie = Kind::grevlex;
  if (auto semi = body.find(';'); semi != std::string_view::npos) {
    auto t = body.substr(semi + 1);
    if (t == "lex")
      tie = Kind::lex;
    else if (t != "grevlex")
      throw InputError("unknown tiebreak '" + std::string(t) + "'");
    body = body.substr(0, semi);
  }
  std::vector<long> w;
  while (!body.empty()) {
    auto comma = body.find(',');
    auto tok = body.substr(0, comma);
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw InputError("bad weight '" + std::string(tok) + "'");
    w.push_back(v);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  if (w.size() != nvars)
    throw InputError("weight vector has " + std::to_string(w.size()) + " entries, ring has " +
                     std::to_string(nvars) + " variables");
  return weight(std::move(w), tie);
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::lex:
      return compare_lex(a, b);
    case Kind::grevlex:
      return compare_grevlex(a, b);
    case Kind::weight: {
      long wa = weight_of(a, weights_), wb = weight_of(b, weights_);
      if (wa != wb) return wa > wb ? 1 : -1;
      return tiebreak_ == Kind::lex ? compare_lex(a, b) : compare_grevlex(a, b);
    }
  }
  return 0;
}

std::string TermOrder::to_string() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::grevlex:
      return "grevlex";
    case Kind::weight: {
      std::string s = "weight:";
      for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + std::to_string(weights_[i]);
      return s + (tiebreak_ == Kind::lex ? ";lex" : ";grevlex");
    }
  }
  return {};
}

LeadTerm lead_term(const Polynomial& f, const TermOrder& order) {
  if (f.is_zero()) throw InputError("lead term of the zero polynomial");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

long max_weight(const Polynomial& f, const std::vector<long>& w) {
  long best = std::numeric_limits<long>::min();
  for (const auto& [m, c] : f.terms()) best = std::max(best, weight_of(m, w));
  return best;
}

Polynomial weight_homogenize(const Polynomial& f, const std::vector<long>& w, RingPtr target) {
  const auto& ring = f.ring();
  if (w.size() != ring->nvars()) throw InputError("weight vector length does not match ring");
  if (!target) target = ring->extended("t");
  if (target->nvars() != ring->nvars() + 1) throw InputError("homogenization target must add one variable");
  Polynomial out(target);
  if (f.is_zero()) return out;
  long top = max_weight(f, w);
  for (const auto& [m, c] : f.terms()) {
    Monomial e(target->nvars());
    std::copy(m.exps.begin(), m.exps.end(), e.exps.begin());
    e[ring->nvars()] = static_cast<int>(top - weight_of(m, w));
    out += Polynomial::term(target, e, c);
  }
  return out;
}

}  // namespace enprune
