#include "enprune/groebner.hpp"

namespace enprune {

Division divide(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& order) {
  const auto& ring = f.ring();
  const Field& field = ring->field();
  std::vector<LeadTerm> leads;
  for (const auto& g : G) {
    if (!same_ring(g.ring(), ring)) throw InputError("division by a polynomial of another ring");
    leads.push_back(g.is_zero() ? LeadTerm{Monomial(ring->nvars()), Coeff(0)} : lead_term(g, order));
  }
  Division d{Polynomial::zero(ring), std::vector<Polynomial>(G.size(), Polynomial::zero(ring))};
  Polynomial p = f;
  while (!p.is_zero()) {
    LeadTerm lt = lead_term(p, order);
    bool reduced = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (G[i].is_zero() || !leads[i].monomial.divides(lt.monomial)) continue;
      Monomial q = lt.monomial / leads[i].monomial;
      Coeff c = field.mul(lt.coefficient, field.inv(leads[i].coefficient));
      p -= G[i].times_monomial(q, c);
      d.quotients[i] += Polynomial::term(ring, q, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial t = Polynomial::term(ring, lt.monomial, lt.coefficient);
      d.remainder += t;
      p -= t;
    }
  }
  return d;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& order) {
  return divide(f, G, order).remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  if (f.is_zero() || g.is_zero()) throw InputError("S-polynomial of a zero polynomial");
  const Field& field = f.field();
  LeadTerm lf = lead_term(f, order), lg = lead_term(g, order);
  Monomial l = lcm(lf.monomial, lg.monomial);
  return f.times_monomial(l / lf.monomial, field.inv(lf.coefficient)) -
         g.times_monomial(l / lg.monomial, field.inv(lg.coefficient));
}

GroebnerCheck is_groebner(const std::vector<Polynomial>& G, const TermOrder& order) {
  if (G.empty()) throw InputError("empty generating set");
  std::vector<Polynomial> basis;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (!G[i].is_zero()) {
      basis.push_back(G[i]);
      origin.push_back(i);
    }
  std::vector<Monomial> leads;
  for (const auto& g : basis) leads.push_back(lead_term(g, order).monomial);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (gcd(leads[i], leads[j]).is_one()) continue;
      Polynomial r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order);
      if (!r.is_zero()) return {false, std::pair{origin[i], origin[j]}, r};
    }
  }
  return {};
}

std::vector<Polynomial> complete_groebner(std::vector<Polynomial> G, const TermOrder& order) {
  std::erase_if(G, [](const Polynomial& g) { return g.is_zero(); });
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    if (gcd(lead_term(G[i], order).monomial, lead_term(G[j], order).monomial).is_one()) continue;
    Polynomial r = normal_form(s_polynomial(G[i], G[j], order), G, order);
    if (r.is_zero()) continue;
    for (std::size_t k = 0; k < G.size(); ++k) pairs.emplace_back(k, G.size());
    G.push_back(std::move(r));
  }
  return G;
}

MonomialIdeal lead_ideal(const std::vector<Polynomial>& G, const TermOrder& order) {
  if (G.empty()) throw InputError("empty generating set");
  std::vector<Monomial> leads;
  for (const auto& g : G)
    if (!g.is_zero()) leads.push_back(lead_term(g, order).monomial);
  return MonomialIdeal(G.front().ring(), std::move(leads));
}

std::vector<Polynomial> nonzero_minors(const SparsePattern& p, const Field& field) {
  std::vector<Polynomial> out;
  for (auto& m : minors(p, p.generic_ring(field)))
    if (!m.value.is_zero()) out.push_back(std::move(m.value));
  return out;
}

MonomialIdeal initial_ideal(const SparsePattern& p, const TermOrder& order, const Field& field) {
  auto G = nonzero_minors(p, field);
  if (G.empty()) throw InputError("the ideal of maximal minors is zero");
  auto check = is_groebner(G, order);
  if (!check.ok)
    throw VerificationError("nonzero minors are not a Groebner basis under " + order.to_string() +
                            ": S-pair (" + std::to_string(check.witness->first) + "," +
                            std::to_string(check.witness->second) + ") leaves " + check.remainder->to_string());
  MonomialIdeal in = lead_ideal(G, order);
  if (!in.is_squarefree()) throw VerificationError("initial ideal is not squarefree");
  return in;
}

}  // namespace enprune
