#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "enprune/monomial_ideal.hpp"
#include "enprune/pattern.hpp"
#include "enprune/term_order.hpp"

namespace enprune {

struct Division {
  Polynomial remainder;
  /// f = sum quotients[i] * G[i] + remainder.
  std::vector<Polynomial> quotients;
};

/// Full multivariate division: no term of the remainder is divisible by a
/// lead monomial of G. Zero elements of G are ignored.
Division divide(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& order);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& order);
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

struct GroebnerCheck {
  bool ok = true;
  /// First S-pair (indices into G) with a nonzero normal form.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::optional<Polynomial> remainder;
};

/// Buchberger's criterion; pairs with coprime leads are skipped.
GroebnerCheck is_groebner(const std::vector<Polynomial>& G, const TermOrder& order);

/// Buchberger completion (debug path only).
std::vector<Polynomial> complete_groebner(std::vector<Polynomial> G, const TermOrder& order);

/// Monomial ideal of lead monomials of the nonzero elements of G.
MonomialIdeal lead_ideal(const std::vector<Polynomial>& G, const TermOrder& order);

/// Nonzero maximal minors of the pattern in its generic ring.
std::vector<Polynomial> nonzero_minors(const SparsePattern& p, const Field& field = Field());

/// Initial ideal of I_k(p): lead monomials of the nonzero minors, after
/// certifying that they form a Groebner basis. Throws VerificationError if
/// the certificate fails or the result is not squarefree.
MonomialIdeal initial_ideal(const SparsePattern& p, const TermOrder& order, const Field& field = Field());

}  // namespace enprune
