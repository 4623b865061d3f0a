#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "enprune/betti.hpp"
#include "enprune/complex.hpp"
#include "enprune/pattern.hpp"

namespace enprune {

/// Monomial ideal stored by its minimal generators, sorted in the monomial
/// order of the exponent vectors.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) {}
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);

  /// One monomial per line in the polynomial text grammar; blank lines and
  /// lines starting with '#' are skipped.
  static MonomialIdeal parse(RingPtr ring, std::string_view text);
  /// Like parse, but the ring's variables are the identifiers of the text in
  /// order of first appearance.
  static MonomialIdeal parse_inferring_ring(std::string_view text, const Field& field = Field());
  static MonomialIdeal load(const std::string& path, const Field& field = Field());

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_squarefree() const;
  bool contains(const Monomial& m) const;
  Monomial lcm_all() const;
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return same_ring(a.ring_, b.ring_) && a.gens_ == b.gens_;
  }

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

/// Drops generators divisible by another one, removes duplicates, sorts.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Taylor resolution of S/I, finely graded; bases are generator subsets.
BasedComplex taylor_complex(const MonomialIdeal& ideal);
/// Taylor complex on a generator list taken as given (not minimalized).
BasedComplex taylor_complex(const RingPtr& ring, const std::vector<Monomial>& gens);
inline constexpr std::size_t taylor_generator_limit = 16;

enum class LcmRoute { automatic, crosscut, order_complex };

/// Multigraded Betti numbers of S/I for i >= 1 from the homology of the
/// lcm lattice: beta_{i,m} = dim reduced H_{i-2} of the open interval below m.
std::map<Monomial, std::map<int, long>> lcm_betti_multigraded(const MonomialIdeal& ideal,
                                                               LcmRoute route = LcmRoute::automatic);
/// Graded Betti table of S/I (beta_0 included) over the ring's field.
BettiTable lcm_betti(const MonomialIdeal& ideal, LcmRoute route = LcmRoute::automatic);

/// Minimal primes of a squarefree ideal as sorted variable-index sets; the
/// intersection of the primes is checked against the ideal.
std::vector<std::vector<std::size_t>> minimal_primes(const MonomialIdeal& ideal);
int codim(const MonomialIdeal& ideal);
MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, std::size_t var);
/// Image of the ideal after killing the given variables.
MonomialIdeal kill_variables(const MonomialIdeal& ideal, const std::vector<std::size_t>& vars);

/// Substitutes variable `to` for variable `from` for each pair; both must lie
/// in the same column of the pattern (indices of its generic ring).
MonomialIdeal substitute_columns(const MonomialIdeal& ideal, const SparsePattern& pattern,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& mapping);
/// Replaces every variable of column j by y_(j+1); the result lives in K[y_1..y_n].
MonomialIdeal collapse_columns(const MonomialIdeal& ideal, const SparsePattern& pattern);
/// y_J for every nonvanishing maximal minor with column set J, in K[y_1..y_n].
MonomialIdeal squarefree_degree_k_ideal(const SparsePattern& pattern, const Field& field = Field());

/// Betti table of (I:x)/I as a module over the polynomial ring in the other
/// variables, via Koszul homology of each multidegree in the lcm box. Degrees
/// are total degrees of the multidegree (the x exponent included).
BettiTable colon_module_betti(const MonomialIdeal& ideal, std::size_t var);
/// Hilbert function of (I:x)/I on the multidegrees whose total is <= bound.
std::map<Monomial, long> colon_module_hilbert(const MonomialIdeal& ideal, std::size_t var, int bound);

}  // namespace enprune
