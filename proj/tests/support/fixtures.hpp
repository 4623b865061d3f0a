#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "enprune/complex.hpp"
#include "enprune/monomial_ideal.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(ENPRUNE_TEST_DATA) + "/" + name; }

inline enprune::RingPtr ring_of(std::size_t nvars, enprune::Field f = enprune::Field()) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  std::vector<std::string> v(names, names + nvars);
  return enprune::Ring::make(f, v);
}

inline enprune::Monomial mono(const enprune::RingPtr& r, const char* s) {
  return enprune::Polynomial::parse(r, s).terms().begin()->first;
}

inline enprune::MonomialIdeal ideal(const enprune::RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<enprune::Monomial> g;
  for (auto s : gens) g.push_back(mono(r, s));
  return enprune::MonomialIdeal(r, g);
}

/// Random monomial ideal with 1..max_gens generators, exponents in [0, max_exp].
inline enprune::MonomialIdeal random_ideal(std::mt19937& rng, const enprune::RingPtr& ring, int max_gens,
                                           int max_exp) {
  std::uniform_int_distribution<int> count(1, max_gens), e(0, max_exp);
  std::vector<enprune::Monomial> gens;
  int m = count(rng);
  while (static_cast<int>(gens.size()) < m) {
    enprune::Monomial g(ring->nvars());
    for (std::size_t v = 0; v < ring->nvars(); ++v) g[v] = e(rng);
    if (g.degree() > 0) gens.push_back(g);
  }
  return enprune::MonomialIdeal(ring, gens);
}

/// 0 -> S(-deg f) --f--> S under the given grading.
inline enprune::BasedComplex principal(const enprune::Polynomial& f, const enprune::Grading& g) {
  enprune::SparseMatrix a(1, 1);
  a.set(0, 0, f);
  std::vector<enprune::GradedFreeModule> mods(2);
  mods[0].gens.push_back({"1", g.zero()});
  mods[1].gens.push_back({"f", *g.homogeneous_degree(f)});
  return enprune::BasedComplex(f.ring(), g, mods, {a});
}

}  // namespace fixtures
