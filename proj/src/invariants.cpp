#include "enprune/invariants.hpp"

#include <cstdlib>

#include "enprune/field.hpp"

namespace enprune {

RegPdim reg_and_pdim(const BettiTable& b) {
  if (b.empty()) throw InputError("empty Betti table");
  return {b.regularity(), b.projective_dimension()};
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r.get_si();
}

BettiTable en_betti_formula(int k, int n) {
  if (k < 1 || k > n) throw InputError("Eagon-Northcott formula needs 1 <= k <= n");
  BettiTable b;
  b.set(0, 0, 1);
  for (int i = 1; i <= n - k + 1; ++i) b.set(i, k + i - 1, binomial(k + i - 2, k - 1) * binomial(n, k + i - 1));
  return b;
}

PureDiagram PureDiagram::herzog_kuhl(std::vector<int> degrees) {
  if (degrees.empty() || degrees[0] != 0) throw InputError("pure diagram degrees must start at 0");
  for (std::size_t i = 1; i < degrees.size(); ++i)
    if (degrees[i] <= degrees[i - 1]) throw InputError("pure diagram degrees must increase");
  PureDiagram p{degrees, {}};
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    mpq_class beta = 1;
    for (std::size_t j = 1; j < degrees.size(); ++j) {
      if (j == i) continue;
      beta *= mpq_class(degrees[j], std::abs(degrees[j] - degrees[i]));
    }
    beta.canonicalize();
    p.betti.push_back(beta);
  }
  return p;
}

TwoDiagramSolution betti_from_mu(int d, int pd, long mu) {
  if (d < 1 || pd < 1) throw InputError("betti_from_mu needs d >= 1 and pd >= 1");
  std::vector<int> s1{0}, s2{0};
  for (int i = 0; i < pd; ++i) s1.push_back(d + i);
  for (int i = 0; i < pd - 1; ++i) s2.push_back(d + i);
  TwoDiagramSolution sol{PureDiagram::herzog_kuhl(s1), PureDiagram::herzog_kuhl(s2), 0, 0, {}};
  mpq_class b1 = sol.b1.betti[1];
  mpq_class b2 = sol.b2.betti.size() > 1 ? sol.b2.betti[1] : mpq_class(0);
  if (b1 == b2) throw InputError("the two pure diagrams have equal first Betti numbers");
  sol.a1 = (mpq_class(mu) - b2) / (b1 - b2);
  sol.a1.canonicalize();
  sol.a2 = 1 - sol.a1;
  if (sgn(sol.a1) < 0 || sgn(sol.a2) < 0)
    throw InputError("negative coefficient: a1 = " + sol.a1.get_str() + ", a2 = " + sol.a2.get_str());
  for (std::size_t i = 0; i < s1.size(); ++i) {
    mpq_class beta = sol.a1 * sol.b1.betti[i];
    if (i < s2.size()) beta += sol.a2 * sol.b2.betti[i];
    beta.canonicalize();
    if (beta.get_den() != 1) throw VerificationError("combination has non-integral beta_" + std::to_string(i));
    sol.table.set(static_cast<int>(i), s1[i], beta.get_num().get_si());
  }
  return sol;
}

PerimeterStats perimeter_stats(const SparsePattern& p) {
  PerimeterStats s;
  s.rectangle = largest_zero_rectangle(p);
  s.max_perimeter = s.rectangle ? s.rectangle->perimeter() : 0;
  s.zero_columns = static_cast<int>(p.zero_columns().size());
  return s;
}

}  // namespace enprune
