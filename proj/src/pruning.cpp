#include "enprune/pruning.hpp"

#include <algorithm>
#include <sstream>

#include "enprune/eagon_northcott.hpp"

namespace enprune {

BasedComplex prune(const BasedComplex& c, const std::vector<std::size_t>& zero) {
  const auto& ring = c.ring();
  for (auto v : zero)
    if (v >= ring->nvars()) throw InputError("pruning set contains an index that is not a ring variable");
  std::vector<std::size_t> killed = c.killed();
  killed.insert(killed.end(), zero.begin(), zero.end());
  std::vector<bool> mask(ring->nvars(), false);
  for (auto v : killed) mask[v] = true;

  const std::size_t t = c.length();
  std::vector<GradedFreeModule> modules = c.modules();
  std::vector<SparseMatrix> maps = c.maps();
  for (std::size_t i = 1; i <= t; ++i) {
    SparseMatrix& a = maps[i - 1];
    a = a.transform([&](const Polynomial& p) { return p.kill(mask); });
    std::vector<bool> nonzero(a.cols(), false);
    for (const auto& e : a.entries()) nonzero[e.col] = true;
    std::vector<std::size_t> keep_cols, all_rows;
    for (std::size_t col = 0; col < a.cols(); ++col)
      if (nonzero[col]) keep_cols.push_back(col);
    for (std::size_t r = 0; r < a.rows(); ++r) all_rows.push_back(r);
    if (keep_cols.size() == a.cols()) continue;
    a = a.select(all_rows, keep_cols);
    GradedFreeModule kept;
    for (auto col : keep_cols) kept.gens.push_back(modules[i].gens[col]);
    modules[i] = std::move(kept);
    if (i < t) {
      std::vector<std::size_t> next_cols;
      for (std::size_t col = 0; col < maps[i].cols(); ++col) next_cols.push_back(col);
      maps[i] = maps[i].select(keep_cols, next_cols);
    }
  }
  return trim(BasedComplex(ring, c.grading(), std::move(modules), std::move(maps), killed));
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  out << "compose: " << (composes ? "ok" : "FAIL at position " + std::to_string(compose_failure.value_or(0)))
      << "\n";
  out << "minimal: " << (minimal ? "ok" : "FAIL (unit entry)") << "\n";
  out << "truncated homology (bound " << homology.bound << "): ";
  if (const auto* p = homology.first_nonzero(1))
    out << "FAIL homology at position " << p->position << ", degree " << p->total << ", dim " << p->homology
        << " (multidegree " << to_string(p->degree) << ")";
  else
    out << "ok";
  out << "\n";
  return out.str();
}

VerificationReport verify_resolution(const BasedComplex& c, std::optional<int> bound, bool witnesses) {
  VerificationReport r;
  auto comp = compose_check(c);
  r.composes = comp.ok;
  r.compose_failure = comp.failing_position;
  r.minimal = is_minimal(c);
  HomologyOptions opt;
  opt.bound = bound;
  opt.min_position = 1;
  opt.witnesses = witnesses;
  r.homology = truncated_homology(c, opt);
  return r;
}

BasedComplex pruned_resolution(const SparsePattern& p, const Field& field) {
  if (is_ideal_zero(p)) throw InputError("the ideal of maximal minors is zero");
  return prune(eagon_northcott(p.without_zeros(), field), p.killed());
}

SparseResolution resolve_sparse_determinantal(const SparsePattern& p, const Field& field, bool verify,
                                              std::optional<int> bound) {
  BasedComplex c = pruned_resolution(p, field);
  VerificationReport report;
  if (verify) {
    report = verify_resolution(c, bound);
  } else {
    auto comp = compose_check(c);
    report.composes = comp.ok;
    report.compose_failure = comp.failing_position;
    report.minimal = is_minimal(c);
  }
  BettiTable b = report.minimal ? betti_table(c) : BettiTable{};
  return {std::move(c), std::move(b), std::move(report)};
}

BettiTable colon_quotient_betti(const SparsePattern& p, int row, int col, const Field& field) {
  if (row < 0 || row >= p.k() || col < 0 || col >= p.n()) throw InputError("cell out of range");
  if (p.is_zero(row, col)) throw InputError("the chosen cell is zero in the pattern");
  SparsePattern q = p.with_zero(row, col);
  if (is_ideal_zero(p) || is_ideal_zero(q)) throw InputError("colon quotient needs both ideals nonzero");
  BettiTable big = betti_table(pruned_resolution(p, field));
  BettiTable small = betti_table(pruned_resolution(q, field));
  BettiTable out;
  for (const auto& [key, r] : big.entries()) {
    long d = r - small.at(key.first, key.second);
    if (key.first == 0) {
      if (d != 0) throw VerificationError("colon quotient: beta_0 of the two quotients differ");
      continue;
    }
    out.set(key.first - 1, key.second - 1, d);
  }
  for (const auto& [key, r] : small.entries())
    if (big.at(key.first, key.second) < r)
      throw VerificationError("colon quotient: negative Betti difference at (" + std::to_string(key.first) + "," +
                              std::to_string(key.second) + ")");
  return out;
}

}  // namespace enprune
