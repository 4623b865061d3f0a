#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "enprune/pattern.hpp"
#include "enprune/term_order.hpp"

namespace sweep {

/// Smallest mask among all row and column permutations of the pattern.
inline std::uint64_t canonical_mask(int k, int n, std::uint64_t mask) {
  std::vector<int> rows(static_cast<std::size_t>(k)), cols(static_cast<std::size_t>(n));
  std::iota(rows.begin(), rows.end(), 0);
  std::uint64_t best = mask;
  do {
    std::iota(cols.begin(), cols.end(), 0);
    do {
      std::uint64_t m = 0;
      for (int r = 0; r < k; ++r)
        for (int j = 0; j < n; ++j) {
          int src = rows[static_cast<std::size_t>(r)] * n + cols[static_cast<std::size_t>(j)];
          if (mask >> src & 1) m |= std::uint64_t{1} << (r * n + j);
        }
      best = std::min(best, m);
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
  return best;
}

/// Orbit invariant with the same fibres as canonical_mask: columns are sorted
/// instead of permuted.
inline std::uint64_t canonical_mask_fast(int k, int n, std::uint64_t mask) {
  std::vector<int> rows(static_cast<std::size_t>(k));
  std::iota(rows.begin(), rows.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::vector<unsigned> colbits;
    for (int j = 0; j < n; ++j) {
      unsigned c = 0;
      for (int r = 0; r < k; ++r)
        if (mask >> (rows[static_cast<std::size_t>(r)] * n + j) & 1) c |= 1u << (k - 1 - r);
      colbits.push_back(c);
    }
    std::sort(colbits.begin(), colbits.end());
    std::uint64_t m = 0;
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < k; ++r)
        if (colbits[static_cast<std::size_t>(j)] >> (k - 1 - r) & 1) m |= std::uint64_t{1} << (r * n + j);
    best = std::min(best, m);
  } while (std::next_permutation(rows.begin(), rows.end()));
  return best;
}

inline bool admissible(const enprune::SparsePattern& p) {
  return p.zero_columns().empty() && !enprune::is_ideal_zero(p);
}

/// One representative per row/column-permutation orbit of admissible k x n
/// patterns.
inline std::vector<enprune::SparsePattern> orbit_representatives(int k, int n) {
  std::set<std::uint64_t> seen;
  std::vector<enprune::SparsePattern> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k * n)); ++mask) {
    auto c = canonical_mask_fast(k, n, mask);
    if (!seen.insert(c).second) continue;
    auto p = enprune::SparsePattern::from_mask(k, n, c);
    if (admissible(p)) out.push_back(p);
  }
  return out;
}

/// Admissible random patterns with zero density drawn from [0.2, 0.6].
inline std::vector<enprune::SparsePattern> random_patterns(std::mt19937& rng, int k, int n, std::size_t count) {
  std::vector<enprune::SparsePattern> out;
  std::uniform_real_distribution<double> density(0.2, 0.6), coin(0.0, 1.0);
  while (out.size() < count) {
    double d = density(rng);
    std::uint64_t mask = 0;
    for (int c = 0; c < k * n; ++c)
      if (coin(rng) < d) mask |= std::uint64_t{1} << c;
    auto p = enprune::SparsePattern::from_mask(k, n, mask);
    if (admissible(p)) out.push_back(p);
  }
  return out;
}

/// lex, grevlex, then seeded weight orders with entries in 1..50.
inline std::vector<enprune::TermOrder> sample_orders(std::mt19937& rng, std::size_t nvars, std::size_t count) {
  std::vector<enprune::TermOrder> out{enprune::TermOrder::lex(), enprune::TermOrder::grevlex()};
  std::uniform_int_distribution<long> w(1, 50);
  while (out.size() < count) {
    std::vector<long> weights;
    for (std::size_t v = 0; v < nvars; ++v) weights.push_back(w(rng));
    out.push_back(enprune::TermOrder::weight(std::move(weights)));
  }
  return out;
}

}  // namespace sweep
