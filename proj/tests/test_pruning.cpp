#include <doctest.h>

#include <map>
#include <set>

#include "enprune/complex_io.hpp"
#include "enprune/eagon_northcott.hpp"
#include "enprune/invariants.hpp"
#include "enprune/pruning.hpp"
#include "fixtures.hpp"
#include "sweep.hpp"

using namespace enprune;

namespace {

BasedComplex with_maps(const BasedComplex& like, std::vector<SparseMatrix> maps) {
  return BasedComplex(like.ring(), like.grading(), like.modules(), std::move(maps), like.killed());
}

std::vector<std::size_t> variables_named(const RingPtr& r, std::initializer_list<const char*> names) {
  std::vector<std::size_t> out;
  for (const char* n : names) out.push_back(*r->index_of(n));
  return out;
}

bool proportional(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  if (a.size() != b.size()) return false;
  // a[i] * b[j] == a[j] * b[i] for all pairs, and a is not zero
  bool nonzero = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    nonzero = nonzero || !a[i].is_zero();
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  }
  return nonzero;
}

}  // namespace

TEST_CASE("pruning the Fig. 1 pattern") {
  auto p = SparsePattern::load(fixtures::data_path("fig1.pat"));
  auto res = resolve_sparse_determinantal(p, Field::rationals());
  CHECK(res.complex.ranks() == std::vector<std::size_t>{1, 2, 1});
  CHECK(res.report.ok());
  CHECK(res.betti.at(0, 0) == 1);
  CHECK(res.betti.at(1, 3) == 2);
  CHECK(res.betti.at(2, 4) == 1);
  CHECK(res.betti.entries().size() == 3);
  CHECK(res.betti.regularity() == 2);
  CHECK(res.betti.projective_dimension() == 2);

  auto r = res.complex.ring();
  SparseMatrix a1(1, 2), a2(2, 1);
  a1.set(0, 0, Polynomial::parse(r, "x3*y4*z1"));
  a1.set(0, 1, Polynomial::parse(r, "-x3*y4*z2"));
  a2.set(0, 0, Polynomial::parse(r, "z2"));
  a2.set(1, 0, Polynomial::parse(r, "z1"));
  auto expected = with_maps(res.complex, {a1, a2});
  auto d = complex_diff(res.complex, expected);
  CHECK_MESSAGE(d.equal, d.reason);

  // the same result by pruning the generic complex with the seven zero cells named
  auto en = eagon_northcott(p.without_zeros(), Field::rationals());
  auto direct = prune(en, p.killed());
  CHECK(direct.killed().size() == 7);
  CHECK(complex_diff(direct, res.complex).equal);
}

TEST_CASE("pruning the Buchsbaum-Rim fixture is not exact") {
  auto br = buchsbaum_rim_2x3();
  auto r = br.ring();
  auto pruned = prune(br, variables_named(r, {"x", "y"}));
  CHECK(pruned.ranks() == std::vector<std::size_t>{2, 3, 1});
  CHECK(compose_check(pruned).ok);
  CHECK(is_minimal(pruned));

  SparseMatrix a1(2, 3), a2(3, 1);
  a1.set(0, 2, Polynomial::parse(r, "z"));
  a1.set(1, 0, Polynomial::parse(r, "a"));
  a1.set(1, 1, Polynomial::parse(r, "b"));
  a1.set(1, 2, Polynomial::parse(r, "c"));
  a2.set(0, 0, Polynomial::parse(r, "-z*b"));
  a2.set(1, 0, Polynomial::parse(r, "z*a"));
  auto d = complex_diff(pruned, with_maps(pruned, {a1, a2}));
  CHECK_MESSAGE(d.equal, d.reason);

  auto report = verify_resolution(pruned);
  CHECK_FALSE(report.ok());
  const auto* bad = report.homology.first_nonzero(1);
  REQUIRE(bad != nullptr);
  CHECK(bad->position == 1);
  CHECK(bad->total == 2);
  CHECK(bad->homology == 1);
  REQUIRE(bad->witness.has_value());
  std::vector<Polynomial> expected{Polynomial::parse(r, "b"), Polynomial::parse(r, "-a"), Polynomial::zero(r)};
  CHECK(proportional(*bad->witness, expected));
  CHECK(report.summary().find("homology at position 1, degree 2, dim 1") != std::string::npos);
}

TEST_CASE("pruning by the empty set changes nothing") {
  for (auto [k, n] : {std::pair{2, 3}, {3, 4}, {3, 5}}) {
    auto en = eagon_northcott(k, n);
    auto d = complex_diff(prune(en, {}), en);
    CHECK_MESSAGE(d.equal, d.reason);
    CHECK(prune(en, {}).ranks() == en.ranks());
  }
  auto en = eagon_northcott(2, 3);
  CHECK_THROWS_AS(prune(en, {6}), InputError);
}

TEST_CASE("pruning composes, keeps minimality and is incremental") {
  std::mt19937 rng(5);
  for (auto [k, n] : {std::pair{2, 4}, {3, 4}, {3, 5}, {2, 5}}) {
    auto en = eagon_northcott(k, n);
    std::size_t nv = en.ring()->nvars();
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::size_t> z1, z2;
      for (std::size_t v = 0; v < nv; ++v) {
        auto roll = rng() % 6;
        if (roll == 0) z1.push_back(v);
        else if (roll == 1) z2.push_back(v);
      }
      std::vector<std::size_t> z = z1;
      z.insert(z.end(), z2.begin(), z2.end());
      auto once = prune(en, z);
      REQUIRE(compose_check(once).ok);
      REQUIRE(is_minimal(once));
      auto twice = prune(prune(en, z1), z2);
      auto d = complex_diff(once, twice);
      REQUIRE_MESSAGE(d.equal, d.reason);
    }
  }
}

TEST_CASE("Betti numbers only decrease along nested patterns") {
  std::mt19937 rng(11);
  auto patterns = sweep::random_patterns(rng, 3, 5, 30);
  for (const auto& q : patterns) {
    auto bq = betti_table(pruned_resolution(q));
    for (int r = 0; r < 3; ++r)
      for (int j = 0; j < 5; ++j) {
        if (!q.is_zero(r, j)) continue;
        // p has one zero fewer than q
        std::vector<bool> zero;
        for (int rr = 0; rr < 3; ++rr)
          for (int jj = 0; jj < 5; ++jj) zero.push_back(q.is_zero(rr, jj) && !(rr == r && jj == j));
        SparsePattern p(3, 5, zero);
        REQUIRE(entrywise_leq(bq, betti_table(pruned_resolution(p))));
      }
  }
}

TEST_CASE("orbit canonicalization") {
  std::map<std::uint64_t, std::uint64_t> slow_to_fast;
  std::set<std::uint64_t> fast_values;
  for (std::uint64_t mask = 0; mask < (1u << 12); ++mask) {
    auto slow = sweep::canonical_mask(3, 4, mask);
    auto fast = sweep::canonical_mask_fast(3, 4, mask);
    auto [it, fresh] = slow_to_fast.emplace(slow, fast);
    REQUIRE(it->second == fast);
    fast_values.insert(fast);
  }
  CHECK(fast_values.size() == slow_to_fast.size());
  auto reps = sweep::orbit_representatives(3, 4);
  CHECK(reps.size() > 10);
  CHECK(std::find(reps.begin(), reps.end(), SparsePattern::generic(3, 4)) != reps.end());
}

TEST_CASE("every admissible 3x4 pattern resolves linearly with the generic bounds") {
  auto formula = en_betti_formula(3, 4);
  for (const auto& p : sweep::orbit_representatives(3, 4)) {
    auto res = resolve_sparse_determinantal(p);
    INFO(p.to_text());
    REQUIRE(res.report.ok());
    CHECK(res.betti.projective_dimension() == 2);
    CHECK(res.betti.is_linear_from(3));
    CHECK(res.betti.regularity() == 2);
    CHECK(entrywise_leq(res.betti, formula));
  }
}

TEST_CASE("colon quotients of the Fig. 1 pattern") {
  auto p = SparsePattern::load(fixtures::data_path("fig1.pat"));
  auto z1 = colon_quotient_betti(p, 2, 0);
  BettiTable expected;
  expected.set(0, 2, 1);
  expected.set(1, 3, 1);
  CHECK(z1 == expected);
  CHECK(z1.is_linear_from(3));
  CHECK(colon_quotient_betti(p, 1, 2).empty());
  CHECK_THROWS_AS(colon_quotient_betti(p, 0, 0), InputError);
  // zeroing x3 kills every minor
  CHECK_THROWS_AS(colon_quotient_betti(p, 0, 2), InputError);
}

TEST_CASE("colon quotients are nonnegative and linear on random patterns") {
  std::mt19937 rng(23);
  for (const auto& p : sweep::random_patterns(rng, 3, 5, 20)) {
    for (int r = 0; r < 3; ++r)
      for (int j = 0; j < 5; ++j) {
        if (p.is_zero(r, j) || is_ideal_zero(p.with_zero(r, j))) continue;
        auto b = colon_quotient_betti(p, r, j);
        for (const auto& [key, v] : b.entries()) REQUIRE(v > 0);
        REQUIRE(b.total(0) == b.at(0, 2));
        REQUIRE(b.is_linear_from(3));
      }
  }
}

TEST_CASE("pruned Betti tables do not depend on the field") {
  std::mt19937 rng(29);
  auto patterns = sweep::random_patterns(rng, 3, 5, 10);
  patterns.push_back(SparsePattern::load(fixtures::data_path("fig1.pat")));
  for (const auto& p : patterns) {
    auto q = resolve_sparse_determinantal(p, Field::rationals(), false);
    auto g = resolve_sparse_determinantal(p, Field(), false);
    auto s = resolve_sparse_determinantal(p, Field::prime(101), false);
    CHECK(q.betti == g.betti);
    CHECK(q.betti == s.betti);
    CHECK(complex_diff(change_field(q.complex, Field::prime(101)), s.complex).equal);
  }
}

TEST_CASE("zero ideals are rejected") {
  auto block = SparsePattern::load(fixtures::data_path("block.pat"));
  CHECK_THROWS_AS(resolve_sparse_determinantal(block), InputError);
}

TEST_CASE("stored Buchsbaum-Rim fixtures match the constructions") {
  auto br = buchsbaum_rim_2x3();
  auto stored = load_complex(fixtures::data_path("br.json"));
  CHECK(complex_to_json_text(stored) == complex_to_json_text(br));
  auto pruned = prune(br, variables_named(br.ring(), {"x", "y"}));
  auto stored_pruned = load_complex(fixtures::data_path("pruned-br.json"));
  CHECK(complex_to_json_text(stored_pruned) == complex_to_json_text(pruned));
}
