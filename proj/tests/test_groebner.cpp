#include <doctest.h>

#include "enprune/groebner.hpp"
#include "enprune/invariants.hpp"
#include "enprune/pruning.hpp"
#include "fixtures.hpp"
#include "sweep.hpp"

using namespace enprune;
using fixtures::ideal;
using fixtures::ring_of;

namespace {

Polynomial P(const RingPtr& r, const char* s) { return Polynomial::parse(r, s); }

std::vector<Polynomial> random_polys(std::mt19937& rng, const RingPtr& r, std::size_t count) {
  std::vector<Polynomial> out;
  while (out.size() < count) {
    Polynomial f = Polynomial::zero(r);
    for (int t = 0; t < 3; ++t) {
      Monomial m(r->nvars());
      for (std::size_t v = 0; v < r->nvars(); ++v) m[v] = static_cast<int>(rng() % 3);
      f += Polynomial::term(r, m, r->field().from_int(static_cast<long>(rng() % 7) - 3));
    }
    if (!f.is_zero()) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("normal forms") {
  auto p = SparsePattern::generic(2, 3);
  auto r = p.generic_ring(Field::rationals());
  auto d12 = P(r, "x_1_1*x_2_2 - x_1_2*x_2_1");
  CHECK(normal_form(P(r, "x_1_1*x_2_2"), {d12}, TermOrder::lex()) == P(r, "x_1_2*x_2_1"));
  CHECK(normal_form(d12, {d12}, TermOrder::grevlex()).is_zero());
  CHECK(normal_form(P(r, "1"), {d12}, TermOrder::lex()) == P(r, "1"));
}

TEST_CASE("division identity and reduced remainders") {
  std::mt19937 rng(97);
  auto r = ring_of(3, Field::rationals());
  std::vector<TermOrder> orders{TermOrder::lex(), TermOrder::grevlex(), TermOrder::weight({3, 1, 2})};
  for (int trial = 0; trial < 60; ++trial) {
    const auto& order = orders[static_cast<std::size_t>(trial) % orders.size()];
    auto G = random_polys(rng, r, 1 + rng() % 3);
    auto f = random_polys(rng, r, 1)[0];
    auto div = divide(f, G, order);
    Polynomial sum = div.remainder;
    for (std::size_t i = 0; i < G.size(); ++i) sum += div.quotients[i] * G[i];
    REQUIRE(sum == f);
    for (const auto& [m, c] : div.remainder.terms())
      for (const auto& g : G) REQUIRE_FALSE(lead_term(g, order).monomial.divides(m));
  }
}

TEST_CASE("S-polynomials") {
  auto p = SparsePattern::generic(2, 3);
  auto r = p.generic_ring(Field::rationals());
  auto d12 = P(r, "x_1_1*x_2_2 - x_1_2*x_2_1");
  auto d13 = P(r, "x_1_1*x_2_3 - x_1_3*x_2_1");
  auto d23 = P(r, "x_1_2*x_2_3 - x_1_3*x_2_2");
  auto s = s_polynomial(d12, d13, TermOrder::lex());
  CHECK(s == P(r, "-x_1_2*x_2_1*x_2_3 + x_1_3*x_2_1*x_2_2"));
  CHECK(s == -(P(r, "x_2_1") * d23));
  CHECK(normal_form(s, {d12, d13, d23}, TermOrder::lex()).is_zero());
  CHECK(s_polynomial(d12, d12, TermOrder::lex()).is_zero());
  auto coprime = s_polynomial(P(r, "x_1_1 + x_2_2"), P(r, "x_1_2 + x_2_3"), TermOrder::lex());
  CHECK(normal_form(coprime, {P(r, "x_1_1 + x_2_2"), P(r, "x_1_2 + x_2_3")}, TermOrder::lex()).is_zero());
}

TEST_CASE("Buchberger criterion") {
  auto r = ring_of(2, Field::rationals());
  auto check = is_groebner({P(r, "a^2 + b"), P(r, "a*b")}, TermOrder::lex());
  CHECK_FALSE(check.ok);
  REQUIRE(check.witness.has_value());
  CHECK(*check.witness == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(*check.remainder == P(r, "b^2"));
  auto completed = complete_groebner({P(r, "a^2 + b"), P(r, "a*b")}, TermOrder::lex());
  CHECK(is_groebner(completed, TermOrder::lex()).ok);
  CHECK(is_groebner({P(r, "a"), P(r, "b")}, TermOrder::grevlex()).ok);
}

TEST_CASE("maximal minors are a Groebner basis under sampled orders") {
  std::mt19937 rng(7);
  auto fig1 = SparsePattern::load(fixtures::data_path("fig1.pat"));
  CHECK(is_groebner(nonzero_minors(fig1), TermOrder::lex()).ok);
  auto g34 = SparsePattern::generic(3, 4);
  auto mins = nonzero_minors(g34);
  for (const auto& order : sweep::sample_orders(rng, 12, 7)) CHECK(is_groebner(mins, order).ok);
  for (const auto& p : sweep::random_patterns(rng, 3, 5, 10))
    for (const auto& order : sweep::sample_orders(rng, 15, 4)) REQUIRE(is_groebner(nonzero_minors(p), order).ok);
}

TEST_CASE("initial ideals of minors") {
  auto g34 = SparsePattern::generic(3, 4);
  auto in = initial_ideal(g34, TermOrder::lex());
  CHECK(in == ideal(in.ring(), {"x_1_1*x_2_2*x_3_3", "x_1_1*x_2_2*x_3_4", "x_1_1*x_2_3*x_3_4",
                                "x_1_2*x_2_3*x_3_4"}));
  std::mt19937 rng(19);
  auto fig1 = SparsePattern::load(fixtures::data_path("fig1.pat"));
  for (const auto& order : sweep::sample_orders(rng, 12, 6)) {
    auto f = initial_ideal(fig1, order);
    CHECK(f == ideal(f.ring(), {"x3*y4*z1", "x3*y4*z2"}));
  }
  CHECK_THROWS_AS(initial_ideal(SparsePattern::load(fixtures::data_path("block.pat")), TermOrder::lex()),
                  InputError);
}

TEST_CASE("initial ideals of generic matrices decompose into column transversals") {
  std::mt19937 rng(31);
  for (auto [k, n] : {std::pair{2, 3}, {2, 4}, {3, 4}, {3, 5}}) {
    auto g = SparsePattern::generic(k, n);
    for (const auto& order : sweep::sample_orders(rng, static_cast<std::size_t>(k * n), 5)) {
      auto in = initial_ideal(g, order);
      REQUIRE(in.is_squarefree());
      auto primes = minimal_primes(in);
      REQUIRE(primes.size() == static_cast<std::size_t>(binomial(n, n - k + 1)));
      std::set<std::vector<int>> column_sets;
      for (const auto& q : primes) {
        REQUIRE(q.size() == static_cast<std::size_t>(n - k + 1));
        std::vector<int> cols;
        for (auto v : q) cols.push_back(g.cell_of(v).second);
        std::sort(cols.begin(), cols.end());
        REQUIRE(std::adjacent_find(cols.begin(), cols.end()) == cols.end());
        column_sets.insert(cols);
      }
      CHECK(column_sets.size() == primes.size());
    }
  }
}

TEST_CASE("initial ideals have the Betti table of the pruned resolution") {
  std::mt19937 rng(37);
  auto patterns = sweep::random_patterns(rng, 3, 5, 8);
  patterns.push_back(SparsePattern::load(fixtures::data_path("fig1.pat")));
  patterns.push_back(SparsePattern::generic(2, 4));
  for (const auto& p : patterns) {
    auto b = betti_table(pruned_resolution(p));
    for (const auto& order : sweep::sample_orders(rng, static_cast<std::size_t>(p.k() * p.n()), 4))
      REQUIRE(lcm_betti(initial_ideal(p, order)) == b);
  }
}

TEST_CASE("a universal Groebner basis with two initial ideals of different Betti tables") {
  auto r = ring_of(5, Field::rationals());
  std::vector<Polynomial> G{P(r, "a*b"), P(r, "b*c"), P(r, "c*d"), P(r, "d*e"), P(r, "a*e + a*c")};
  auto lex = TermOrder::lex();
  auto w = TermOrder::weight({0, 0, 0, 0, 1});
  CHECK(is_groebner(G, lex).ok);
  CHECK(is_groebner(G, w).ok);
  auto in_lex = lead_ideal(G, lex);
  auto in_w = lead_ideal(G, w);
  CHECK(in_lex == ideal(r, {"a*b", "b*c", "c*d", "d*e", "a*c"}));
  CHECK(in_w == ideal(r, {"a*b", "b*c", "c*d", "d*e", "a*e"}));
  CHECK(lcm_betti(in_lex) != lcm_betti(in_w));
}
