#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gins/complexes.hpp"
#include "gins/coordinate_change.hpp"
#include "gins/engine.hpp"
#include "gins/error.hpp"
#include "gins/invariants.hpp"

using namespace gins;

namespace {

Monomial e(int n, std::vector<int> s) { return Monomial::exterior(n, s); }
Monomial x(std::vector<int> exps) { return Monomial::polynomial(exps); }

MonomialIdeal ext_ideal(int n, const std::vector<std::vector<int>>& supports) {
  std::vector<Monomial> gens;
  for (const auto& s : supports) gens.push_back(e(n, s));
  return MonomialIdeal(Ring::kExterior, n, gens);
}

// Borel closure of a set of monomials: repeatedly replace a variable by a
// smaller one (squarefree moves only in the squarefree case).
MonomialIdeal borel_closure(Ring ring, int n, std::vector<Monomial> seeds) {
  std::set<Monomial> seen(seeds.begin(), seeds.end());
  std::vector<Monomial> todo(seeds.begin(), seeds.end());
  while (!todo.empty()) {
    const Monomial u = todo.back();
    todo.pop_back();
    for (int j = 1; j <= n; ++j) {
      if (u.exponent(j) == 0) continue;
      for (int i = 1; i < j; ++i) {
        if (ring == Ring::kExterior && u.exponent(i) > 0) continue;
        const Monomial v = u.exchanged(j, i);
        if (seen.insert(v).second) todo.push_back(v);
      }
    }
  }
  return MonomialIdeal(ring, n, std::vector<Monomial>(seen.begin(), seen.end()));
}

MonomialIdeal random_stable(Rng& rng, Ring ring, int n, int max_degree, int seeds) {
  std::vector<Monomial> picks;
  for (int s = 0; s < seeds; ++s) {
    const int d = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_degree - 1)));
    const auto all = all_monomials(ring, n, d);
    if (all.empty()) continue;
    picks.push_back(all[uniform_below(rng, all.size())]);
  }
  return borel_closure(ring, n, picks);
}

std::vector<std::uint64_t> linear_row(const BettiTable& t, int n) {
  std::vector<std::uint64_t> row;
  for (int i = 0; i <= n; ++i) row.push_back(t.get(i, 2));
  return row;
}

}  // namespace

TEST_CASE("index profiles and m-counts") {
  const auto i2 = ext_ideal(4, {{1, 2}, {1, 3}});
  const auto p = index_profile(i2, 2);
  CHECK(p.min_le == std::vector<std::size_t>{2, 2, 2, 2});
  CHECK(p.max_le == std::vector<std::size_t>{0, 1, 2, 2});
  const auto z = index_profile(MonomialIdeal(Ring::kExterior, 4), 2);
  CHECK(z.min_le == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(z.max_le == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(m_count(TermOrder::lex(), i2, e(4, {1, 3})) == 2);
  CHECK(m_count(TermOrder::lex(), i2, e(4, {1, 2})) == 1);
  CHECK(m_count(TermOrder::revlex(), i2, e(4, {3, 4})) == 2);
}

TEST_CASE("resolution oracle examples") {
  {
    BettiTable t;
    t.add(0, 2, 1);
    CHECK(resolution_oracle(MonomialIdeal(Ring::kPolynomial, 4, {x({1, 1, 0, 0})})) == t);
  }
  const MonomialIdeal two(Ring::kPolynomial, 4, {x({1, 1, 0, 0}), x({0, 0, 1, 1})});
  const auto t2 = resolution_oracle(two);
  CHECK(t2.get(0, 2) == 2);
  CHECK(t2.get(1, 3) == 1);  // beta_{1,4}
  CHECK(t2.entries().size() == 2);
  CHECK(t2.to_json().dump() == R"({"convention":"ideal-indexed","entries":[[0,2,2],[1,3,1]]})");
  CHECK(t2.to_string() == "i\\j\t2\t3\n0\t2\t-\n1\t-\t1\n");

  const MonomialIdeal tri(Ring::kPolynomial, 3, {x({1, 1, 0}), x({1, 0, 1}), x({0, 1, 1})});
  const auto t3 = resolution_oracle(tri);
  CHECK(t3.get(0, 2) == 3);
  CHECK(t3.get(1, 2) == 2);  // beta_{1,3}
  CHECK(t3 == betti_stable(tri, BettiFlavor::kSquarefreeStronglyStable));

  std::vector<Monomial> many;
  for (const auto& m : all_monomials(Ring::kPolynomial, 6, 2)) many.push_back(m);
  CHECK_THROWS_AS(resolution_oracle(MonomialIdeal(Ring::kPolynomial, 6, many)), SizeLimitExceeded);
}

TEST_CASE("stable Betti formulas") {
  BettiTable principal;
  principal.add(0, 3, 1);
  CHECK(betti_stable(MonomialIdeal(Ring::kPolynomial, 3, {x({1, 1, 1})}), BettiFlavor::kSquarefreeStronglyStable) ==
        principal);
  CHECK_THROWS_AS(betti_stable(MonomialIdeal(Ring::kPolynomial, 4, {x({0, 0, 1, 1})}), BettiFlavor::kStronglyStable),
                  InvalidInput);
  try {
    betti_stable(MonomialIdeal(Ring::kPolynomial, 4, {x({0, 0, 1, 1})}), BettiFlavor::kStronglyStable);
  } catch (const InvalidInput& err) {
    CHECK(std::string(err.what()).find("x3*x4") != std::string::npos);
  }
}

TEST_CASE("property: stable Betti formulas agree with the resolution oracle") {
  Rng rng(21);
  int checked = 0;
  for (int t = 0; t < 120; ++t) {
    const Ring ring = t % 2 ? Ring::kExterior : Ring::kPolynomial;
    const int n = 3 + static_cast<int>(uniform_below(rng, 4));
    const auto ideal = random_stable(rng, ring, n, 3, 1 + static_cast<int>(uniform_below(rng, 3)));
    if (ideal.generators().size() > 12) continue;
    const auto poly = ring == Ring::kExterior ? ideal.squarefree_image() : ideal;
    const auto flavor = ring == Ring::kExterior ? BettiFlavor::kSquarefreeStronglyStable : BettiFlavor::kStronglyStable;
    CHECK_MESSAGE(betti_stable(ideal, flavor) == resolution_oracle(poly), ideal.to_string());
    ++checked;
  }
  CHECK(checked >= 60);
}

TEST_CASE("alpha") {
  CHECK(alpha(x({1, 1, 0, 1, 0, 0})) == x({1, 0, 1, 0, 0, 1}));
  CHECK(alpha(x({2, 0})) == x({1, 1}));
  CHECK_THROWS_AS(alpha(x({0, 3})), InvalidInput);
  const MonomialIdeal i(Ring::kPolynomial, 4, {x({2, 0, 0, 0}), x({1, 1, 0, 0}), x({0, 3, 0, 0})});
  const auto a = alpha(i);
  CHECK(a == MonomialIdeal(Ring::kPolynomial, 4, {x({1, 1, 0, 0}), x({1, 0, 1, 0}), x({0, 1, 1, 1})}));
  CHECK(resolution_oracle(i) == resolution_oracle(a));
  CHECK(betti_stable(i, BettiFlavor::kStronglyStable) == betti_stable(a, BettiFlavor::kSquarefreeStronglyStable));
  CHECK_THROWS_AS(alpha(MonomialIdeal(Ring::kPolynomial, 3, {x({0, 2, 0})})), InvalidInput);
}

TEST_CASE("property: alpha preserves Betti tables") {
  Rng rng(22);
  for (int t = 0; t < 60; ++t) {
    const int n = 5 + static_cast<int>(uniform_below(rng, 3));
    // Generators stay in the first variables so alpha does not overflow.
    std::vector<Monomial> seeds;
    for (int s = 0; s < 2; ++s) {
      std::vector<int> exps(static_cast<std::size_t>(n), 0);
      const int d = 2 + static_cast<int>(uniform_below(rng, 2));
      for (int k = 0; k < d; ++k) ++exps[uniform_below(rng, static_cast<std::uint64_t>(n - d + 1))];
      seeds.push_back(x(exps));
    }
    const auto ideal = borel_closure(Ring::kPolynomial, n, seeds);
    const auto image = alpha(ideal);
    CHECK(is_strongly_stable(image, StabilityFlavor::kSquarefree));
    CHECK(betti_stable(ideal, BettiFlavor::kStronglyStable) ==
          betti_stable(image, BettiFlavor::kSquarefreeStronglyStable));
    if (ideal.generators().size() <= 10 && n <= 6) CHECK(resolution_oracle(ideal) == resolution_oracle(image));
  }
}

TEST_CASE("property: four equivalent descriptions of a stable degree-2 component") {
  Rng rng(23);
  int equal_pairs = 0, unequal_pairs = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = 4 + static_cast<int>(uniform_below(rng, 2));
    const auto pick = [&] {
      const auto all = all_monomials(Ring::kExterior, n, 2);
      std::vector<Monomial> seeds{all[uniform_below(rng, all.size())]};
      if (uniform_below(rng, 2)) seeds.push_back(all[uniform_below(rng, all.size())]);
      return borel_closure(Ring::kExterior, n, seeds);
    };
    const auto a = pick();
    const auto b = pick();
    const bool same = a.degree_component(2) == b.degree_component(2);
    const auto pa = index_profile(a, 2);
    const auto pb = index_profile(b, 2);
    const auto ra = linear_row(betti_stable(a, BettiFlavor::kSquarefreeStronglyStable), n);
    const auto rb = linear_row(betti_stable(b, BettiFlavor::kSquarefreeStronglyStable), n);
    CHECK((pa.max_le == pb.max_le) == same);
    CHECK((pa.min_le == pb.min_le) == same);
    CHECK((ra == rb) == same);
    (same ? equal_pairs : unequal_pairs)++;
  }
  CHECK(equal_pairs > 10);
  CHECK(unequal_pairs > 10);
}

TEST_CASE("property: shifting witnesses sit between the lex and revlex gins in the linear strand") {
  const PrimeField f;
  Rng rng(24);
  for (int t = 0; t < 20; ++t) {
    const int n = 5;
    Graph g(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (uniform_below(rng, 2)) g.add_edge(i, j);
    const auto ideal = combinatorial_ideal(g, Ring::kExterior);
    GinOptions o;
    o.degree_cap = 2;
    o.seed = static_cast<std::uint64_t>(t);
    const auto gins = gin_all(f, {TermOrder::lex(), TermOrder::revlex()}, ideal, o);
    const auto lex_row = linear_row(betti_stable(gins[0].ideal, BettiFlavor::kSquarefreeStronglyStable), n);
    const auto rev_row = linear_row(betti_stable(gins[1].ideal, BettiFlavor::kSquarefreeStronglyStable), n);
    const auto search = trans_witnesses(f, ideal);
    for (const auto& w : search.witnesses) {
      const auto row = linear_row(betti_stable(w.ideal, BettiFlavor::kSquarefreeStronglyStable), n);
      for (int i = 0; i <= n; ++i) {
        CHECK(lex_row[static_cast<std::size_t>(i)] >= row[static_cast<std::size_t>(i)]);
        CHECK(row[static_cast<std::size_t>(i)] >= rev_row[static_cast<std::size_t>(i)]);
      }
    }
  }
}

TEST_CASE("the degree-3 counterexample cell") {
  // J + e145 versus J + e236 on six variables; the oracle pins the distinguishing cell.
  std::vector<std::vector<int>> base{{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4},
                                     {1, 3, 5}, {1, 3, 6}, {2, 3, 4}, {2, 3, 5}};
  auto with = [&](std::vector<int> extra) {
    auto s = base;
    s.push_back(extra);
    return ext_ideal(6, s);
  };
  const auto lex_side = betti_stable(with({1, 4, 5}), BettiFlavor::kSquarefreeStronglyStable);
  const auto weight_side = betti_stable(with({2, 3, 6}), BettiFlavor::kSquarefreeStronglyStable);
  CHECK(lex_side.get(3, 3) == 2);
  CHECK(weight_side.get(3, 3) == 3);
  CHECK(resolution_oracle(with({1, 4, 5}).squarefree_image()) == lex_side);
  CHECK(resolution_oracle(with({2, 3, 6}).squarefree_image()) == weight_side);
}

TEST_CASE("closed-form profiles") {
  const auto c22 = closed_form_profiles(2, 2);
  CHECK(c22.bipartite == std::vector<std::int64_t>{3, 4, 4, 4});
  CHECK(c22.two_cliques == std::vector<std::int64_t>{0, 1, 2, 2});
  CHECK(closed_form_profiles(1, 1).bipartite == std::vector<std::int64_t>{1, 1});
  CHECK(closed_form_profiles(3, 2).bipartite == closed_form_profiles(2, 3).bipartite);
  CHECK_THROWS_AS(closed_form_profiles(0, 3), InvalidInput);
}

TEST_CASE("closed forms agree with computed shifted complexes for a + b <= 8") {
  const PrimeField f;
  GinOptions o;
  o.degree_cap = 2;
  for (int a = 1; a <= 4; ++a) {
    for (int b = a; a + b <= 8; ++b) {
      const int n = a + b;
      const auto forms = closed_form_profiles(a, b);
      const auto bip = shifted_edges(gin(f, TermOrder::revlex(), combinatorial_ideal(graphs::complete_bipartite(a, b), Ring::kExterior), o).ideal);
      const auto cliques = shifted_edges(gin(f, TermOrder::revlex(), combinatorial_ideal(graphs::disjoint_cliques(a, b), Ring::kExterior), o).ideal);
      for (int k = 1; k <= n; ++k) {
        const auto idx = static_cast<std::size_t>(k - 1);
        CHECK(static_cast<std::int64_t>(count_max_at_least(bip, n + 1 - k)) == forms.bipartite[idx]);
        CHECK(static_cast<std::int64_t>(count_min_at_least(cliques, n + 1 - k)) == forms.two_cliques[idx]);
        CHECK(forms.two_cliques_from_h[idx] == forms.two_cliques[idx]);
        const auto h = std::count_if(cliques.members().begin(), cliques.members().end(),
                                     [&](const Monomial& u) { return u.max_index() == n + 1 - k; });
        CHECK(h == forms.h[idx]);
      }
      // The lex and revlex gins of J_{K_{a,b}} share their max profile.
      const auto lex = gin(f, TermOrder::lex(), combinatorial_ideal(graphs::complete_bipartite(a, b), Ring::kExterior), o);
      const auto rev = gin(f, TermOrder::revlex(), combinatorial_ideal(graphs::complete_bipartite(a, b), Ring::kExterior), o);
      CHECK(index_profile(lex.ideal, 2).max_le == index_profile(rev.ideal, 2).max_le);
    }
  }
}

TEST_CASE("regularity") {
  const PrimeField f;
  CHECK(regularity_from_gin(f, combinatorial_ideal(graphs::complete_bipartite(2, 3), Ring::kPolynomial)) == 2);
  CHECK(regularity_from_gin(f, combinatorial_ideal(flag_complex(graphs::disjoint_cliques(2, 3)), Ring::kExterior)) == 2);
  CHECK(regularity_from_gin(f, combinatorial_ideal(flag_complex(graphs::cycle(4)), Ring::kExterior)) == 3);
  CHECK(regularity_from_gin(f, ext_ideal(4, {{1, 2}, {1, 3}, {2, 3}})) == 2);
}

TEST_CASE("lex/revlex complement identity") {
  const PrimeField f;
  CHECK(lex_rev_complement_identity(f, graphs::complete_bipartite(2, 2)).holds());
  CHECK(lex_rev_complement_identity(f, graphs::cycle(5)).holds());
  CHECK(lex_rev_complement_identity(f, graphs::path(4)).holds());
  Rng rng(25);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 6));
    Graph g(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (uniform_below(rng, 2)) g.add_edge(i, j);
    GinOptions o;
    o.seed = static_cast<std::uint64_t>(t);
    const auto id = lex_rev_complement_identity(f, g, o);
    CHECK_MESSAGE(id.holds(), serialize_graph(g));
  }
}

TEST_CASE("hyperplane oracle") {
  const PrimeField f;
  Rng rng(26);
  const auto all = MonomialSet(Ring::kExterior, 4, 2, all_monomials(Ring::kExterior, 4, 2));
  const auto phi = CoordinateChange<PrimeField>::random_dense(f, 4, rng);
  for (int k = 1; k <= 4; ++k) CHECK(hyperplane_rank_oracle(phi, all, k) == 0);

  const auto w = combinatorial_ideal(graphs::complete_bipartite(2, 2), Ring::kExterior).degree_component(2);
  const auto g = gin_component(f, TermOrder::revlex(), w).component;
  const auto outside = g.complement();
  for (int k = 1; k <= 4; ++k) CHECK(hyperplane_rank_oracle(phi, w, k) == count_max_at_least(outside, k));
}
