#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "gins/error.hpp"
#include "gins/verifier.hpp"

using namespace gins;

namespace {

// Isomorphism classes by brute force: each labeled graph is keyed by the
// smallest adjacency bit string over all vertex permutations.
std::size_t brute_class_count(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> index;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) index.emplace_back(i, j);
  std::set<std::string> keys;
  for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int b = 0; b < pairs; ++b) {
      if (mask & (1U << b)) {
        const auto [i, j] = index[static_cast<std::size_t>(b)];
        adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
      }
    }
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::string best;
    do {
      std::string key;
      for (const auto& [i, j] : index) key += adj[static_cast<std::size_t>(p[i])][static_cast<std::size_t>(p[j])] ? '1' : '0';
      if (best.empty() || key < best) best = key;
    } while (std::next_permutation(p.begin(), p.end()));
    keys.insert(best);
  }
  return keys.size();
}

const Theorem1Record& find_record(const Theorem1Report& report, const Graph& g) {
  const auto canon = canonical_form(g);
  for (const auto& r : report.records)
    if (r.graph == canon) return r;
  throw std::runtime_error("graph not in sweep");
}

}  // namespace

TEST_CASE("enumeration matches a brute-force class count") {
  for (int n = 1; n <= 5; ++n) CHECK(enumerate_graphs(n).size() == brute_class_count(n));
  CHECK(enumerate_graphs(3).size() == 4);
  CHECK(enumerate_graphs(4).size() == 11);
  CHECK(enumerate_graphs(6).size() == 156);
  CHECK_THROWS_AS(enumerate_graphs(8), InvalidInput);
  for (const auto& g : enumerate_graphs(5)) CHECK(canonical_form(g) == g);
  CHECK(enumerate_graphs(5) == enumerate_graphs(5));
}

TEST_CASE("canonical forms and masks") {
  const auto p4 = graphs::path(4);
  CHECK(graph_from_mask(4, edge_mask(p4)) == p4);
  CHECK(canonical_form(p4) == canonical_form(p4.relabeled({3, 1, 4, 2})));
  CHECK_FALSE(canonical_form(p4) == canonical_form(graphs::cycle(4)));
}

TEST_CASE("exterior classification sweep, small n") {
  SweepOptions o;
  const auto report = sweep_theorem1(5, o);
  CHECK(report.records.size() == 1 + 2 + 4 + 11 + 34);
  CHECK(report.pass());
  const auto& k22 = find_record(report, graphs::complete_bipartite(2, 2));
  CHECK(k22.condition_v);
  CHECK(k22.condition_vi);
  CHECK(k22.degree2_equal);
  CHECK(k22.trans_components == 1);
  CHECK(k22.orders_checked == 22);  // lex, revlex and 20 sampled weight orders
  const auto& p4 = find_record(report, graphs::path(4));
  CHECK_FALSE(p4.condition_v);
  CHECK_FALSE(p4.condition_vi);
  CHECK_FALSE(p4.degree2_equal);
  CHECK(p4.trans_certificate.size() == 2);
  for (const auto& r : report.records) CHECK(r.error.empty());

  const auto j = results_json(report);
  CHECK(j["classes"] == report.records.size());
  std::size_t v = 0, vi = 0, c = 0;
  for (const auto& r : report.records) {
    v += r.condition_v;
    vi += r.condition_vi;
    c += r.degree2_equal;
  }
  CHECK(j["condition_v_true"] == v);
  CHECK(j["condition_vi_true"] == vi);
  CHECK(j["degree2_equal_true"] == c);
  CHECK(j["restriction_failures"] == 0);
  CHECK(table(report).find("PASS") != std::string::npos);
}

TEST_CASE("condition (v) count at n = 6 matches a recount through (vi)") {
  std::size_t by_v = 0, by_vi = 0;
  for (const auto& g : enumerate_graphs(6)) {
    by_v += condition_v(g).holds;
    by_vi += condition_vi(g).holds;
  }
  CHECK(by_v == by_vi);
  CHECK(by_v > 0);
}

TEST_CASE("polynomial edge-ideal sweep and examples") {
  SweepOptions o;
  const auto report = sweep_theorem2(4, o);
  CHECK(report.pass());
  const auto k23 = check_theorem2(graphs::complete_bipartite(2, 3), o);
  CHECK(k23.semi_complete_bipartite);
  CHECK(k23.gins_equal);
  const auto c3 = check_theorem2(graphs::complete(3), o);
  CHECK_FALSE(c3.semi_complete_bipartite);
  CHECK_FALSE(c3.gins_equal);
  CHECK(c3.first_difference == 2);
  const auto two = check_theorem2(Graph::from_edges(4, {{1, 2}, {3, 4}}), o);
  CHECK_FALSE(two.gins_equal);
  CHECK(two.pass);
  CHECK(results_json(report)["pass"] == true);
}

TEST_CASE("sweep results do not depend on the seed or the thread count") {
  SweepOptions a;
  a.seed = 1;
  a.threads = 1;
  SweepOptions b;
  b.seed = 987654321;
  b.threads = 3;
  CHECK(results_json(sweep_theorem1(4, a)).dump() == results_json(sweep_theorem1(4, b)).dump());
  CHECK(results_json(sweep_theorem2(4, a)).dump() == results_json(sweep_theorem2(4, b)).dump());
}

TEST_CASE("property suite at reduced sample counts") {
  PropertyOptions o;
  o.samples = 20;
  o.oracle_samples = 10;
  o.max_n = 6;
  const auto report = property_suite(o);
  CHECK(report.results.size() == 9);
  for (const auto& r : report.results) CHECK_MESSAGE(r.pass, std::string(r.name + ": " + r.detail));
  CHECK(report.pass());
  o.seed = 5;
  CHECK(property_suite(o).results_json().dump() == report.results_json().dump());
}

TEST_CASE("char-2 negative case fails as expected") {
  PropertyOptions o;
  const auto r = check_char2_negative(o);
  CHECK(r.pass);
  CHECK(r.violations == 0);
}
