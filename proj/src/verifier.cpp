#include "gins/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "gins/engine.hpp"
#include "gins/error.hpp"
#include "gins/invariants.hpp"

namespace gins {

namespace {

int pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  // Pairs (1,2),(1,3),...,(1,n),(2,3),... numbered from 0.
  return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string describe_witness(const TransWitness& w) {
  std::string s;
  bool identity = true;
  for (std::size_t i = 0; i < w.relabeling.size(); ++i) identity = identity && w.relabeling[i] == static_cast<int>(i) + 1;
  if (!identity) s += "relabel [" + join_ints(w.relabeling) + "] then ";
  s += "pairs [";
  for (std::size_t i = 0; i < w.pairs.size(); ++i) {
    s += (i ? "," : "") + std::string("(") + std::to_string(w.pairs[i].first) + "," + std::to_string(w.pairs[i].second) + ")";
  }
  return s + "] -> " + w.ideal.degree_component(2).to_string();
}

std::vector<std::int64_t> random_decreasing_weights(Rng& rng, int n) {
  std::set<std::int64_t> values;
  while (static_cast<int>(values.size()) < n) values.insert(static_cast<std::int64_t>(uniform_below(rng, 1000000)) + 1);
  std::vector<std::int64_t> w(values.rbegin(), values.rend());
  return w;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::uint64_t edge_mask(const Graph& g) {
  if (g.n() > 11) throw SizeLimitExceeded("edge masks need n <= 11");
  std::uint64_t mask = 0;
  for (const auto& [i, j] : g.edges()) mask |= std::uint64_t{1} << pair_index(g.n(), i, j);
  return mask;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if ((mask >> pair_index(n, i, j)) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

Graph canonical_form(const Graph& g) {
  const int n = g.n();
  if (n > kMaxEnumerationVertices + 1) throw SizeLimitExceeded("canonical forms are limited to small graphs");
  const auto edges = g.edges();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t mask = 0;
    for (const auto& [i, j] : edges) {
      mask |= std::uint64_t{1} << pair_index(n, perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(j - 1)]);
      if (mask >= best) break;
    }
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return graph_from_mask(n, edges.empty() ? 0 : best);
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1 || n > kMaxEnumerationVertices) {
    throw InvalidInput("graph enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationVertices));
  }
  std::vector<Graph> classes{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::set<std::pair<int, std::uint64_t>> seen;
    for (const auto& base : classes) {
      for (std::uint32_t nb = 0; nb < (1U << (m - 1)); ++nb) {
        Graph g(m);
        for (const auto& [i, j] : base.edges()) g.add_edge(i, j);
        for (int v = 1; v < m; ++v) {
          if (nb & (1U << (v - 1))) g.add_edge(v, m);
        }
        const Graph c = canonical_form(g);
        seen.insert({c.edge_count(), edge_mask(c)});
      }
    }
    classes.clear();
    for (const auto& [edges, mask] : seen) classes.push_back(graph_from_mask(m, mask));
  }
  return classes;
}

nlohmann::json Theorem1Record::to_json() const {
  nlohmann::json j{{"graph", graph.to_json()},
                   {"condition_v", condition_v},
                   {"condition_vi", condition_vi},
                   {"peel", peel},
                   {"base_form", base_form_name(base)},
                   {"degree2_gins_equal", degree2_equal},
                   {"trans_degree2_components", trans_components},
                   {"sampled_orders_agree", sampled_orders_agree},
                   {"orders_checked", orders_checked},
                   {"pass", pass}};
  if (!forbidden_witness.empty()) j["forbidden_witness"] = forbidden_witness;
  if (!trans_certificate.empty()) j["trans_certificate"] = trans_certificate;
  if (!error.empty()) j["error"] = error;
  return j;
}

nlohmann::json Theorem2Record::to_json() const {
  nlohmann::json j{{"graph", graph.to_json()},
                   {"base_form", base_form_name(base)},
                   {"semi_complete_bipartite", semi_complete_bipartite},
                   {"degree_cap", degree_cap},
                   {"gins_equal", gins_equal},
                   {"first_difference", first_difference},
                   {"gin_lex", gin_lex},
                   {"gin_revlex", gin_revlex},
                   {"pass", pass}};
  if (!error.empty()) j["error"] = error;
  return j;
}

Theorem1Record check_theorem1(const Graph& g, const SweepOptions& options) {
  Theorem1Record r;
  r.graph = g;
  try {
    const auto v = condition_v(g);
    r.condition_v = v.holds;
    r.forbidden_witness = v.witness;
    const auto vi = condition_vi(g);
    r.condition_vi = vi.holds;
    r.peel = vi.peel;
    r.base = vi.base;
    const std::uint64_t graph_seed = mix_seed(options.seed, edge_mask(g) * 64 + static_cast<std::uint64_t>(g.n()));
    std::visit(
        [&](const auto& field) {
          const auto jg = combinatorial_ideal(g, Ring::kExterior);
          GinOptions gopt;
          gopt.trials = options.trials;
          gopt.seed = graph_seed;
          gopt.degree_cap = 2;
          const auto deg2 = gin_all(field, {TermOrder::lex(), TermOrder::revlex()}, jg, gopt);
          r.degree2_equal = deg2[0].ideal.degree_component(2) == deg2[1].ideal.degree_component(2);

          TransOptions topt;
          topt.budget = options.trans_budget;
          topt.degree_cap = 2;
          topt.relabelings = options.trans_relabelings;
          topt.stop_after = 2;
          const auto search = trans_witnesses(field, jg, topt);
          std::vector<const TransWitness*> distinct;
          for (const auto& w : search.witnesses) {
            const auto comp = w.ideal.degree_component(2);
            if (std::none_of(distinct.begin(), distinct.end(),
                             [&](const TransWitness* d) { return d->ideal.degree_component(2) == comp; })) {
              distinct.push_back(&w);
            }
          }
          r.trans_components = distinct.size();
          if (distinct.size() >= 2) {
            r.trans_certificate = {describe_witness(*distinct[0]), describe_witness(*distinct[1])};
          }

          if (r.condition_v) {
            std::vector<TermOrder> orders{TermOrder::lex(), TermOrder::revlex()};
            Rng rng(mix_seed(graph_seed, 0x5EED));
            for (int s = 0; s < options.weight_samples; ++s) {
              auto w = random_decreasing_weights(rng, g.n());
              orders.push_back(s % 2 == 0 ? TermOrder::weight_then_lex(std::move(w))
                                          : TermOrder::weight_then_revlex(std::move(w)));
            }
            GinOptions full = gopt;
            full.degree_cap.reset();
            const auto gins = gin_all(field, orders, combinatorial_ideal(flag_complex(g), Ring::kExterior), full);
            r.orders_checked = orders.size();
            r.sampled_orders_agree = std::all_of(gins.begin(), gins.end(),
                                                 [&](const GinResult& x) { return x.ideal == gins[0].ideal; });
          }
        },
        options.field);
    const bool trans_single = r.trans_components == 1;
    const bool d_ok = r.condition_v ? r.sampled_orders_agree : r.trans_components >= 2;
    r.pass = r.condition_v == r.condition_vi && r.condition_vi == r.degree2_equal && trans_single == r.degree2_equal && d_ok;
  } catch (const std::exception& e) {
    r.error = e.what();
    r.pass = false;
  }
  return r;
}

Theorem2Record check_theorem2(const Graph& g, const SweepOptions& options) {
  Theorem2Record r;
  r.graph = g;
  try {
    r.base = base_form(g);
    r.semi_complete_bipartite = r.base == BaseForm::kSemiCompleteBipartite;
    const std::uint64_t graph_seed = mix_seed(options.seed, edge_mask(g) * 64 + static_cast<std::uint64_t>(g.n()));
    std::visit(
        [&](const auto& field) {
          const auto ig = combinatorial_ideal(g, Ring::kPolynomial);
          GinOptions gopt;
          gopt.trials = options.trials;
          gopt.seed = graph_seed;
          const auto rev = gin(field, TermOrder::revlex(), ig, gopt);
          r.degree_cap = std::max(rev.certificate.degree_cap, 1);
          gopt.degree_cap = r.degree_cap;
          const auto lex = gin(field, TermOrder::lex(), ig, gopt);
          r.gin_lex = lex.ideal.to_string();
          r.gin_revlex = rev.ideal.to_string();
          r.gins_equal = lex.ideal.equal_up_to(rev.ideal, r.degree_cap);
          for (int d = 1; d <= r.degree_cap && r.first_difference == 0; ++d) {
            if (!(lex.ideal.degree_component(d) == rev.ideal.degree_component(d))) r.first_difference = d;
          }
        },
        options.field);
    r.pass = r.gins_equal == r.semi_complete_bipartite;
  } catch (const std::exception& e) {
    r.error = e.what();
    r.pass = false;
  }
  return r;
}

namespace {

template <class Record, class Check>
SweepReport<Record> run_sweep(int n, const SweepOptions& options, Check check) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport<Record> report;
  report.n = n;
  report.seed = options.seed;
  report.field = field_name(options.field);
  std::vector<Graph> graphs;
  for (int m = 1; m <= n; ++m) {
    auto classes = enumerate_graphs(m);
    graphs.insert(graphs.end(), classes.begin(), classes.end());
  }
  report.records.resize(graphs.size());
  parallel_for(graphs.size(), options.threads, [&](std::size_t i) { report.records[i] = check(graphs[i], options); });
  report.seconds = seconds_since(start);
  return report;
}

std::map<int, std::size_t> classes_per_n(const std::vector<Graph>& graphs) {
  std::map<int, std::size_t> counts;
  for (const auto& g : graphs) ++counts[g.n()];
  return counts;
}

template <class Record>
std::vector<Graph> graphs_of(const SweepReport<Record>& report) {
  std::vector<Graph> out;
  for (const auto& r : report.records) out.push_back(r.graph);
  return out;
}

nlohmann::json counts_json(const std::map<int, std::size_t>& counts) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [n, c] : counts) j[std::to_string(n)] = c;
  return j;
}

template <class Record>
std::string summary_line(const SweepReport<Record>& report) {
  std::ostringstream out;
  out << "classes: " << report.records.size() << " (";
  bool first = true;
  for (const auto& [n, c] : classes_per_n(graphs_of(report))) {
    out << (first ? "" : ", ") << "n=" << n << ": " << c;
    first = false;
  }
  out << ")  failures: " << report.failures() << "  " << (report.pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace

Theorem1Report sweep_theorem1(int n, const SweepOptions& options) {
  return run_sweep<Theorem1Record>(n, options, check_theorem1);
}

Theorem2Report sweep_theorem2(int n, const SweepOptions& options) {
  return run_sweep<Theorem2Record>(n, options, check_theorem2);
}

nlohmann::json results_json(const Theorem1Report& report) {
  nlohmann::json records = nlohmann::json::array();
  std::size_t v = 0, vi = 0, c = 0, disagreements = 0, trans_found = 0, restriction_failures = 0;
  std::unordered_map<std::uint64_t, bool> v_by_class;
  for (const auto& r : report.records) v_by_class[edge_mask(r.graph) * 64 + static_cast<std::uint64_t>(r.graph.n())] = r.condition_v;
  for (const auto& r : report.records) {
    records.push_back(r.to_json());
    v += r.condition_v;
    vi += r.condition_vi;
    c += r.degree2_equal;
    disagreements += r.pass ? 0 : 1;
    trans_found += (!r.condition_v && r.trans_components >= 2) ? 1 : 0;
    if (r.condition_v && r.graph.n() > 1) {
      for (int del = 1; del <= r.graph.n(); ++del) {
        std::vector<int> keep;
        for (int u = 1; u <= r.graph.n(); ++u) {
          if (u != del) keep.push_back(u);
        }
        const Graph sub = canonical_form(r.graph.induced(keep));
        auto it = v_by_class.find(edge_mask(sub) * 64 + static_cast<std::uint64_t>(sub.n()));
        if (it != v_by_class.end() && !it->second) ++restriction_failures;
      }
    }
  }
  return {{"sweep", "thm1"},
          {"n", report.n},
          {"classes", report.records.size()},
          {"classes_per_n", counts_json(classes_per_n(graphs_of(report)))},
          {"condition_v_true", v},
          {"condition_vi_true", vi},
          {"degree2_equal_true", c},
          {"trans_discrepancies_found", trans_found},
          {"restriction_failures", restriction_failures},
          {"disagreements", disagreements},
          {"sampled_orders_note", "sampled weight orders are a proxy for all term orders, not a decision procedure"},
          {"pass", report.pass() && restriction_failures == 0},
          {"records", records}};
}

nlohmann::json results_json(const Theorem2Report& report) {
  nlohmann::json records = nlohmann::json::array();
  std::size_t bip = 0, equal = 0;
  for (const auto& r : report.records) {
    records.push_back(r.to_json());
    bip += r.semi_complete_bipartite;
    equal += r.gins_equal;
  }
  return {{"sweep", "thm2"},
          {"n", report.n},
          {"classes", report.records.size()},
          {"classes_per_n", counts_json(classes_per_n(graphs_of(report)))},
          {"semi_complete_bipartite", bip},
          {"gins_equal", equal},
          {"disagreements", report.failures()},
          {"pass", report.pass()},
          {"records", records}};
}

std::string table(const Theorem1Report& report) {
  std::ostringstream out;
  out << "n  edges                                   (v)  (vi) deg2= trans  orders  pass\n";
  for (const auto& r : report.records) {
    std::string edges = r.graph.to_string();
    if (edges.size() > 38) edges = edges.substr(0, 35) + "...";
    out << r.graph.n() << "  " << edges << std::string(40 - std::min<std::size_t>(edges.size(), 39), ' ')
        << (r.condition_v ? "T" : "F") << "    " << (r.condition_vi ? "T" : "F") << "    "
        << (r.degree2_equal ? "T" : "F") << "     " << r.trans_components << "      "
        << (r.condition_v ? std::to_string(r.orders_checked) : std::string("-")) << "       "
        << (r.pass ? "PASS" : "FAIL") << (r.error.empty() ? "" : "  " + r.error) << '\n';
  }
  out << summary_line(report);
  return out.str();
}

std::string table(const Theorem2Report& report) {
  std::ostringstream out;
  out << "n  edges                                   bipartite  gins=  cap  first-diff  pass\n";
  for (const auto& r : report.records) {
    std::string edges = r.graph.to_string();
    if (edges.size() > 38) edges = edges.substr(0, 35) + "...";
    out << r.graph.n() << "  " << edges << std::string(40 - std::min<std::size_t>(edges.size(), 39), ' ')
        << (r.semi_complete_bipartite ? "T" : "F") << "          " << (r.gins_equal ? "T" : "F") << "      "
        << r.degree_cap << "    " << r.first_difference << "           " << (r.pass ? "PASS" : "FAIL")
        << (r.error.empty() ? "" : "  " + r.error) << '\n';
  }
  out << summary_line(report);
  return out.str();
}

// ---------------------------------------------------------------------------
// Property suite

namespace {

MonomialSet random_degree2_set(Rng& rng, Ring ring, int n) {
  std::vector<Monomial> members;
  for (auto& m : all_monomials(ring, n, 2)) {
    if (uniform_below(rng, 2) == 1) members.push_back(std::move(m));
  }
  return MonomialSet(ring, n, 2, std::move(members));
}

int random_between(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

Graph random_graph(Rng& rng, int n) {
  Graph g(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (uniform_below(rng, 2) == 1) g.add_edge(i, j);
    }
  }
  return g;
}

PropertyResult finish(std::string name, std::size_t samples, std::size_t violations, std::string detail) {
  PropertyResult r;
  r.name = std::move(name);
  r.samples = samples;
  r.violations = violations;
  r.pass = violations == 0;
  r.detail = std::move(detail);
  return r;
}

GinOptions gin_options(const PropertyOptions& options, std::uint64_t seed) {
  GinOptions g;
  g.trials = options.trials;
  g.seed = seed;
  return g;
}

}  // namespace

PropertyResult check_duality(Ring ring, const PropertyOptions& options) {
  std::size_t violations = 0;
  std::string detail;
  const std::uint64_t base = mix_seed(options.seed, ring == Ring::kExterior ? 101 : 102);
  for (std::size_t s = 0; s < options.samples; ++s) {
    Rng rng(mix_seed(base, s));
    const int n = random_between(rng, 2, options.max_n);
    const auto w = random_degree2_set(rng, ring, n);
    const int which = static_cast<int>(s % 3);
    const TermOrder order = which == 0   ? TermOrder::lex()
                            : which == 1 ? TermOrder::revlex()
                                         : TermOrder::weight_then_lex(random_decreasing_weights(rng, n));
    try {
      // Exterior duality holds in every characteristic; the polynomial one needs characteristic 0.
      if (ring == Ring::kExterior) {
        complement_dual(PrimeField(), order, w, gin_options(options, rng()));
      } else {
        complement_dual(RationalField(), order, w, gin_options(options, rng()));
      }
    } catch (const Error& e) {
      ++violations;
      if (detail.empty()) detail = "W = " + w.to_string() + " under " + order.to_string() + ": " + e.what();
    }
  }
  return finish(std::string("complement duality (") + (ring == Ring::kExterior ? "exterior" : "polynomial, rational") + ")",
                options.samples, violations, detail);
}

PropertyResult check_char2_negative(const PropertyOptions& options) {
  // Over GF(2) every image of a square is a sum of squares, so the generic
  // initial space of span{x1^2, x2^2} cannot be strongly stable.
  const PrimeField gf2(2);
  const int n = 3;
  const MonomialSet w(Ring::kPolynomial, n, 2, {Monomial::polynomial({2, 0, 0}), Monomial::polynomial({0, 2, 0})});
  std::string outcome;
  bool failed_as_expected = false;
  try {
    complement_dual(gf2, TermOrder::lex(), w, gin_options(options, mix_seed(options.seed, 201)));
    outcome = "certified duality held";
  } catch (const CertificationFailed&) {
    failed_as_expected = true;
    outcome = "certification failed";
  } catch (const DualityViolation&) {
    failed_as_expected = true;
    outcome = "duality violated";
  }
  // Uncertified per-trial comparison: in_lex(phi(W)) against in_{lex^-1}(psi(W-bar)).
  std::size_t mismatches = 0;
  const std::size_t trials = 16;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(mix_seed(mix_seed(options.seed, 202), t));
    const auto phi = CoordinateChange<PrimeField>::random_dense(gf2, n, rng);
    const auto psi = CoordinateChange<PrimeField>::random_dense(gf2, n, rng);
    const MonomialIdeal wi(Ring::kPolynomial, n, w.members());
    const MonomialIdeal wbar(Ring::kPolynomial, n, w.complement().members());
    const auto left = truncated_initial_ideal(TermOrder::lex(), phi, wi, 2).degree_component(2).complement();
    const auto right = truncated_initial_ideal(TermOrder::inverse(TermOrder::lex()), psi, wbar, 2).degree_component(2);
    if (!(left == right)) ++mismatches;
  }
  if (mismatches > 0) failed_as_expected = true;
  PropertyResult r = finish("char-2 negative case (duality must fail)", 1, failed_as_expected ? 0 : 1,
                            outcome + "; per-trial mismatches " + std::to_string(mismatches) + "/" + std::to_string(trials));
  return r;
}

PropertyResult check_sandwich_and_domination(const PropertyOptions& options) {
  std::size_t violations = 0;
  std::size_t witnesses = 0;
  std::string detail;
  const PrimeField field;
  for (std::size_t s = 0; s < options.samples; ++s) {
    Rng rng(mix_seed(mix_seed(options.seed, 301), s));
    MonomialIdeal ideal(Ring::kExterior, 4);
    if (s == 0) {
      ideal = MonomialIdeal::parse("ring=ext n=4\ne{1,2}\ne{1,3}\ne{3,4}\n");
    } else {
      const int n = random_between(rng, 3, std::min(options.max_n, 6));
      ideal = combinatorial_ideal(random_graph(rng, n), Ring::kExterior);
    }
    GinOptions g = gin_options(options, rng());
    g.degree_cap = 2;
    const auto gins = gin_all(field, {TermOrder::lex(), TermOrder::revlex()}, ideal, g);
    const auto lex_p = index_profile(gins[0].ideal, 2);
    const auto rev_p = index_profile(gins[1].ideal, 2);
    TransOptions t;
    t.budget = 50;
    t.degree_cap = 2;
    const auto search = trans_witnesses(field, ideal, t);
    for (const auto& w : search.witnesses) {
      ++witnesses;
      const auto p = index_profile(w.ideal, 2);
      bool ok = true;
      for (std::size_t k = 0; k < p.max_le.size(); ++k) {
        ok = ok && lex_p.max_le[k] <= p.max_le[k] && p.max_le[k] <= rev_p.max_le[k];
      }
      for (int o = 0; o < 2; ++o) {
        const TermOrder order = o == 0 ? TermOrder::lex() : TermOrder::revlex();
        for (const auto& u : all_monomials(Ring::kExterior, ideal.n(), 2)) {
          ok = ok && m_count(order, gins[static_cast<std::size_t>(o)].ideal, u) >= m_count(order, w.ideal, u);
        }
      }
      if (!ok) {
        ++violations;
        if (detail.empty()) detail = "I = " + ideal.to_string() + ", witness " + w.ideal.to_string();
      }
    }
  }
  auto r = finish("sandwich and m-count domination", options.samples, violations, detail);
  r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(witnesses) + " witnesses checked";
  return r;
}

PropertyResult check_cone_commutation(const PropertyOptions& options) {
  std::size_t violations = 0;
  std::string detail;
  const PrimeField field;
  for (std::size_t s = 0; s < options.samples; ++s) {
    Rng rng(mix_seed(mix_seed(options.seed, 401), s));
    const int n = random_between(rng, 1, 5);
    std::vector<std::uint32_t> faces;
    const int count = random_between(rng, 1, 4);
    for (int f = 0; f < count; ++f) faces.push_back(static_cast<std::uint32_t>(uniform_below(rng, 1ULL << n)));
    const SimplicialComplex gamma(n, faces);
    const auto g = gin_options(options, rng());
    const auto lhs = shifted_complex(field, TermOrder::revlex(), cone(gamma), g);
    const auto rhs = cone(shifted_complex(field, TermOrder::revlex(), gamma, g));
    if (!(lhs == rhs)) {
      ++violations;
      if (detail.empty()) detail = "Gamma = " + gamma.to_string() + ": " + lhs.to_string() + " vs " + rhs.to_string();
    }
  }
  return finish("cone commutation", options.samples, violations, detail);
}

PropertyResult check_hyperplane_oracle(const PropertyOptions& options) {
  std::size_t violations = 0;
  std::string detail;
  const PrimeField field;
  for (std::size_t s = 0; s < options.oracle_samples; ++s) {
    Rng rng(mix_seed(mix_seed(options.seed, 501), s));
    const Ring ring = s % 2 == 0 ? Ring::kExterior : Ring::kPolynomial;
    const int n = random_between(rng, 2, std::min(options.max_n, 7));
    const auto w = random_degree2_set(rng, ring, n);
    const auto gin_w = gin_component(field, TermOrder::revlex(), w, gin_options(options, rng())).component;
    const auto phi = CoordinateChange<PrimeField>::random_dense(field, n, rng);
    std::vector<std::pair<int, int>> pairs;
    const auto missing = w.complement();
    for (const auto& m : missing.members()) pairs.emplace_back(m.min_index(), m.max_index());
    const auto outside = gin_w.complement();
    for (int k = 1; k <= n; ++k) {
      const auto expected = count_max_at_least(outside, k);
      const auto rank = hyperplane_rank(phi, pairs, ring, n + 1 - k);
      if (expected != rank) {
        ++violations;
        if (detail.empty()) {
          detail = "W = " + w.to_string() + " k=" + std::to_string(k) + ": gin count " + std::to_string(expected) +
                   " vs rank " + std::to_string(rank);
        }
        break;
      }
    }
  }
  return finish("hyperplane rank oracle", options.oracle_samples, violations, detail);
}

PropertyResult check_bipartite_sign_flip(const PropertyOptions& options) {
  std::size_t violations = 0;
  std::string detail;
  const PrimeField field;
  for (std::size_t s = 0; s < options.oracle_samples; ++s) {
    Rng rng(mix_seed(mix_seed(options.seed, 601), s));
    const int n = random_between(rng, 2, std::min(options.max_n, 7));
    Graph g(n);
    std::vector<int> side(static_cast<std::size_t>(n));
    for (auto& x : side) x = static_cast<int>(uniform_below(rng, 2));
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (side[static_cast<std::size_t>(i - 1)] != side[static_cast<std::size_t>(j - 1)] && uniform_below(rng, 2) == 1) {
          g.add_edge(i, j);
        }
      }
    }
    const auto phi = CoordinateChange<PrimeField>::random_dense(field, n, rng);
    GinOptions gopt = gin_options(options, rng());
    gopt.degree_cap = 2;
    const auto ext = index_profile(gin(field, TermOrder::lex(), combinatorial_ideal(g.complement(), Ring::kExterior), gopt).ideal, 2);
    const auto poly = index_profile(gin(field, TermOrder::lex(), combinatorial_ideal(g, Ring::kPolynomial), gopt).ideal, 2);
    const auto pairs = g.edges();
    for (int k = 1; k <= n; ++k) {
      const auto rho = hyperplane_rank(phi, pairs, Ring::kExterior, k);
      const auto plus = hyperplane_rank(phi, pairs, Ring::kPolynomial, k);
      const auto kk = static_cast<std::size_t>(k - 1);
      if (rho != plus || ext.min_le[kk] != rho || poly.min_le[kk] != plus) {
        ++violations;
        if (detail.empty()) {
          detail = "G = " + g.to_string() + " k=" + std::to_string(k) + ": ranks " + std::to_string(rho) + "/" +
                   std::to_string(plus) + ", profiles " + std::to_string(ext.min_le[kk]) + "/" +
                   std::to_string(poly.min_le[kk]);
        }
        break;
      }
    }
  }
  return finish("bipartite sign flip (exterior vs polynomial)", options.oracle_samples, violations, detail);
}

PropertyResult check_partial_support(const PropertyOptions& options) {
  std::size_t violations = 0;
  std::string detail;
  const PrimeField field;
  for (std::size_t s = 0; s < options.oracle_samples; ++s) {
    Rng rng(mix_seed(mix_seed(options.seed, 701), s));
    const int n = random_between(rng, 2, std::min(options.max_n, 6));
    int p = random_between(rng, 1, n), q = random_between(rng, 1, n);
    if (p > q) std::swap(p, q);
    std::vector<Monomial> members;
    for (auto& m : all_monomials(Ring::kPolynomial, n, 2)) {
      const int a = m.min_index(), b = m.max_index();
      if (a >= p && b >= q) continue;
      if (uniform_below(rng, 3) != 0) members.push_back(std::move(m));
    }
    const MonomialSet w(Ring::kPolynomial, n, 2, std::move(members));
    GinOptions gopt = gin_options(options, rng());
    gopt.upper_triangular = true;
    const TermOrder order = s % 2 == 0 ? TermOrder::lex() : TermOrder::revlex();
    const auto g = gin_component(field, order, w, gopt).component;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    ++exps[static_cast<std::size_t>(p - 1)];
    ++exps[static_cast<std::size_t>(q - 1)];
    if (g.contains(Monomial::polynomial(exps))) {
      ++violations;
      if (detail.empty()) detail = "W = " + w.to_string() + " p=" + std::to_string(p) + " q=" + std::to_string(q);
    }
  }
  return finish("partial-support exclusion (upper triangular)", options.oracle_samples, violations, detail);
}

PropertyResult check_restriction(const PropertyOptions& options) {
  // Uniqueness passes to induced subgraphs: checked on condition (v) and on
  // degree-2 gin equality of J_G, over all classes with n <= 6.
  std::size_t violations = 0, checked = 0;
  std::string detail;
  const PrimeField field;
  std::unordered_map<std::uint64_t, std::pair<bool, bool>> facts;
  const auto key = [](const Graph& g) { return edge_mask(g) * 64 + static_cast<std::uint64_t>(g.n()); };
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      GinOptions gopt = gin_options(options, mix_seed(options.seed, key(g)));
      gopt.degree_cap = 2;
      const auto gins = gin_all(field, {TermOrder::lex(), TermOrder::revlex()}, combinatorial_ideal(g, Ring::kExterior), gopt);
      const bool equal2 = gins[0].ideal.degree_component(2) == gins[1].ideal.degree_component(2);
      const bool v = condition_v(g).holds;
      facts[key(g)] = {v, equal2};
      if (n == 1) continue;
      for (int del = 1; del <= n; ++del) {
        std::vector<int> keep;
        for (int u = 1; u <= n; ++u) {
          if (u != del) keep.push_back(u);
        }
        const auto sub = facts.at(key(canonical_form(g.induced(keep))));
        ++checked;
        if ((v && !sub.first) || (equal2 && !sub.second)) {
          ++violations;
          if (detail.empty()) detail = "G = " + g.to_string() + " minus vertex " + std::to_string(del);
        }
      }
    }
  }
  return finish("restriction to induced subgraphs", checked, violations, detail);
}

PropertyReport property_suite(const PropertyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  PropertyReport report;
  report.seed = options.seed;
  report.results.push_back(check_duality(Ring::kExterior, options));
  report.results.push_back(check_duality(Ring::kPolynomial, options));
  report.results.push_back(check_char2_negative(options));
  report.results.push_back(check_sandwich_and_domination(options));
  report.results.push_back(check_cone_commutation(options));
  report.results.push_back(check_hyperplane_oracle(options));
  report.results.push_back(check_bipartite_sign_flip(options));
  report.results.push_back(check_partial_support(options));
  report.results.push_back(check_restriction(options));
  report.seconds = seconds_since(start);
  return report;
}

nlohmann::json PropertyReport::results_json() const {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& r : results) {
    items.push_back({{"name", r.name}, {"samples", r.samples}, {"violations", r.violations}, {"pass", r.pass}});
  }
  return {{"properties", items}, {"pass", pass()}};
}

nlohmann::json PropertyReport::meta_json() const {
  nlohmann::json details = nlohmann::json::object();
  for (const auto& r : results) {
    if (!r.detail.empty()) details[r.name] = r.detail;
  }
  return {{"seed", seed}, {"details", details}};
}

std::string PropertyReport::table() const {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  samples=" << r.samples << " violations=" << r.violations;
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << '\n';
  }
  return out.str();
}

}  // namespace gins
