#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gins/complexes.hpp"
#include "gins/engine.hpp"
#include "gins/error.hpp"
#include "gins/invariants.hpp"
#include "gins/verifier.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace gins;

namespace {

struct Config {
  std::string input;
  std::string ring = "ext";
  std::string order;  // empty: the subcommand default
  std::string field = "prime";
  std::optional<int> degree_cap;
  int trials = 3;
  std::uint64_t seed = 0;
  std::string format = "json";

  bool graph_input = false;
  bool flag = false;
  bool upper_triangular = false;
  std::string pairs;
  std::size_t budget = 50;
  bool relabelings = false;
  int degree = 2;
  std::vector<int> closed_forms;
  bool use_gin = false;
  bool graph_complex = false;
  std::string theorem;
  int n = 6;
  unsigned threads = 0;
  std::size_t trans_budget = 1000;
  std::size_t samples = 200;
  std::size_t oracle_samples = 100;
  int max_n = 8;
};

TermOrder order_or(const Config& c, const std::string& fallback) {
  return TermOrder::parse(c.order.empty() ? fallback : c.order);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

FieldSpec checked_field(const Config& c) {
  FieldSpec field = parse_field(c.field);
  if (field_characteristic(field) == 2) {
    throw InvalidInput("characteristic 2 is only available through the char2-negative subcommand");
  }
  return field;
}

GinOptions gin_options(const Config& c) {
  GinOptions o;
  o.trials = c.trials;
  o.seed = c.seed;
  o.degree_cap = c.degree_cap;
  o.upper_triangular = c.upper_triangular;
  return o;
}

MonomialIdeal load_ideal(const Config& c) {
  const std::string text = read_file(c.input);
  if (!c.graph_input) return MonomialIdeal::parse(text);
  const Graph g = parse_graph(text);
  const Ring ring = parse_ring(c.ring);
  return c.flag ? combinatorial_ideal(flag_complex(g), ring) : combinatorial_ideal(g, ring);
}

SimplicialComplex load_complex(const Config& c) {
  const std::string text = read_file(c.input);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidInput("malformed JSON in " + c.input);
    if (j.contains("facets")) {
      const int n = j.at("n").get<int>();
      if (n < 1 || n > kMaxGraphVertices) throw SizeLimitExceeded("complexes are limited to 16 vertices");
      std::vector<std::uint32_t> faces;
      for (const auto& f : j.at("facets")) {
        std::vector<int> vertices = f.get<std::vector<int>>();
        for (int v : vertices) {
          if (v < 1 || v > n) throw InvalidInput("facet vertex out of range");
        }
        faces.push_back(vertices_to_mask(vertices));
      }
      return SimplicialComplex(n, faces);
    }
  }
  const Graph g = parse_graph(text);
  return c.graph_complex ? graph_complex(g) : flag_complex(g);
}

// Exterior ideals are shifted in every degree; polynomial ones up to their top generator.
int default_shift_cap(const Config& c, const MonomialIdeal& ideal) {
  if (c.degree_cap) return *c.degree_cap;
  return ideal.ring() == Ring::kExterior ? ideal.n() : std::max(ideal.max_generator_degree(), 1);
}

std::vector<ShiftPair> parse_pairs(const std::string& text) {
  std::vector<ShiftPair> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" ") == std::string::npos) continue;
    int a = 0, b = 0;
    char comma = 0;
    std::stringstream p(item);
    if (!(p >> a >> comma >> b) || comma != ',') throw InvalidInput("pairs look like \"1,3;2,4\": " + text);
    out.emplace_back(a, b);
  }
  return out;
}

json generators_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
  return gens;
}

json hilbert_json(const MonomialIdeal& ideal, int cap) {
  json h = json::array();
  for (int d = 0; d <= cap; ++d) h.push_back(ideal.hilbert(d));
  return h;
}

json config_json(const Config& c, const std::string& command) {
  json j{{"command", command}, {"seed", c.seed}, {"trials", c.trials}, {"field", c.field}, {"order", c.order.empty() ? "default" : c.order}};
  if (c.degree_cap) j["degree_cap"] = *c.degree_cap;
  if (!c.input.empty()) j["input"] = c.input;
  return j;
}

struct Output {
  json results;
  json certificates = json::array();
  std::string table;
  bool pass = true;
};

Output run_gin(const Config& c) {
  const auto ideal = load_ideal(c);
  const TermOrder order = order_or(c, "revlex");
  Output out;
  with_field(checked_field(c), [&](const auto& field) {
    const auto r = gin(field, order, ideal, gin_options(c));
    out.results = {{"input", ideal.to_string()},
                   {"gin", r.ideal.to_string()},
                   {"generators", generators_json(r.ideal)},
                   {"hilbert", hilbert_json(r.ideal, r.certificate.degree_cap)}};
    out.certificates.push_back(r.certificate.to_json());
    out.table = "gin_" + order.to_string() + "(" + ideal.to_string() + ") = " + r.ideal.to_string() + "\n";
  });
  return out;
}

Output run_shift(const Config& c) {
  const auto ideal = load_ideal(c);
  const auto pairs = parse_pairs(c.pairs);
  const TermOrder order = order_or(c, "lex");
  Output out;
  with_field(checked_field(c), [&](const auto& field) {
    const int cap = default_shift_cap(c, ideal);
    const auto shifted = combinatorial_shift(field, order, ideal, pairs, cap);
    const bool stable = is_strongly_stable(shifted);
    json pj = json::array();
    for (const auto& [a, b] : pairs) pj.push_back({a, b});
    out.results = {{"input", ideal.to_string()},
                   {"pairs", pj},
                   {"degree_cap", cap},
                   {"result", shifted.to_string()},
                   {"generators", generators_json(shifted)},
                   {"strongly_stable", stable}};
    out.table = shifted.to_string() + (stable ? "  (strongly stable)\n" : "  (not strongly stable)\n");
  });
  return out;
}

Output run_witnesses(const Config& c) {
  const auto ideal = load_ideal(c);
  Output out;
  with_field(checked_field(c), [&](const auto& field) {
    TransOptions t;
    t.budget = c.budget;
    t.degree_cap = default_shift_cap(c, ideal);
    t.order = order_or(c, "lex");
    t.relabelings = c.relabelings;
    const auto search = trans_witnesses(field, ideal, t);
    json ws = json::array();
    std::ostringstream table;
    for (const auto& w : search.witnesses) {
      json pj = json::array();
      for (const auto& [a, b] : w.pairs) pj.push_back({a, b});
      ws.push_back({{"ideal", w.ideal.to_string()}, {"relabeling", w.relabeling}, {"pairs", pj}});
      table << w.ideal.to_string() << '\n';
    }
    out.results = {{"input", ideal.to_string()},   {"budget", c.budget},
                   {"degree_cap", t.degree_cap},    {"expanded", search.expanded},
                   {"exhausted", search.exhausted}, {"witnesses", ws}};
    out.table = table.str() + std::to_string(search.witnesses.size()) + " witnesses, " +
                std::to_string(search.expanded) + " states expanded\n";
  });
  return out;
}

Output run_classify(const Config& c) {
  const Graph g = parse_graph(read_file(c.input));
  const auto v = condition_v(g);
  const auto vi = condition_vi(g);
  Output out;
  out.results = {{"graph", g.to_json()},
                 {"condition_v", v.holds},
                 {"witness", v.witness},
                 {"condition_vi", vi.holds},
                 {"peel", vi.peel},
                 {"base_form", base_form_name(base_form(g))},
                 {"peel_base_form", base_form_name(vi.base)},
                 {"chordal", is_chordal(g)}};
  std::ostringstream t;
  t << "condition (v): " << (v.holds ? "holds" : "fails, " + v.witness) << '\n'
    << "condition (vi): " << (vi.holds ? "holds" : "fails") << '\n'
    << "base form: " << base_form_name(base_form(g)) << '\n'
    << "chordal: " << (is_chordal(g) ? "yes" : "no") << '\n';
  out.table = t.str();
  return out;
}

json profile_json(const IndexProfile& p) { return {{"min_le", p.min_le}, {"max_le", p.max_le}}; }

Output run_profile(const Config& c) {
  Output out;
  if (!c.closed_forms.empty()) {
    if (c.closed_forms.size() != 2) throw InvalidInput("--closed-forms takes two integers a b");
    const int a = c.closed_forms[0], b = c.closed_forms[1];
    if (a + b > kMaxGraphVertices) throw SizeLimitExceeded("a + b is limited to 16");
    const auto forms = closed_form_profiles(a, b);
    const int n = a + b;
    with_field(checked_field(c), [&](const auto& field) {
      GinOptions o = gin_options(c);
      o.degree_cap = 2;
      const auto bip = shifted_edges(gin(field, TermOrder::revlex(), combinatorial_ideal(graphs::complete_bipartite(a, b), Ring::kExterior), o).ideal);
      const auto cliques = shifted_edges(gin(field, TermOrder::revlex(), combinatorial_ideal(graphs::disjoint_cliques(a, b), Ring::kExterior), o).ideal);
      std::vector<std::int64_t> bip_engine, cliques_engine;
      for (int k = 1; k <= n; ++k) {
        bip_engine.push_back(static_cast<std::int64_t>(count_max_at_least(bip, n + 1 - k)));
        cliques_engine.push_back(static_cast<std::int64_t>(count_min_at_least(cliques, n + 1 - k)));
      }
      out.pass = bip_engine == forms.bipartite && cliques_engine == forms.two_cliques &&
                 forms.two_cliques_from_h == forms.two_cliques;
      out.results = {{"a", a},
                     {"b", b},
                     {"bipartite", {{"closed_form", forms.bipartite}, {"engine", bip_engine}}},
                     {"two_cliques", {{"closed_form", forms.two_cliques}, {"engine", cliques_engine},
                                      {"from_h", forms.two_cliques_from_h}, {"h", forms.h}}},
                     {"match", out.pass}};
      std::ostringstream t;
      t << "k\tbip-closed\tbip-engine\tcliques-closed\tcliques-engine\tfrom-h\n";
      for (int k = 1; k <= n; ++k) {
        const auto i = static_cast<std::size_t>(k - 1);
        t << k << '\t' << forms.bipartite[i] << '\t' << bip_engine[i] << '\t' << forms.two_cliques[i] << '\t'
          << cliques_engine[i] << '\t' << forms.two_cliques_from_h[i] << '\n';
      }
      t << (out.pass ? "match\n" : "MISMATCH\n");
      out.table = t.str();
    });
    return out;
  }
  const auto ideal = load_ideal(c);
  const auto p = index_profile(ideal, c.degree);
  out.results = {{"input", ideal.to_string()}, {"degree", c.degree}, {"profile", profile_json(p)}};
  std::ostringstream t;
  t << "k\tmin<=k\tmax<=k\n";
  for (std::size_t k = 0; k < p.min_le.size(); ++k) t << k + 1 << '\t' << p.min_le[k] << '\t' << p.max_le[k] << '\n';
  out.table = t.str();
  return out;
}

Output run_betti(const Config& c) {
  MonomialIdeal ideal = load_ideal(c);
  Output out;
  json results{{"input", ideal.to_string()}};
  if (c.use_gin) {
    with_field(checked_field(c), [&](const auto& field) {
      const auto r = gin(field, order_or(c, "revlex"), ideal, gin_options(c));
      out.certificates.push_back(r.certificate.to_json());
      ideal = r.ideal;
    });
    results["gin"] = ideal.to_string();
  }
  std::ostringstream t;
  const bool stable = !stability_violation(ideal.ring() == Ring::kExterior ? ideal.squarefree_image() : ideal,
                                           ideal.ring() == Ring::kExterior ? StabilityFlavor::kSquarefree
                                                                           : StabilityFlavor::kAuto);
  if (stable) {
    const auto table = betti_stable(ideal, ideal.ring() == Ring::kExterior ? BettiFlavor::kSquarefreeStronglyStable
                                                                           : BettiFlavor::kStronglyStable);
    results["formula"] = table.to_json();
    t << "formula:\n" << table.to_string();
  }
  const MonomialIdeal poly = ideal.ring() == Ring::kExterior ? ideal.squarefree_image() : ideal;
  if (static_cast<int>(poly.generators().size()) <= kOracleMaxGenerators) {
    const auto oracle = resolution_oracle(poly);
    results["oracle"] = oracle.to_json();
    t << "oracle:\n" << oracle.to_string();
    if (stable) {
      const bool agree = oracle == betti_stable(ideal, ideal.ring() == Ring::kExterior
                                                           ? BettiFlavor::kSquarefreeStronglyStable
                                                           : BettiFlavor::kStronglyStable);
      results["formula_matches_oracle"] = agree;
      out.pass = agree;
    }
  } else if (!stable) {
    throw SizeLimitExceeded("ideal is not strongly stable and has more than 16 generators");
  }
  out.results = results;
  out.table = t.str();
  return out;
}

Output run_shifted_complex(const Config& c) {
  const auto complex = load_complex(c);
  const TermOrder order = order_or(c, "revlex");
  Output out;
  with_field(checked_field(c), [&](const auto& field) {
    const auto ideal = combinatorial_ideal(complex, Ring::kExterior);
    const auto r = gin(field, order, ideal, gin_options(c));
    const auto shifted = complex_from_face_ideal(r.ideal);
    out.certificates.push_back(r.certificate.to_json());
    out.results = {{"complex", complex.to_json()},
                   {"shifted", shifted.to_json()},
                   {"f_vector", shifted.face_counts()},
                   {"gin", r.ideal.to_string()}};
    out.table = complex.to_string() + " -> " + shifted.to_string() + "\n";
  });
  return out;
}

Output run_sweep(const Config& c) {
  SweepOptions o;
  o.seed = c.seed;
  o.field = checked_field(c);
  o.trials = c.trials;
  o.threads = c.threads;
  o.trans_budget = c.trans_budget;
  o.trans_relabelings = c.relabelings;
  Output out;
  if (c.theorem == "thm1") {
    const auto report = sweep_theorem1(c.n, o);
    out.results = results_json(report);
    out.pass = out.results.at("pass").get<bool>();
    out.table = table(report);
  } else {
    const auto report = sweep_theorem2(c.n, o);
    out.results = results_json(report);
    out.pass = report.pass();
    out.table = table(report);
  }
  return out;
}

Output run_properties(const Config& c) {
  PropertyOptions o;
  o.seed = c.seed;
  o.samples = c.samples;
  o.oracle_samples = c.oracle_samples;
  o.max_n = c.max_n;
  o.trials = c.trials;
  const auto report = property_suite(o);
  Output out;
  out.results = report.results_json();
  out.results["details"] = report.meta_json().at("details");
  out.pass = report.pass();
  out.table = report.table();
  return out;
}

Output run_char2(const Config& c) {
  PropertyOptions o;
  o.seed = c.seed;
  o.trials = c.trials;
  const auto r = check_char2_negative(o);
  Output out;
  out.results = {{"name", r.name}, {"field", "prime:2"}, {"W", "span{x1^2, x2^2} in 3 variables"},
                 {"duality_failed", r.pass}, {"detail", r.detail}};
  out.pass = r.pass;
  out.table = std::string(r.pass ? "PASS" : "FAIL") + "  " + r.detail + "\n";
  return out;
}

void add_common(CLI::App* sub, Config& c, bool with_input = true) {
  if (with_input) sub->add_option("input", c.input, "input file")->required();
  sub->add_option("--ring", c.ring, "ext|poly (for graph inputs)")->check(CLI::IsMember({"ext", "poly", "exterior", "polynomial"}));
  sub->add_option("--order", c.order, "lex|revlex|weight:<w1,...,wn>:<lex|revlex>|inv:<order>");
  sub->add_option("--field", c.field, "prime:<p>|prime|rational");
  sub->add_option("--degree-cap", c.degree_cap, "largest degree computed");
  sub->add_option("--trials", c.trials, "random trials per certification")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "master seed");
  sub->add_option("--format", c.format, "json|table")->check(CLI::IsMember({"json", "table"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic initial ideals, algebraic shifting and graph uniqueness checks"};
  app.require_subcommand(1);
  Config c;

  auto* gin_cmd = app.add_subcommand("gin", "certified generic initial ideal of an ideal file");
  add_common(gin_cmd, c);
  auto graph_flags = [&](CLI::App* s) {
    s->add_flag("--graph", c.graph_input, "input is a graph file (J_G in ext, I(G) in poly)");
    s->add_flag("--flag", c.flag, "with --graph, use the flag complex");
  };
  graph_flags(gin_cmd);
  gin_cmd->add_flag("--upper-triangular", c.upper_triangular, "restrict to upper triangular coordinate changes");

  auto* shift_cmd = app.add_subcommand("shift", "apply a sequence of combinatorial shifts");
  add_common(shift_cmd, c);
  graph_flags(shift_cmd);
  shift_cmd->add_option("--pairs", c.pairs, "pairs like \"1,3;2,4\"")->required();

  auto* wit_cmd = app.add_subcommand("witnesses", "search for transformed strongly stable ideals");
  add_common(wit_cmd, c);
  graph_flags(wit_cmd);
  wit_cmd->add_option("--budget", c.budget, "expanded states");
  wit_cmd->add_flag("--relabelings", c.relabelings, "also start from every vertex relabeling");

  auto* cls_cmd = app.add_subcommand("classify", "conditions (v), (vi), base form of a graph file");
  add_common(cls_cmd, c);

  auto* prof_cmd = app.add_subcommand("profile", "index profiles of an ideal, or closed forms");
  add_common(prof_cmd, c, false);
  prof_cmd->add_option("input", c.input, "ideal or graph file");
  graph_flags(prof_cmd);
  prof_cmd->add_option("--degree", c.degree, "component degree");
  prof_cmd->add_option("--closed-forms", c.closed_forms, "a b: compare closed forms with the engine")->expected(2);

  auto* betti_cmd = app.add_subcommand("betti", "Betti tables from the stable formulas and the oracle");
  add_common(betti_cmd, c);
  graph_flags(betti_cmd);
  betti_cmd->add_flag("--gin", c.use_gin, "replace the input by its certified gin first");

  auto* sc_cmd = app.add_subcommand("shifted-complex", "algebraic shifting of a complex or graph file");
  add_common(sc_cmd, c);
  sc_cmd->add_flag("--graph-complex", c.graph_complex, "treat a graph as a one-dimensional complex");

  auto* sweep_cmd = app.add_subcommand("sweep", "verify a uniqueness classification over all small graphs");
  add_common(sweep_cmd, c, false);
  sweep_cmd->add_option("theorem", c.theorem, "thm1|thm2")->required()->check(CLI::IsMember({"thm1", "thm2"}));
  sweep_cmd->add_option("--n", c.n, "largest vertex count")->check(CLI::Range(1, kMaxEnumerationVertices));
  sweep_cmd->add_option("--threads", c.threads, "worker threads (0 = hardware)");
  sweep_cmd->add_option("--trans-budget", c.trans_budget, "Trans search budget per graph");
  sweep_cmd->add_flag("--relabelings", c.relabelings, "Trans search from every vertex relabeling");

  auto* prop_cmd = app.add_subcommand("properties", "randomized property suite");
  add_common(prop_cmd, c, false);
  prop_cmd->add_option("--samples", c.samples, "samples per property");
  prop_cmd->add_option("--oracle-samples", c.oracle_samples, "samples for the oracle properties");
  prop_cmd->add_option("--max-n", c.max_n, "largest number of variables")->check(CLI::Range(2, 12));

  auto* char2_cmd = app.add_subcommand("char2-negative", "complement duality over GF(2) must fail");
  add_common(char2_cmd, c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::kInvalidInput);
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
    Output out;
    if (name == "gin") out = run_gin(c);
    else if (name == "shift") out = run_shift(c);
    else if (name == "witnesses") out = run_witnesses(c);
    else if (name == "classify") out = run_classify(c);
    else if (name == "profile") {
      if (c.closed_forms.empty() && c.input.empty()) throw InvalidInput("profile needs an input file or --closed-forms");
      out = run_profile(c);
    } else if (name == "betti") out = run_betti(c);
    else if (name == "shifted-complex") out = run_shifted_complex(c);
    else if (name == "sweep") out = run_sweep(c);
    else if (name == "properties") out = run_properties(c);
    else out = run_char2(c);

    if (c.format == "table") {
      std::cout << out.table;
      if (name == "sweep" || name == "properties" || name == "char2-negative") std::cout << "seed " << c.seed << '\n';
    } else {
      json doc{{"config", config_json(c, name == "sweep" ? "sweep " + c.theorem : name)},
               {"results", out.results},
               {"pass", out.pass}};
      if (!out.certificates.empty()) doc["certificates"] = out.certificates;
      std::cout << doc.dump(2) << '\n';
    }
    return static_cast<int>(out.pass ? ExitCode::kPass : ExitCode::kCheckFailed);
  } catch (const CertificationFailed& e) {
    json err{{"error", e.what()}, {"kind", "certification-failed"}, {"candidates", e.candidates()}};
    std::cerr << err.dump(2) << '\n';
    return static_cast<int>(e.code());
  } catch (const Error& e) {
    std::cerr << json{{"error", e.what()}, {"exit_code", static_cast<int>(e.code())}}.dump(2) << '\n';
    return static_cast<int>(e.code());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << json{{"error", std::string("malformed JSON: ") + e.what()}}.dump(2) << '\n';
    return static_cast<int>(ExitCode::kInvalidInput);
  }
}
