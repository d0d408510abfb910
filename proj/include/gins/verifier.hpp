#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gins/complexes.hpp"
#include "gins/field.hpp"
#include "json.hpp"

namespace gins {

inline constexpr int kMaxEnumerationVertices = 7;

/// Bit (index of {i,j} among pairs in lexicographic order) set for each edge.
std::uint64_t edge_mask(const Graph& g);
Graph graph_from_mask(int n, std::uint64_t mask);

/// Canonical representative: the relabeling with the smallest edge mask.
Graph canonical_form(const Graph& g);

/// One canonical representative per isomorphism class on n vertices, sorted by
/// (edge count, edge mask). Built by extending the classes on n-1 vertices.
std::vector<Graph> enumerate_graphs(int n);

struct SweepOptions {
  std::uint64_t seed = 0;
  FieldSpec field = PrimeField();
  int trials = 3;
  /// Budget (expanded states) of the Trans search.
  std::size_t trans_budget = 1000;
  /// Start the Trans search from every vertex relabeling too.
  bool trans_relabelings = false;
  /// Random strictly decreasing weight orders tried per flag-complex ideal.
  int weight_samples = 20;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct Theorem1Record {
  Graph graph;
  bool condition_v = false;
  std::string forbidden_witness;
  bool condition_vi = false;
  std::vector<int> peel;
  BaseForm base = BaseForm::kNeither;
  /// gin_Lex(J_G)_2 == gin_RevLex(J_G)_2
  bool degree2_equal = false;
  /// Distinct degree-2 components among the Trans witnesses found.
  std::size_t trans_components = 0;
  /// Two shift sequences reaching different degree-2 components, when found.
  std::vector<std::string> trans_certificate;
  /// When condition (v) holds: Lex, RevLex and the sampled weight orders give one gin of J_F(G).
  bool sampled_orders_agree = true;
  std::size_t orders_checked = 0;
  bool pass = false;
  std::string error;

  nlohmann::json to_json() const;
};

struct Theorem2Record {
  Graph graph;
  BaseForm base = BaseForm::kNeither;
  bool semi_complete_bipartite = false;
  int degree_cap = 0;
  bool gins_equal = false;
  /// Smallest degree where the two gins differ, 0 if none.
  int first_difference = 0;
  std::string gin_lex;
  std::string gin_revlex;
  bool pass = false;
  std::string error;

  nlohmann::json to_json() const;
};

template <class Record>
struct SweepReport {
  int n = 0;
  std::vector<Record> records;
  std::uint64_t seed = 0;
  std::string field;
  double seconds = 0;

  bool pass() const {
    for (const auto& r : records) {
      if (!r.pass) return false;
    }
    return true;
  }
  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& r : records) f += r.pass ? 0 : 1;
    return f;
  }
};

using Theorem1Report = SweepReport<Theorem1Record>;
using Theorem2Report = SweepReport<Theorem2Record>;

Theorem1Record check_theorem1(const Graph& g, const SweepOptions& options);
Theorem2Record check_theorem2(const Graph& g, const SweepOptions& options);

Theorem1Report sweep_theorem1(int n, const SweepOptions& options);
Theorem2Report sweep_theorem2(int n, const SweepOptions& options);

/// Seed-independent part of a report: records and summary counts.
nlohmann::json results_json(const Theorem1Report& report);
nlohmann::json results_json(const Theorem2Report& report);
/// Seed and field. Timing stays out of every JSON document so reruns are byte-identical.
template <class Record>
nlohmann::json meta_json(const SweepReport<Record>& report) {
  return {{"seed", report.seed}, {"field", report.field}};
}
std::string table(const Theorem1Report& report);
std::string table(const Theorem2Report& report);

struct PropertyResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t violations = 0;
  bool pass = false;
  std::string detail;
};

struct PropertyOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  std::size_t oracle_samples = 100;
  int max_n = 8;
  int trials = 3;
};

struct PropertyReport {
  std::vector<PropertyResult> results;
  std::uint64_t seed = 0;
  double seconds = 0;
  bool pass() const {
    for (const auto& r : results) {
      if (!r.pass) return false;
    }
    return true;
  }
  nlohmann::json results_json() const;
  /// Seed plus per-property details (instances and counts that may depend on the seed).
  nlohmann::json meta_json() const;
  std::string table() const;
};

/// Complement duality in both rings, the char-2 negative case, sandwich and
/// m-count domination, cone commutation, the hyperplane oracle, partial-support
/// exclusion and the restriction property.
PropertyReport property_suite(const PropertyOptions& options);

/// Individual properties (each returns one result).
PropertyResult check_duality(Ring ring, const PropertyOptions& options);
PropertyResult check_char2_negative(const PropertyOptions& options);
PropertyResult check_sandwich_and_domination(const PropertyOptions& options);
PropertyResult check_cone_commutation(const PropertyOptions& options);
PropertyResult check_hyperplane_oracle(const PropertyOptions& options);
PropertyResult check_bipartite_sign_flip(const PropertyOptions& options);
PropertyResult check_partial_support(const PropertyOptions& options);
PropertyResult check_restriction(const PropertyOptions& options);

}  // namespace gins
