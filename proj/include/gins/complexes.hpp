#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gins/engine.hpp"
#include "gins/ideal.hpp"
#include "json.hpp"

namespace gins {

inline constexpr int kMaxGraphVertices = 16;

/// A simple graph on vertices 1..n stored as adjacency bitmasks (bit v-1 for vertex v).
class Graph {
 public:
  explicit Graph(int n = 0);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  bool has_edge(int i, int j) const;
  void add_edge(int i, int j);
  std::uint32_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v - 1)]; }
  int degree(int v) const;
  /// Edges {i,j} with i < j, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  Graph complement() const;
  /// The subgraph induced on the listed vertices, renumbered 1..k in list order.
  Graph induced(const std::vector<int>& vertices) const;
  /// Vertex i becomes image[i-1].
  Graph relabeled(const std::vector<int>& image) const;

  std::string to_string() const;
  nlohmann::json to_json() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_;
  std::vector<std::uint32_t> adj_;
};

/// Text ("n <int>" then "i j" lines, '#' comments) or JSON {"n":..,"edges":[[i,j],..]}.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

namespace graphs {
Graph path(int n);             ///< 1-2-...-n
Graph cycle(int n);            ///< 1-2-...-n-1
Graph complete(int n);
Graph complete_bipartite(int a, int b);  ///< parts {1..a}, {a+1..a+b}
Graph disjoint_cliques(int a, int b);    ///< K_a on {1..a} and K_b on {a+1..a+b}
Graph forbidden_a();  ///< {1,2},{1,3},{3,4}
Graph forbidden_b();  ///< {1,2},{3,4},{3,5}
Graph forbidden_c();  ///< {1,2},{3,4},{5,6}
}  // namespace graphs

/// A simplicial complex on 1..n given by faces encoded as bitmasks. Always
/// contains the empty face and every singleton; closed under subsets.
class SimplicialComplex {
 public:
  /// Downward closure of the given faces plus all singletons.
  SimplicialComplex(int n, const std::vector<std::uint32_t>& faces);

  int n() const { return n_; }
  /// All faces, sorted by size then value.
  const std::vector<std::uint32_t>& faces() const { return faces_; }
  bool contains(std::uint32_t face) const;
  std::vector<std::uint32_t> facets() const;
  int dimension() const;
  /// f[k] = number of faces with k vertices, k = 0..n.
  std::vector<std::size_t> face_counts() const;

  std::string to_string() const;  ///< sorted facet list, e.g. [[1,2],[3]]
  nlohmann::json to_json() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int n_;
  std::vector<std::uint32_t> faces_;
};

std::vector<int> mask_to_vertices(std::uint32_t mask);
std::uint32_t vertices_to_mask(const std::vector<int>& vertices);

/// F(G): the cliques of G.
SimplicialComplex flag_complex(const Graph& g);
/// The graph as a one-dimensional complex.
SimplicialComplex graph_complex(const Graph& g);
/// Faces: subsets whose monomial lies outside the exterior ideal.
SimplicialComplex complex_from_face_ideal(const MonomialIdeal& ideal);

/// Face ideal generated by the minimal non-faces: exterior face ideal J_Gamma
/// or Stanley-Reisner ideal I_Gamma.
MonomialIdeal combinatorial_ideal(const SimplicialComplex& complex, Ring ring);
/// Exterior ring: J_G of the graph as a complex. Polynomial ring: the edge ideal I(G).
MonomialIdeal combinatorial_ideal(const Graph& g, Ring ring);

/// An injection of H's vertices into G's (H vertex i -> G vertex result[i-1])
/// that maps H exactly onto an induced subgraph, if one exists.
std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h);

struct ConditionV {
  bool holds = true;
  /// e.g. "graph (a) at vertices 1,2,3,4 of G"; empty when the condition holds.
  std::string witness;
};
ConditionV condition_v(const Graph& g);

bool is_near_cone(const Graph& g, int v);

enum class BaseForm { kSemiCompleteBipartite, kTwoSemiCompleteCliques, kNeither };
std::string base_form_name(BaseForm form);
/// Classifies G after deleting isolated vertices. Bipartite is tested first;
/// the edgeless graph counts as semi-complete bipartite.
BaseForm base_form(const Graph& g);

struct ConditionVI {
  bool holds = false;
  std::vector<int> peel;  ///< v_1, ..., v_k in original labels
  BaseForm base = BaseForm::kNeither;
};
/// Exhaustive search for a peel sequence of near-cone vertices ending in a base form.
ConditionVI condition_vi(const Graph& g);

bool is_chordal(const Graph& g);

/// The cone with apex n+1.
SimplicialComplex cone(const SimplicialComplex& complex);

/// Delta^sigma(Gamma): faces are the monomials outside the certified gin of J_Gamma.
template <class Field>
SimplicialComplex shifted_complex(const Field& field, const TermOrder& order, const SimplicialComplex& complex,
                                  const GinOptions& options = {}) {
  const auto ideal = combinatorial_ideal(complex, Ring::kExterior);
  return complex_from_face_ideal(gin(field, order, ideal, options).ideal);
}

}  // namespace gins
