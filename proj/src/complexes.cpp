#include "gins/complexes.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "gins/error.hpp"

namespace gins {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InvalidInput("graph vertex count must be nonnegative");
  if (n > kMaxGraphVertices) {
    throw SizeLimitExceeded("graph vertex count exceeds " + std::to_string(kMaxGraphVertices));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [i, j] : edges) g.add_edge(i, j);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) throw InvalidInput("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n_) + "]");
}

bool Graph::has_edge(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return (adj_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1U;
}

void Graph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw InvalidInput("loops are not allowed");
  adj_[static_cast<std::size_t>(i - 1)] |= 1U << (j - 1);
  adj_[static_cast<std::size_t>(j - 1)] |= 1U << (i - 1);
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (has_edge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

int Graph::edge_count() const {
  int total = 0;
  for (auto a : adj_) total += std::popcount(a);
  return total / 2;
}

Graph Graph::complement() const {
  Graph g(n_);
  const std::uint32_t all = n_ == 32 ? ~0U : ((1U << n_) - 1);
  for (int v = 1; v <= n_; ++v) {
    g.adj_[static_cast<std::size_t>(v - 1)] = all & ~adj_[static_cast<std::size_t>(v - 1)] & ~(1U << (v - 1));
  }
  return g;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  Graph g(static_cast<int>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (has_edge(vertices[a], vertices[b])) g.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    }
  }
  return g;
}

Graph Graph::relabeled(const std::vector<int>& image) const {
  if (static_cast<int>(image.size()) != n_) throw InvalidInput("relabeling has the wrong length");
  Graph g(n_);
  for (const auto& [i, j] : edges()) g.add_edge(image[static_cast<std::size_t>(i - 1)], image[static_cast<std::size_t>(j - 1)]);
  return g;
}

std::string Graph::to_string() const {
  std::string s = "n=" + std::to_string(n_) + " {";
  bool first = true;
  for (const auto& [i, j] : edges()) {
    if (!first) s += ",";
    first = false;
    s += "{" + std::to_string(i) + "," + std::to_string(j) + "}";
  }
  return s + "}";
}

nlohmann::json Graph::to_json() const {
  nlohmann::json edges_json = nlohmann::json::array();
  for (const auto& [i, j] : edges()) edges_json.push_back({i, j});
  return {{"n", n_}, {"edges", edges_json}};
}

Graph parse_graph(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
      Graph g(j.at("n").get<int>());
      for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
      return g;
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("bad graph JSON: ") + e.what());
    }
  }
  std::istringstream in(text);
  std::string line;
  std::optional<Graph> g;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!g) {
      int n = 0;
      if (first != "n" || !(ls >> n)) throw InvalidInput("graph file must start with 'n <int>'");
      g.emplace(n);
      continue;
    }
    int i = 0, j = 0;
    try {
      i = std::stoi(first);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad edge line: " + line);
    }
    if (!(ls >> j)) throw InvalidInput("bad edge line: " + line);
    g->add_edge(i, j);
  }
  if (!g) throw InvalidInput("empty graph file");
  return *g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n() << '\n';
  for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
  return out.str();
}

namespace graphs {

Graph path(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n, 1);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 1; i <= a; ++i) {
    for (int j = a + 1; j <= a + b; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph disjoint_cliques(int a, int b) {
  Graph g(a + b);
  for (int i = 1; i <= a + b; ++i) {
    for (int j = i + 1; j <= a + b; ++j) {
      if ((i <= a) == (j <= a)) g.add_edge(i, j);
    }
  }
  return g;
}

Graph forbidden_a() { return Graph::from_edges(4, {{1, 2}, {1, 3}, {3, 4}}); }
Graph forbidden_b() { return Graph::from_edges(5, {{1, 2}, {3, 4}, {3, 5}}); }
Graph forbidden_c() { return Graph::from_edges(6, {{1, 2}, {3, 4}, {5, 6}}); }

}  // namespace graphs

std::vector<int> mask_to_vertices(std::uint32_t mask) {
  std::vector<int> out;
  for (int v = 1; mask != 0; ++v, mask >>= 1) {
    if (mask & 1U) out.push_back(v);
  }
  return out;
}

std::uint32_t vertices_to_mask(const std::vector<int>& vertices) {
  std::uint32_t mask = 0;
  for (int v : vertices) mask |= 1U << (v - 1);
  return mask;
}

namespace {

bool face_order(std::uint32_t a, std::uint32_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  // Within a size, lexicographic on sorted vertex lists.
  return mask_to_vertices(a) < mask_to_vertices(b);
}

std::string vertex_list(std::uint32_t mask) {
  std::string s = "[";
  bool first = true;
  for (int v : mask_to_vertices(mask)) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(v);
  }
  return s + "]";
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n, const std::vector<std::uint32_t>& faces) : n_(n) {
  if (n < 0 || n > kMaxGraphVertices) throw InvalidInput("complex vertex count out of range");
  const std::uint32_t all = (1U << n) - 1;
  std::unordered_set<std::uint32_t> closed;
  closed.insert(0);
  for (int v = 0; v < n; ++v) closed.insert(1U << v);
  for (auto f : faces) {
    if ((f & ~all) != 0) throw InvalidInput("face uses a vertex outside [1, n]");
    if (closed.count(f)) continue;
    // Enumerate all subsets of f.
    for (std::uint32_t s = f;; s = (s - 1) & f) {
      closed.insert(s);
      if (s == 0) break;
    }
  }
  faces_.assign(closed.begin(), closed.end());
  std::sort(faces_.begin(), faces_.end(), face_order);
}

bool SimplicialComplex::contains(std::uint32_t face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face, face_order);
}

std::vector<std::uint32_t> SimplicialComplex::facets() const {
  std::vector<std::uint32_t> out;
  for (auto f : faces_) {
    bool maximal = true;
    for (int v = 0; v < n_ && maximal; ++v) {
      if (!(f & (1U << v)) && contains(f | (1U << v))) maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

int SimplicialComplex::dimension() const {
  int top = 0;
  for (auto f : faces_) top = std::max(top, std::popcount(f));
  return top - 1;
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(n_) + 1, 0);
  for (auto f : faces_) ++counts[static_cast<std::size_t>(std::popcount(f))];
  return counts;
}

std::string SimplicialComplex::to_string() const {
  std::string s = "[";
  bool first = true;
  for (auto f : facets()) {
    if (!first) s += ",";
    first = false;
    s += vertex_list(f);
  }
  return s + "]";
}

nlohmann::json SimplicialComplex::to_json() const {
  nlohmann::json facets_json = nlohmann::json::array();
  for (auto f : facets()) facets_json.push_back(mask_to_vertices(f));
  return {{"n", n_}, {"facets", facets_json}};
}

SimplicialComplex flag_complex(const Graph& g) {
  std::vector<std::uint32_t> cliques;
  std::function<void(std::uint32_t, std::uint32_t, int)> grow = [&](std::uint32_t clique, std::uint32_t candidates,
                                                                    int next) {
    cliques.push_back(clique);
    for (int v = next; v <= g.n(); ++v) {
      if (candidates & (1U << (v - 1))) grow(clique | (1U << (v - 1)), candidates & g.neighbors(v), v + 1);
    }
  };
  grow(0, (1U << g.n()) - 1, 1);
  return SimplicialComplex(g.n(), cliques);
}

SimplicialComplex graph_complex(const Graph& g) {
  std::vector<std::uint32_t> faces;
  for (const auto& [i, j] : g.edges()) faces.push_back((1U << (i - 1)) | (1U << (j - 1)));
  return SimplicialComplex(g.n(), faces);
}

SimplicialComplex complex_from_face_ideal(const MonomialIdeal& ideal) {
  if (ideal.ring() != Ring::kExterior) throw InvalidInput("face ideals live in the exterior algebra");
  const int n = ideal.n();
  std::vector<std::uint32_t> faces;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (!ideal.contains(Monomial::exterior(n, mask_to_vertices(s)))) faces.push_back(s);
  }
  SimplicialComplex c(n, faces);
  if (c.faces().size() != faces.size()) throw InvalidInput("ideal is not a face ideal (contains a variable)");
  return c;
}

MonomialIdeal combinatorial_ideal(const SimplicialComplex& complex, Ring ring) {
  const int n = complex.n();
  std::vector<Monomial> gens;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    if (complex.contains(s)) continue;
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v) {
      if ((s & (1U << v)) && !complex.contains(s & ~(1U << v))) minimal = false;
    }
    if (!minimal) continue;
    auto m = Monomial::exterior(n, mask_to_vertices(s));
    gens.push_back(ring == Ring::kExterior ? m : m.as_polynomial());
  }
  return MonomialIdeal(ring, n, std::move(gens));
}

MonomialIdeal combinatorial_ideal(const Graph& g, Ring ring) {
  if (ring == Ring::kExterior) return combinatorial_ideal(graph_complex(g), Ring::kExterior);
  std::vector<Monomial> gens;
  for (const auto& [i, j] : g.edges()) gens.push_back(Monomial::exterior(g.n(), {i, j}).as_polynomial());
  return MonomialIdeal(Ring::kPolynomial, g.n(), std::move(gens));
}

std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h) {
  const int k = h.n();
  if (k > g.n()) return std::nullopt;
  std::vector<int> image(static_cast<std::size_t>(k), 0);
  std::uint32_t used = 0;
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i > k) return true;
    for (int v = 1; v <= g.n(); ++v) {
      if (used & (1U << (v - 1))) continue;
      bool ok = true;
      for (int j = 1; j < i && ok; ++j) ok = h.has_edge(i, j) == g.has_edge(v, image[static_cast<std::size_t>(j - 1)]);
      if (!ok) continue;
      image[static_cast<std::size_t>(i - 1)] = v;
      used |= 1U << (v - 1);
      if (place(i + 1)) return true;
      used &= ~(1U << (v - 1));
    }
    return false;
  };
  if (place(1)) return image;
  return std::nullopt;
}

ConditionV condition_v(const Graph& g) {
  const std::pair<const char*, Graph> forbidden[] = {
      {"(a)", graphs::forbidden_a()}, {"(b)", graphs::forbidden_b()}, {"(c)", graphs::forbidden_c()}};
  const std::pair<const char*, Graph> sides[] = {{"G", g}, {"the complement of G", g.complement()}};
  for (const auto& [side_name, side] : sides) {
    for (const auto& [name, h] : forbidden) {
      if (auto emb = contains_induced(side, h)) {
        std::string vs;
        for (std::size_t i = 0; i < emb->size(); ++i) vs += (i ? "," : "") + std::to_string((*emb)[i]);
        return ConditionV{false, std::string("graph ") + name + " at vertices " + vs + " of " + side_name};
      }
    }
  }
  return ConditionV{true, ""};
}

bool is_near_cone(const Graph& g, int v) {
  for (int t = 1; t <= g.n(); ++t) {
    if (t != v && g.degree(t) > 0 && !g.has_edge(v, t)) return false;
  }
  return true;
}

std::string base_form_name(BaseForm form) {
  switch (form) {
    case BaseForm::kSemiCompleteBipartite: return "semi-complete-bipartite";
    case BaseForm::kTwoSemiCompleteCliques: return "two-semi-complete-cliques";
    case BaseForm::kNeither: return "neither";
  }
  return "neither";
}

namespace {

/// Base form of the subgraph induced on `mask` (bit v-1 for vertex v).
BaseForm base_form_on(const Graph& g, std::uint32_t mask) {
  std::uint32_t active = 0;
  for (int v : mask_to_vertices(mask)) {
    if (g.neighbors(v) & mask) active |= 1U << (v - 1);
  }
  if (active == 0) return BaseForm::kSemiCompleteBipartite;

  // Complete bipartite: the non-neighbors of any vertex form its side.
  {
    const int first = std::countr_zero(active) + 1;
    const std::uint32_t other = g.neighbors(first) & active;
    const std::uint32_t side = active & ~other;
    bool ok = other != 0;
    for (int v : mask_to_vertices(active)) {
      const std::uint32_t want = (side & (1U << (v - 1))) ? other : side;
      if ((g.neighbors(v) & active) != want) ok = false;
    }
    if (ok) return BaseForm::kSemiCompleteBipartite;
  }
  // At most two components, each a clique.
  int components = 0;
  std::uint32_t rest = active;
  while (rest != 0) {
    const int v = std::countr_zero(rest) + 1;
    const std::uint32_t clique = (g.neighbors(v) & active) | (1U << (v - 1));
    for (int u : mask_to_vertices(clique)) {
      if (((g.neighbors(u) & active) | (1U << (u - 1))) != clique) return BaseForm::kNeither;
    }
    rest &= ~clique;
    ++components;
  }
  return components <= 2 ? BaseForm::kTwoSemiCompleteCliques : BaseForm::kNeither;
}

bool near_cone_on(const Graph& g, std::uint32_t mask, int v) {
  const std::uint32_t nv = g.neighbors(v) & mask;
  for (int t : mask_to_vertices(mask & ~(1U << (v - 1)))) {
    if ((g.neighbors(t) & mask) != 0 && !(nv & (1U << (t - 1)))) return false;
  }
  return true;
}

}  // namespace

BaseForm base_form(const Graph& g) { return base_form_on(g, (1U << g.n()) - 1); }

ConditionVI condition_vi(const Graph& g) {
  std::unordered_set<std::uint32_t> failed;
  ConditionVI result;
  std::function<bool(std::uint32_t)> search = [&](std::uint32_t mask) -> bool {
    const BaseForm form = base_form_on(g, mask);
    if (form != BaseForm::kNeither) {
      result.base = form;
      return true;
    }
    if (failed.count(mask)) return false;
    for (int v : mask_to_vertices(mask)) {
      if (!near_cone_on(g, mask, v)) continue;
      result.peel.push_back(v);
      if (search(mask & ~(1U << (v - 1)))) return true;
      result.peel.pop_back();
    }
    failed.insert(mask);
    return false;
  };
  result.holds = search((1U << g.n()) - 1);
  if (!result.holds) result.peel.clear();
  return result;
}

bool is_chordal(const Graph& g) {
  const int n = g.n();
  // Lexicographic breadth-first search with explicit label lists.
  std::vector<std::vector<int>> label(static_cast<std::size_t>(n + 1));
  std::vector<bool> done(static_cast<std::size_t>(n + 1), false);
  std::vector<int> order;
  for (int step = n; step >= 1; --step) {
    int best = 0;
    for (int v = 1; v <= n; ++v) {
      if (done[static_cast<std::size_t>(v)]) continue;
      if (best == 0 || label[static_cast<std::size_t>(v)] > label[static_cast<std::size_t>(best)]) best = v;
    }
    done[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
    for (int u = 1; u <= n; ++u) {
      if (!done[static_cast<std::size_t>(u)] && g.has_edge(best, u)) label[static_cast<std::size_t>(u)].push_back(step);
    }
  }
  // The reverse of a LexBFS order is a perfect elimination ordering iff G is chordal.
  std::vector<int> position(static_cast<std::size_t>(n + 1));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  for (int v = 1; v <= n; ++v) {
    int parent = 0;
    std::uint32_t earlier = 0;
    for (int u : mask_to_vertices(g.neighbors(v))) {
      if (position[static_cast<std::size_t>(u)] < position[static_cast<std::size_t>(v)]) {
        earlier |= 1U << (u - 1);
        if (parent == 0 || position[static_cast<std::size_t>(u)] > position[static_cast<std::size_t>(parent)]) parent = u;
      }
    }
    if (parent == 0) continue;
    const std::uint32_t need = earlier & ~(1U << (parent - 1));
    if ((g.neighbors(parent) & need) != need) return false;
  }
  return true;
}

SimplicialComplex cone(const SimplicialComplex& complex) {
  const int n = complex.n();
  std::vector<std::uint32_t> faces;
  for (auto f : complex.faces()) {
    faces.push_back(f);
    faces.push_back(f | (1U << n));
  }
  return SimplicialComplex(n + 1, faces);
}

}  // namespace gins
