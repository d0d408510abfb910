#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "gins/coordinate_change.hpp"
#include "gins/error.hpp"
#include "gins/field.hpp"
#include "gins/ideal.hpp"
#include "gins/matrix.hpp"
#include "gins/monomial.hpp"
#include "gins/subspace.hpp"
#include "gins/term_order.hpp"
#include "json.hpp"

namespace gins {

struct GinOptions {
  int trials = 3;
  std::uint64_t seed = 0;
  /// Exterior default: n. Polynomial default: adaptive (see gin_all).
  std::optional<int> degree_cap;
  /// Draw upper-triangular instead of dense random matrices.
  bool upper_triangular = false;
  /// Hard ceiling for the adaptive polynomial cap.
  int max_degree_cap = 16;
  bool escalate = true;
  int max_exterior_n = kMaxExteriorVariables;
};

struct GinCertificate {
  std::string order;
  std::string field;
  int degree_cap = 0;
  int trials = 0;
  std::vector<bool> agreement;
  bool strongly_stable = false;
  bool hilbert_match = false;
  std::vector<std::uint64_t> seeds;
  int escalations = 0;

  bool accepted() const {
    return strongly_stable && hilbert_match &&
           std::all_of(agreement.begin(), agreement.end(), [](bool b) { return b; });
  }

  nlohmann::json to_json() const {
    return nlohmann::json{{"order", order},
                          {"field", field},
                          {"degree_cap", degree_cap},
                          {"trials", trials},
                          {"agreement", agreement},
                          {"strongly_stable", strongly_stable},
                          {"hilbert_match", hilbert_match},
                          {"seeds", seeds},
                          {"escalations", escalations},
                          {"accepted", accepted()}};
  }
};

struct GinResult {
  MonomialIdeal ideal;
  GinCertificate certificate;
};

struct ComponentGin {
  MonomialSet component;
  GinCertificate certificate;
};

/// Variables ordered from largest to smallest under the order.
inline std::vector<int> variable_ranking(const TermOrder& order, Ring ring, int n) {
  auto vars = all_monomials(ring, n, 1);
  order.sort_descending(vars);
  std::vector<int> ranking;
  for (const auto& v : vars) ranking.push_back(v.max_index());
  return ranking;
}

/// Renames variable i to image[i-1].
inline Monomial relabel_monomial(const Monomial& m, const std::vector<int>& image) {
  std::vector<int> exps(static_cast<std::size_t>(m.n()), 0);
  for (int i = 1; i <= m.n(); ++i) exps[static_cast<std::size_t>(image[static_cast<std::size_t>(i - 1)] - 1)] = m.exponent(i);
  if (m.ring() == Ring::kPolynomial) return Monomial::polynomial(exps);
  std::vector<int> support;
  for (int i = 1; i <= m.n(); ++i) {
    if (exps[static_cast<std::size_t>(i - 1)] > 0) support.push_back(i);
  }
  return Monomial::exterior(m.n(), support);
}

inline MonomialIdeal relabel_ideal(const MonomialIdeal& ideal, const std::vector<int>& image) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(relabel_monomial(g, image));
  return MonomialIdeal(ideal.ring(), ideal.n(), std::move(gens));
}

/// Strong stability where "smaller index" means "larger variable under the order".
/// Generic initial spaces are fixed by the Borel group of that ranking.
inline bool is_stable_for_order(const MonomialSet& component, const TermOrder& order) {
  const auto ranking = variable_ranking(order, component.ring(), component.n());
  bool identity = true;
  for (std::size_t k = 0; k < ranking.size(); ++k) identity = identity && ranking[k] == static_cast<int>(k) + 1;
  if (identity) return is_strongly_stable(component);
  std::vector<int> image(ranking.size());
  for (std::size_t k = 0; k < ranking.size(); ++k) image[static_cast<std::size_t>(ranking[k] - 1)] = static_cast<int>(k) + 1;
  std::vector<Monomial> moved;
  for (const auto& m : component.members()) moved.push_back(relabel_monomial(m, image));
  return is_strongly_stable(MonomialSet(component.ring(), component.n(), component.degree(), std::move(moved)));
}

/// Spanning data of a graded family of subspaces, one entry per degree.
/// Each degree holds either monomials or explicit rows over the Lex-descending basis.
template <class Field>
struct GradedSource {
  using Element = typename Field::Element;
  Ring ring = Ring::kExterior;
  int n = 0;
  std::vector<int> degrees;
  std::map<int, std::vector<Monomial>> monomials;
  std::map<int, std::vector<std::vector<Element>>> rows;

  static GradedSource from_ideal(const MonomialIdeal& ideal, int cap) {
    GradedSource s;
    s.ring = ideal.ring();
    s.n = ideal.n();
    if (s.ring == Ring::kExterior) cap = std::min(cap, s.n);
    for (int d = 0; d <= cap; ++d) {
      s.degrees.push_back(d);
      s.monomials[d] = ideal.degree_component(d).members();
    }
    return s;
  }

  static GradedSource from_component(const MonomialSet& w) {
    GradedSource s;
    s.ring = w.ring();
    s.n = w.n();
    s.degrees = {w.degree()};
    s.monomials[w.degree()] = w.members();
    return s;
  }
};

namespace detail {

/// Columns of one degree sorted descending under an order, with their
/// positions in the Lex-descending basis.
struct ColumnPlan {
  std::vector<Monomial> ordered;
  std::vector<std::size_t> to_canonical;
};

inline ColumnPlan make_plan(const TermOrder& order, Ring ring, int n, int d) {
  ColumnPlan plan;
  const MonomialBasis canonical(all_monomials(ring, n, d));
  plan.ordered = canonical.monomials();
  order.sort_descending(plan.ordered);
  for (const auto& m : plan.ordered) plan.to_canonical.push_back(canonical.index_of(m));
  return plan;
}

template <class Field>
std::vector<Monomial> pivots_of(const Field& field, const std::vector<std::vector<typename Field::Element>>& images,
                                const ColumnPlan& plan) {
  Matrix<Field> m(images.size(), plan.ordered.size(), field.zero());
  for (std::size_t r = 0; r < images.size(); ++r) {
    for (std::size_t c = 0; c < plan.ordered.size(); ++c) m(r, c) = images[r][plan.to_canonical[c]];
  }
  const Echelon e = row_reduce(field, m);
  std::vector<Monomial> pivots;
  for (auto c : e.pivot_columns) pivots.push_back(plan.ordered[c]);
  return pivots;
}

/// Initial spaces of phi applied to every component of the source, one map per order.
template <class Field>
std::vector<std::map<int, MonomialSet>> initial_components(const CoordinateChange<Field>& phi,
                                                           const GradedSource<Field>& source,
                                                           const std::vector<std::map<int, ColumnPlan>>& plans,
                                                           int max_exterior_n) {
  using Element = typename Field::Element;
  const Field& field = phi.field();
  ChangeAction<Field> action(phi, max_exterior_n);
  std::vector<std::map<int, MonomialSet>> out(plans.size());
  for (int d : source.degrees) {
    const auto dim = component_dimension(source.ring, source.n, d);
    std::vector<std::vector<Element>> images;
    bool full = false;
    if (auto it = source.monomials.find(d); it != source.monomials.end()) {
      full = it->second.size() == dim && dim > 0;
      if (!full) {
        for (const auto& m : it->second) images.push_back(action.canonical_image(m));
      }
    } else if (auto jt = source.rows.find(d); jt != source.rows.end()) {
      const auto& basis = action.canonical_basis(source.ring, d);
      for (const auto& v : jt->second) {
        std::vector<Element> img(basis.size(), field.zero());
        for (std::size_t k = 0; k < v.size(); ++k) {
          if (field.is_zero(v[k])) continue;
          const auto& part = action.canonical_image(basis[k]);
          for (std::size_t c = 0; c < part.size(); ++c) {
            if (!field.is_zero(part[c])) img[c] = field.add(img[c], field.mul(v[k], part[c]));
          }
        }
        images.push_back(std::move(img));
      }
    }
    for (std::size_t o = 0; o < plans.size(); ++o) {
      std::vector<Monomial> pivots;
      if (full) {
        pivots = all_monomials(source.ring, source.n, d);
      } else if (!images.empty()) {
        pivots = pivots_of(field, images, plans[o].at(d));
      }
      out[o].emplace(d, MonomialSet(source.ring, source.n, d, std::move(pivots)));
    }
  }
  return out;
}

template <class Field>
std::map<int, std::size_t> source_dimensions(const Field& field, const GradedSource<Field>& source) {
  std::map<int, std::size_t> dims;
  for (int d : source.degrees) {
    if (auto it = source.monomials.find(d); it != source.monomials.end()) {
      dims[d] = it->second.size();
    } else if (auto jt = source.rows.find(d); jt != source.rows.end() && !jt->second.empty()) {
      Matrix<Field> m(0, jt->second.front().size(), field.zero());
      for (const auto& r : jt->second) m.append_row(r);
      dims[d] = matrix_rank(field, std::move(m));
    } else {
      dims[d] = 0;
    }
  }
  return dims;
}

inline std::string render_components(const std::map<int, MonomialSet>& comps) {
  std::string s;
  for (const auto& [d, c] : comps) {
    if (c.empty()) continue;
    if (!s.empty()) s += " ";
    s += std::to_string(d) + ":" + c.to_string();
  }
  return s.empty() ? "{}" : s;
}

/// The next prime below p.
inline std::uint64_t previous_prime(std::uint64_t p) {
  for (std::uint64_t q = p - 1; q > 2; --q) {
    if (is_prime(q)) return q;
  }
  return 2;
}

}  // namespace detail

/// Generic initial spaces of every component of the source under each order,
/// with certification and escalation (more trials, then a different large prime).
template <class Field>
std::pair<std::vector<std::map<int, MonomialSet>>, std::vector<GinCertificate>> gin_components(
    const Field& base_field, const std::vector<TermOrder>& orders, const GradedSource<Field>& source,
    const GinOptions& options) {
  if (options.trials < 2) throw InvalidInput("gin needs at least 2 trials");
  std::vector<std::map<int, detail::ColumnPlan>> plans(orders.size());
  for (std::size_t o = 0; o < orders.size(); ++o) {
    for (int d : source.degrees) plans[o].emplace(d, detail::make_plan(orders[o], source.ring, source.n, d));
  }
  const auto dims = detail::source_dimensions(base_field, source);
  const int cap = source.degrees.empty() ? 0 : *std::max_element(source.degrees.begin(), source.degrees.end());

  std::vector<std::map<int, MonomialSet>> results(orders.size());
  std::vector<GinCertificate> certs(orders.size());
  std::vector<std::vector<std::string>> candidates(orders.size());
  std::vector<std::size_t> pending(orders.size());
  for (std::size_t o = 0; o < orders.size(); ++o) pending[o] = o;

  Field field = base_field;
  int trials = options.trials;
  std::uint64_t stream = 0;
  for (int round = 0; !pending.empty(); ++round) {
    std::vector<std::map<int, detail::ColumnPlan>> sub_plans;
    for (auto o : pending) sub_plans.push_back(plans[o]);
    std::vector<std::vector<std::map<int, MonomialSet>>> per_trial;  // [trial][pending index]
    std::vector<std::uint64_t> seeds;
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t seed = mix_seed(options.seed, stream++);
      seeds.push_back(seed);
      Rng rng(seed);
      const auto phi = options.upper_triangular ? CoordinateChange<Field>::random_upper_triangular(field, source.n, rng)
                                                : CoordinateChange<Field>::random_dense(field, source.n, rng);
      per_trial.push_back(detail::initial_components(phi, source, sub_plans, options.max_exterior_n));
    }
    std::vector<std::size_t> failed;
    for (std::size_t p = 0; p < pending.size(); ++p) {
      const auto o = pending[p];
      GinCertificate cert;
      cert.order = orders[o].to_string();
      cert.field = field.name();
      cert.degree_cap = cap;
      cert.trials = trials;
      cert.seeds = seeds;
      cert.escalations = round;
      const auto& first = per_trial[0][p];
      for (int t = 0; t < trials; ++t) cert.agreement.push_back(per_trial[static_cast<std::size_t>(t)][p] == first);
      cert.hilbert_match = true;
      cert.strongly_stable = true;
      for (const auto& [d, comp] : first) {
        cert.hilbert_match = cert.hilbert_match && comp.size() == dims.at(d);
        cert.strongly_stable = cert.strongly_stable && is_stable_for_order(comp, orders[o]);
      }
      certs[o] = cert;
      results[o] = first;
      if (!cert.accepted()) {
        for (int t = 0; t < trials; ++t) {
          auto text = detail::render_components(per_trial[static_cast<std::size_t>(t)][p]);
          if (std::find(candidates[o].begin(), candidates[o].end(), text) == candidates[o].end()) {
            candidates[o].push_back(std::move(text));
          }
        }
        failed.push_back(o);
      }
    }
    pending = failed;
    if (pending.empty()) break;
    bool can_switch = false;
    if constexpr (std::is_same_v<Field, PrimeField>) can_switch = field.modulus() > (1ULL << 16);
    if (!options.escalate || round >= 2 || (round == 1 && !can_switch)) {
      const auto o = pending.front();
      throw CertificationFailed("generic initial ideal under " + orders[o].to_string() + " over " + field.name() +
                                    " could not be certified",
                                candidates[o]);
    }
    if (round == 0) {
      trials *= 2;
    } else {
      if constexpr (std::is_same_v<Field, PrimeField>) field = PrimeField(detail::previous_prime(field.modulus()));
    }
  }
  return {results, certs};
}

/// Certified generic initial ideals of I under several orders sharing random
/// trials. Exterior cap defaults to n. Polynomial cap defaults to an adaptive
/// value: start at (max generator degree of I) + 1 and raise it until it
/// exceeds the top generator degree of every result.
template <class Field>
std::vector<GinResult> gin_all(const Field& field, const std::vector<TermOrder>& orders, const MonomialIdeal& ideal,
                               const GinOptions& options = {}) {
  const bool adaptive = ideal.ring() == Ring::kPolynomial && !options.degree_cap;
  int cap = options.degree_cap.value_or(ideal.ring() == Ring::kExterior ? ideal.n()
                                                                         : ideal.max_generator_degree() + 1);
  if (ideal.ring() == Ring::kExterior) cap = std::min(cap, ideal.n());
  if (cap > options.max_degree_cap) throw SizeLimitExceeded("degree cap " + std::to_string(cap) + " exceeds limit");
  while (true) {
    const auto source = GradedSource<Field>::from_ideal(ideal, cap);
    auto [comps, certs] = gin_components(field, orders, source, options);
    std::vector<GinResult> out;
    int top = 0;
    for (std::size_t o = 0; o < orders.size(); ++o) {
      auto gin = MonomialIdeal::from_components(ideal.ring(), ideal.n(), comps[o]);
      top = std::max(top, gin.max_generator_degree());
      out.push_back(GinResult{std::move(gin), certs[o]});
    }
    if (!adaptive || top + 1 <= cap) return out;
    cap = top + 1;
    if (cap > options.max_degree_cap) {
      throw SizeLimitExceeded("adaptive degree cap would exceed " + std::to_string(options.max_degree_cap));
    }
  }
}

template <class Field>
GinResult gin(const Field& field, const TermOrder& order, const MonomialIdeal& ideal, const GinOptions& options = {}) {
  return gin_all(field, std::vector<TermOrder>{order}, ideal, options).front();
}

/// Generic initial space of a single monomial-spanned component.
template <class Field>
ComponentGin gin_component(const Field& field, const TermOrder& order, const MonomialSet& w,
                           const GinOptions& options = {}) {
  auto [comps, certs] = gin_components(field, std::vector<TermOrder>{order}, GradedSource<Field>::from_component(w), options);
  return ComponentGin{comps.front().at(w.degree()), certs.front()};
}

/// Pivot monomials of W with columns descending under the order.
template <class Field>
MonomialSet initial_space(const TermOrder& order, Subspace<Field> w) {
  const auto& cols = w.columns();
  for (std::size_t i = 1; i < cols.size(); ++i) {
    if (!order.greater(cols[i - 1], cols[i])) {
      throw InvalidInput("subspace columns are not descending under " + order.to_string());
    }
  }
  auto reduction = w.reduce();
  return MonomialSet(w.ring(), w.n(), w.degree(), std::move(reduction.pivots));
}

/// in_order(phi(I)) with every component up to the cap computed exactly.
template <class Field>
MonomialIdeal truncated_initial_ideal(const TermOrder& order, const CoordinateChange<Field>& phi,
                                      const MonomialIdeal& ideal, int cap,
                                      int max_exterior_n = kMaxExteriorVariables) {
  if (phi.n() != ideal.n()) throw InvalidInput("coordinate change and ideal have different n");
  const auto source = GradedSource<Field>::from_ideal(ideal, cap);
  std::vector<std::map<int, detail::ColumnPlan>> plans(1);
  for (int d : source.degrees) plans[0].emplace(d, detail::make_plan(order, source.ring, source.n, d));
  auto comps = detail::initial_components(phi, source, plans, max_exterior_n);
  return MonomialIdeal::from_components(ideal.ring(), ideal.n(), comps.front());
}

/// Generic initial ideal of the graded family phi0(I_d), d <= cap, for a fixed
/// invertible phi0. Used to check invariance under pre-composition.
template <class Field>
std::pair<MonomialIdeal, GinCertificate> gin_of_transformed(const Field& field, const TermOrder& order,
                                                            const CoordinateChange<Field>& phi0,
                                                            const MonomialIdeal& ideal, int cap,
                                                            const GinOptions& options = {}) {
  GradedSource<Field> source;
  source.ring = ideal.ring();
  source.n = ideal.n();
  if (source.ring == Ring::kExterior) cap = std::min(cap, source.n);
  ChangeAction<Field> action(phi0, options.max_exterior_n);
  for (int d = 0; d <= cap; ++d) {
    source.degrees.push_back(d);
    auto& rows = source.rows[d];
    const auto component = ideal.degree_component(d);
    for (const auto& m : component.members()) rows.push_back(action.canonical_image(m));
  }
  auto [comps, certs] = gin_components(field, std::vector<TermOrder>{order}, source, options);
  return {MonomialIdeal::from_components(ideal.ring(), ideal.n(), comps.front()), certs.front()};
}

using ShiftPair = std::pair<int, int>;

/// Left fold of truncated initial ideals over the elementary changes phi_{a,b}.
template <class Field>
MonomialIdeal combinatorial_shift(const Field& field, const TermOrder& order, const MonomialIdeal& ideal,
                                  const std::vector<ShiftPair>& pairs, int cap) {
  MonomialIdeal current = ideal.truncated(cap);
  for (const auto& [a, b] : pairs) {
    const auto phi = CoordinateChange<Field>::elementary(field, ideal.n(), a, b);
    current = truncated_initial_ideal(order, phi, current, cap);
  }
  return current;
}

struct TransWitness {
  MonomialIdeal ideal;
  /// Vertex relabeling applied before shifting (identity when relabelings are off).
  std::vector<int> relabeling;
  std::vector<ShiftPair> pairs;
};

struct TransOptions {
  /// Number of non-stable states expanded.
  std::size_t budget = 50;
  int degree_cap = 2;
  TermOrder order = TermOrder::lex();
  /// Also start from every vertex relabeling of the ideal.
  bool relabelings = false;
  /// Stop once this many distinct components of degree `stop_degree` are
  /// found (0 searches the whole budget).
  std::size_t stop_after = 0;
  int stop_degree = 2;
};

struct TransSearch {
  std::vector<TransWitness> witnesses;
  std::size_t expanded = 0;
  bool exhausted = false;
};

/// Breadth-first search for strongly stable ideals reachable by combinatorial
/// shifting. Pairs (a,b) are tried in lexicographic order and states are
/// deduplicated by their generator list, so the result is deterministic.
template <class Field>
TransSearch trans_witnesses(const Field& field, const MonomialIdeal& ideal, const TransOptions& options = {}) {
  struct State {
    MonomialIdeal ideal;
    std::vector<int> relabeling;
    std::vector<ShiftPair> pairs;
  };
  const int n = ideal.n();
  TransSearch out;
  std::set<std::vector<Monomial>> seen;
  std::set<std::vector<Monomial>> components;
  std::deque<State> queue;
  auto done = [&] { return options.stop_after > 0 && components.size() >= options.stop_after; };
  auto visit = [&](State s) {
    if (done() || !seen.insert(s.ideal.generators()).second) return;
    if (is_strongly_stable(s.ideal)) {
      components.insert(s.ideal.degree_component(options.stop_degree).members());
      out.witnesses.push_back(TransWitness{std::move(s.ideal), std::move(s.relabeling), std::move(s.pairs)});
    } else {
      queue.push_back(std::move(s));
    }
  };
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  const MonomialIdeal start = ideal.truncated(options.degree_cap);
  do {
    visit(State{relabel_ideal(start, perm), perm, {}});
  } while (options.relabelings && std::next_permutation(perm.begin(), perm.end()));

  while (!queue.empty() && out.expanded < options.budget && !done()) {
    State s = std::move(queue.front());
    queue.pop_front();
    ++out.expanded;
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        auto next = combinatorial_shift(field, options.order, s.ideal, {{a, b}}, options.degree_cap);
        auto pairs = s.pairs;
        pairs.emplace_back(a, b);
        visit(State{std::move(next), s.relabeling, std::move(pairs)});
      }
    }
  }
  out.exhausted = queue.empty();
  return out;
}

/// Complement of the generic initial space of span(W) in the full degree-2
/// component. With verify, the dual side gin under the inverse order of the
/// complement is computed too and a mismatch throws DualityViolation.
template <class Field>
MonomialSet complement_dual(const Field& field, const TermOrder& order, const MonomialSet& w,
                            const GinOptions& options = {}, bool verify = true) {
  const auto direct = gin_component(field, order, w, options).component.complement();
  if (verify) {
    GinOptions dual_options = options;
    dual_options.seed = mix_seed(options.seed, 0xD0A1);
    const auto dual = gin_component(field, TermOrder::inverse(order), w.complement(), dual_options).component;
    if (!(dual == direct)) {
      throw DualityViolation("complement of gin under " + order.to_string() + " is " + direct.to_string() +
                             " but gin of the complement under the inverse order is " + dual.to_string());
    }
  }
  return direct;
}

/// Runs a callable with the concrete field held by a FieldSpec.
template <class F>
decltype(auto) with_field(const FieldSpec& spec, F&& f) {
  return std::visit([&](const auto& field) -> decltype(auto) { return f(field); }, spec);
}

}  // namespace gins
