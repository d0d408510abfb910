#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gins/complexes.hpp"
#include "gins/engine.hpp"
#include "gins/ideal.hpp"
#include "json.hpp"

namespace gins {

/// Entry k-1 holds the count for k = 1..n.
struct IndexProfile {
  std::vector<std::size_t> min_le;
  std::vector<std::size_t> max_le;
};

IndexProfile index_profile(const MonomialIdeal& ideal, int d);
IndexProfile index_profile(const MonomialSet& component);

/// |{u in the set : max(u) >= k}| and |{u : min(u) >= k}|.
std::size_t count_max_at_least(const MonomialSet& component, int k);
std::size_t count_min_at_least(const MonomialSet& component, int k);

/// Number of degree-deg(u) monomials of the ideal that are >= u under the order.
std::size_t m_count(const TermOrder& order, const MonomialIdeal& ideal, const Monomial& u);

/// Graded Betti numbers beta_{i,i+j} of an ideal, generators at i = 0.
class BettiTable {
 public:
  std::uint64_t get(int i, int j) const;
  void add(int i, int j, std::uint64_t value);
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }

  /// Rows i, columns j.
  std::string to_string() const;
  nlohmann::json to_json() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

enum class BettiFlavor { kStronglyStable, kSquarefreeStronglyStable };

/// Eliahou-Kervaire (polynomial strongly stable) or Aramova-Herzog-Hibi
/// (squarefree strongly stable) formula. Exterior inputs use their squarefree image.
BettiTable betti_stable(const MonomialIdeal& ideal, BettiFlavor flavor);

inline constexpr int kOracleMaxGenerators = 16;

/// Minimal Betti numbers of a polynomial monomial ideal from the Taylor complex:
/// for each lcm multidegree m, the strand of generator subsets with lcm m is a
/// chain complex over the field and beta_{i,m} is its homology at subsets of size i+1.
BettiTable resolution_oracle(const MonomialIdeal& ideal);

/// x_{i1} x_{i2} ... x_{ik} (i1 <= ... <= ik) -> x_{i1} x_{i2+1} ... x_{ik+k-1}.
Monomial alpha(const Monomial& u);
MonomialIdeal alpha(const MonomialIdeal& ideal);

struct ClosedForms {
  std::vector<std::int64_t> bipartite;    ///< max_{>=n+1-k}(Delta^e(K_{a,b})), k = 1..n
  std::vector<std::int64_t> two_cliques;  ///< min_{>=n+1-k}(Delta^e(K_a u K_b)), k = 1..n
  std::vector<std::int64_t> h;            ///< h_k, k = 1..n
  std::vector<std::int64_t> two_cliques_from_h;  ///< sum_{l<k} min(k-l, h_l)
};
ClosedForms closed_form_profiles(int a, int b);

/// Degree-2 faces of the shifted complex: monomials of degree 2 outside the ideal.
MonomialSet shifted_edges(const MonomialIdeal& gin);

/// Top generator degree of the certified revlex gin (the regularity of the ideal,
/// or of J* for an exterior ideal J).
template <class Field>
int regularity_from_gin(const Field& field, const MonomialIdeal& ideal, const GinOptions& options = {}) {
  return gin(field, TermOrder::revlex(), ideal, options).ideal.max_generator_degree();
}

struct ComplementIdentity {
  std::vector<std::int64_t> lhs;  ///< max_{>=n+1-k}(Delta^lex(G)), k = 1..n
  std::vector<std::int64_t> rhs;  ///< C(n,2) - C(n-k,2) - (f_1(complement) - min_{>=k+1}(Delta^e(complement)))
  bool holds() const { return lhs == rhs; }
};

template <class Field>
ComplementIdentity lex_rev_complement_identity(const Field& field, const Graph& g, const GinOptions& options = {}) {
  const int n = g.n();
  GinOptions opt = options;
  opt.degree_cap = 2;
  const Graph gbar = g.complement();
  const auto lex_faces = shifted_edges(gin(field, TermOrder::lex(), combinatorial_ideal(g, Ring::kExterior), opt).ideal);
  const auto rev_faces =
      shifted_edges(gin(field, TermOrder::revlex(), combinatorial_ideal(gbar, Ring::kExterior), opt).ideal);
  ComplementIdentity out;
  const auto c2 = [](std::int64_t x) { return x * (x - 1) / 2; };
  for (int k = 1; k <= n; ++k) {
    out.lhs.push_back(static_cast<std::int64_t>(count_max_at_least(lex_faces, n + 1 - k)));
    out.rhs.push_back(c2(n) - c2(n - k) -
                      (gbar.edge_count() - static_cast<std::int64_t>(count_min_at_least(rev_faces, k + 1))));
  }
  return out;
}

/// Rank of the stacked vectors (a_{1j} x_i + s a_{1i} x_j, ..., a_{mj} x_i + s a_{mi} x_j)
/// over the listed pairs {i,j}, with s = -1 (exterior) or +1 (polynomial).
template <class Field>
std::size_t hyperplane_rank(const CoordinateChange<Field>& phi, const std::vector<std::pair<int, int>>& pairs,
                            Ring ring, int m) {
  const Field& field = phi.field();
  const int n = phi.n();
  if (m < 0 || m > n) throw InvalidInput("hyperplane count out of range");
  if (pairs.empty() || m == 0) return 0;
  Matrix<Field> mat(0, static_cast<std::size_t>(m * n), field.zero());
  for (const auto& [i, j] : pairs) {
    std::vector<typename Field::Element> row(static_cast<std::size_t>(m * n), field.zero());
    for (int r = 1; r <= m; ++r) {
      const std::size_t base = static_cast<std::size_t>((r - 1) * n);
      auto& ci = row[base + static_cast<std::size_t>(i - 1)];
      ci = field.add(ci, phi.entry(r, j));
      auto& cj = row[base + static_cast<std::size_t>(j - 1)];
      cj = ring == Ring::kExterior ? field.sub(cj, phi.entry(r, i)) : field.add(cj, phi.entry(r, i));
    }
    mat.append_row(row);
  }
  return matrix_rank(field, std::move(mat));
}

/// dim span{rho_{phi,n+1-k}(e_i ^ e_j) : e_i ^ e_j not in W}; for generic phi this
/// equals |{e_i ^ e_j not in Gin_revlex(W) : max(i,j) >= k}|.
template <class Field>
std::size_t hyperplane_rank_oracle(const CoordinateChange<Field>& phi, const MonomialSet& w, int k) {
  if (w.ring() != Ring::kExterior || w.degree() != 2) throw InvalidInput("oracle expects a degree-2 exterior set");
  std::vector<std::pair<int, int>> pairs;
  const auto missing = w.complement();
  for (const auto& m : missing.members()) pairs.emplace_back(m.min_index(), m.max_index());
  return hyperplane_rank(phi, pairs, Ring::kExterior, w.n() + 1 - k);
}

}  // namespace gins
