#include "gins/invariants.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "gins/error.hpp"
#include "gins/matrix.hpp"

namespace gins {

IndexProfile index_profile(const MonomialSet& component) {
  const int n = component.n();
  IndexProfile p;
  p.min_le.assign(static_cast<std::size_t>(n), 0);
  p.max_le.assign(static_cast<std::size_t>(n), 0);
  for (const auto& u : component.members()) {
    for (int k = 1; k <= n; ++k) {
      if (u.min_index() <= k) ++p.min_le[static_cast<std::size_t>(k - 1)];
      if (u.max_index() <= k) ++p.max_le[static_cast<std::size_t>(k - 1)];
    }
  }
  return p;
}

IndexProfile index_profile(const MonomialIdeal& ideal, int d) { return index_profile(ideal.degree_component(d)); }

std::size_t count_max_at_least(const MonomialSet& component, int k) {
  return static_cast<std::size_t>(std::count_if(component.members().begin(), component.members().end(),
                                                [k](const Monomial& u) { return u.max_index() >= k; }));
}

std::size_t count_min_at_least(const MonomialSet& component, int k) {
  return static_cast<std::size_t>(std::count_if(component.members().begin(), component.members().end(),
                                                [k](const Monomial& u) { return u.min_index() >= k; }));
}

std::size_t m_count(const TermOrder& order, const MonomialIdeal& ideal, const Monomial& u) {
  std::size_t count = 0;
  const auto component = ideal.degree_component(u.degree());
  for (const auto& t : component.members()) {
    if (order.compare(t, u) >= 0) ++count;
  }
  return count;
}

std::uint64_t BettiTable::get(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t value) {
  if (value == 0) return;
  entries_[{i, j}] += value;
}

std::string BettiTable::to_string() const {
  if (entries_.empty()) return "(zero)\n";
  int max_i = 0, min_j = 1 << 30, max_j = 0;
  for (const auto& [key, v] : entries_) {
    max_i = std::max(max_i, key.first);
    min_j = std::min(min_j, key.second);
    max_j = std::max(max_j, key.second);
  }
  std::ostringstream out;
  out << "i\\j";
  for (int j = min_j; j <= max_j; ++j) out << '\t' << j;
  out << '\n';
  for (int i = 0; i <= max_i; ++i) {
    out << i;
    for (int j = min_j; j <= max_j; ++j) {
      const auto v = get(i, j);
      out << '\t' << (v == 0 ? std::string("-") : std::to_string(v));
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json BettiTable::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, v] : entries_) entries.push_back({key.first, key.second, v});
  return {{"entries", entries}, {"convention", "ideal-indexed"}};
}

BettiTable betti_stable(const MonomialIdeal& ideal, BettiFlavor flavor) {
  const MonomialIdeal poly = ideal.ring() == Ring::kExterior ? ideal.squarefree_image() : ideal;
  if (ideal.ring() == Ring::kExterior) flavor = BettiFlavor::kSquarefreeStronglyStable;
  const bool squarefree = flavor == BettiFlavor::kSquarefreeStronglyStable;
  if (squarefree) {
    for (const auto& g : poly.generators()) {
      if (g.degree() != static_cast<int>(g.support().size())) {
        throw InvalidInput("generator " + g.to_string() + " is not squarefree");
      }
    }
  }
  if (auto w = stability_violation(poly, squarefree ? StabilityFlavor::kSquarefree : StabilityFlavor::kAuto)) {
    throw InvalidInput("ideal is not strongly stable: generator " + w->monomial.to_string() + " exchanges to " +
                       w->exchanged.to_string());
  }
  BettiTable table;
  for (const auto& g : poly.generators()) {
    const int j = g.degree();
    const int top = squarefree ? g.max_index() - j : g.max_index() - 1;
    for (int i = 0; i <= top; ++i) table.add(i, j, binomial(top, i));
  }
  return table;
}

BettiTable resolution_oracle(const MonomialIdeal& ideal) {
  if (ideal.ring() != Ring::kPolynomial) throw InvalidInput("resolution oracle works in the polynomial ring");
  const auto& gens = ideal.generators();
  const int r = static_cast<int>(gens.size());
  if (r > kOracleMaxGenerators) {
    throw SizeLimitExceeded("resolution oracle is limited to " + std::to_string(kOracleMaxGenerators) + " generators");
  }
  const int n = ideal.n();
  // Group generator subsets by the lcm of their members.
  std::map<std::vector<std::uint8_t>, std::vector<std::uint32_t>> strands;
  for (std::uint32_t f = 1; f < (1U << r); ++f) {
    std::vector<std::uint8_t> lcm(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < r; ++k) {
      if (!(f & (1U << k))) continue;
      const auto& e = gens[static_cast<std::size_t>(k)].exponents();
      for (int v = 0; v < n; ++v) lcm[static_cast<std::size_t>(v)] = std::max(lcm[static_cast<std::size_t>(v)], e[static_cast<std::size_t>(v)]);
    }
    strands[lcm].push_back(f);
  }
  const PrimeField field;
  BettiTable table;
  for (const auto& [lcm, subsets] : strands) {
    int degree = 0;
    for (auto e : lcm) degree += e;
    // Chain groups by subset size; basis index within each size.
    std::map<int, std::vector<std::uint32_t>> by_size;
    for (auto f : subsets) by_size[std::popcount(f)].push_back(f);
    std::map<int, std::size_t> rank_from;  // rank of the differential leaving size s
    for (const auto& [s, basis] : by_size) {
      auto lower = by_size.find(s - 1);
      if (s == 1 || lower == by_size.end()) {
        rank_from[s] = 0;
        continue;
      }
      std::unordered_map<std::uint32_t, std::size_t> index;
      for (std::size_t c = 0; c < lower->second.size(); ++c) index[lower->second[c]] = c;
      Matrix<PrimeField> d(0, lower->second.size(), 0);
      for (auto f : basis) {
        std::vector<PrimeField::Element> row(lower->second.size(), 0);
        int position = 0;
        for (int k = 0; k < r; ++k) {
          if (!(f & (1U << k))) continue;
          if (auto it = index.find(f & ~(1U << k)); it != index.end()) {
            row[it->second] = position % 2 == 0 ? field.one() : field.neg(field.one());
          }
          ++position;
        }
        d.append_row(row);
      }
      rank_from[s] = matrix_rank(field, std::move(d));
    }
    for (const auto& [s, basis] : by_size) {
      const auto up = rank_from.count(s + 1) ? rank_from[s + 1] : 0;
      const std::uint64_t homology = basis.size() - rank_from[s] - up;
      const int i = s - 1;
      table.add(i, degree - i, homology);
    }
  }
  return table;
}

Monomial alpha(const Monomial& u) {
  if (u.ring() != Ring::kPolynomial) throw InvalidInput("alpha acts on polynomial monomials");
  std::vector<int> indices;
  for (int v = 1; v <= u.n(); ++v) {
    for (int e = 0; e < u.exponent(v); ++e) indices.push_back(v);
  }
  std::vector<int> exps(static_cast<std::size_t>(u.n()), 0);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const int target = indices[k] + static_cast<int>(k);
    if (target > u.n()) {
      throw InvalidInput("alpha(" + u.to_string() + ") needs more than " + std::to_string(u.n()) + " variables");
    }
    exps[static_cast<std::size_t>(target - 1)] = 1;
  }
  return Monomial::polynomial(exps);
}

MonomialIdeal alpha(const MonomialIdeal& ideal) {
  if (auto w = stability_violation(ideal)) {
    throw InvalidInput("alpha needs a strongly stable ideal; " + w->monomial.to_string() + " exchanges to " +
                       w->exchanged.to_string());
  }
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(alpha(g));
  return MonomialIdeal(Ring::kPolynomial, ideal.n(), std::move(gens));
}

ClosedForms closed_form_profiles(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a < 1) throw InvalidInput("closed forms need a, b >= 1");
  const int n = a + b;
  const auto c2 = [](std::int64_t x) { return x * (x - 1) / 2; };
  const std::int64_t f1 = c2(a) + c2(b);
  ClosedForms out;
  for (int k = 1; k <= n; ++k) {
    out.bipartite.push_back(k <= a ? std::int64_t{k} * n - std::int64_t{k} * k : std::int64_t{a} * b);
    out.two_cliques.push_back(k <= b ? c2(k) : f1 - c2(n - k));
    out.h.push_back(k <= a ? (a - k) + (b - k) : (k <= b ? b - k : 0));
  }
  for (int k = 1; k <= n; ++k) {
    std::int64_t sum = 0;
    for (int l = 1; l < k; ++l) sum += std::min<std::int64_t>(k - l, out.h[static_cast<std::size_t>(l - 1)]);
    out.two_cliques_from_h.push_back(sum);
  }
  return out;
}

MonomialSet shifted_edges(const MonomialIdeal& gin) {
  return gin.degree_component(2).complement();
}

}  // namespace gins
