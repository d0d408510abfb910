#include "gins/ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gins/error.hpp"

namespace gins {

namespace {

bool lex_descending(const Monomial& a, const Monomial& b) { return lex_compare(a, b) > 0; }

void check_shape(Ring ring, int n, const Monomial& m) {
  if (m.ring() != ring || m.n() != n) {
    throw InvalidInput("monomial " + m.to_string() + " does not belong to ring " + ring_name(ring) +
                       " with n=" + std::to_string(n));
  }
}

}  // namespace

MonomialSet::MonomialSet(Ring ring, int n, int degree, std::vector<Monomial> members)
    : ring_(ring), n_(n), degree_(degree), members_(std::move(members)) {
  for (const auto& m : members_) {
    check_shape(ring, n, m);
    if (m.degree() != degree) {
      throw InvalidInput("monomial " + m.to_string() + " is not of degree " + std::to_string(degree));
    }
  }
  std::sort(members_.begin(), members_.end(), lex_descending);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool MonomialSet::contains(const Monomial& m) const {
  return std::binary_search(members_.begin(), members_.end(), m, lex_descending);
}

MonomialSet MonomialSet::complement() const {
  std::vector<Monomial> rest;
  for (auto& m : all_monomials(ring_, n_, degree_)) {
    if (!contains(m)) rest.push_back(std::move(m));
  }
  return MonomialSet(ring_, n_, degree_, std::move(rest));
}

std::string MonomialSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ", ";
    s += members_[i].to_string();
  }
  return s + "}";
}

MonomialIdeal::MonomialIdeal(Ring ring, int n, std::vector<Monomial> generators) : ring_(ring), n_(n) {
  if (n < 0) throw InvalidInput("negative variable count");
  for (const auto& g : generators) check_shape(ring, n, g);
  std::sort(generators.begin(), generators.end(), lex_descending);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::stable_sort(generators.begin(), generators.end(),
                   [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  for (auto& g : generators) {
    const bool redundant = std::any_of(generators_.begin(), generators_.end(),
                                       [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) generators_.push_back(std::move(g));
  }
}

MonomialIdeal MonomialIdeal::from_components(Ring ring, int n, const std::map<int, MonomialSet>& components) {
  std::vector<Monomial> gens;
  for (const auto& [d, comp] : components) {
    for (const auto& m : comp.members()) gens.push_back(m);
  }
  return MonomialIdeal(ring, n, std::move(gens));
}

int MonomialIdeal::max_generator_degree() const {
  return generators_.empty() ? 0 : generators_.back().degree();
}

int MonomialIdeal::min_generator_degree() const {
  return generators_.empty() ? 0 : generators_.front().degree();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  check_shape(ring_, n_, m);
  return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialSet MonomialIdeal::degree_component(int d) const {
  std::vector<Monomial> members;
  if (!generators_.empty() && generators_.front().degree() <= d) {
    for (auto& m : all_monomials(ring_, n_, d)) {
      if (contains(m)) members.push_back(std::move(m));
    }
  }
  return MonomialSet(ring_, n_, d, std::move(members));
}

MonomialIdeal MonomialIdeal::truncated(int d) const {
  std::vector<Monomial> gens;
  for (const auto& g : generators_) {
    if (g.degree() <= d) gens.push_back(g);
  }
  return MonomialIdeal(ring_, n_, std::move(gens));
}

bool MonomialIdeal::equal_up_to(const MonomialIdeal& other, int d) const {
  if (ring_ != other.ring_ || n_ != other.n_) return false;
  return truncated(d) == other.truncated(d);
}

bool MonomialIdeal::contained_in_up_to(const MonomialIdeal& other, int d) const {
  for (const auto& g : generators_) {
    if (g.degree() <= d && !other.contains(g)) return false;
  }
  return true;
}

MonomialIdeal MonomialIdeal::squarefree_image() const {
  std::vector<Monomial> gens;
  for (const auto& g : generators_) gens.push_back(g.as_polynomial());
  return MonomialIdeal(Ring::kPolynomial, n_, std::move(gens));
}

std::string MonomialIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += generators_[i].to_string();
  }
  return s + ")";
}

std::string MonomialIdeal::serialize() const {
  std::ostringstream out;
  out << "ring=" << ring_name(ring_) << " n=" << n_ << '\n';
  for (const auto& g : generators_) out << g.to_string() << '\n';
  return out.str();
}

MonomialIdeal MonomialIdeal::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<Ring> ring;
  int n = -1;
  std::vector<Monomial> gens;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!ring) {
      std::istringstream header(line);
      std::string token;
      while (header >> token) {
        if (token.rfind("ring=", 0) == 0) {
          ring = parse_ring(token.substr(5));
        } else if (token.rfind("n=", 0) == 0) {
          try {
            n = std::stoi(token.substr(2));
          } catch (const std::logic_error&) {
            throw InvalidInput("bad n in ideal header: " + line);
          }
        } else {
          throw InvalidInput("unexpected token in ideal header: " + token);
        }
      }
      if (!ring || n < 0) throw InvalidInput("ideal file header must be 'ring=ext|poly n=<int>'");
      continue;
    }
    gens.push_back(parse_monomial(line, *ring, n));
  }
  if (!ring) throw InvalidInput("empty ideal file");
  return MonomialIdeal(*ring, n, std::move(gens));
}

std::optional<StabilityWitness> stability_violation(const MonomialIdeal& ideal, StabilityFlavor flavor) {
  const bool squarefree = ideal.ring() == Ring::kExterior || flavor == StabilityFlavor::kSquarefree;
  for (const auto& g : ideal.generators()) {
    for (int j : g.support()) {
      for (int i = j - 1; i >= 1; --i) {
        if (squarefree && g.exponent(i) > 0) continue;
        Monomial moved = g.exchanged(j, i);
        if (!ideal.contains(moved)) return StabilityWitness{g, std::move(moved)};
      }
    }
  }
  return std::nullopt;
}

bool is_strongly_stable(const MonomialSet& component) {
  const bool squarefree = component.ring() == Ring::kExterior;
  for (const auto& m : component.members()) {
    for (int j : m.support()) {
      for (int i = j - 1; i >= 1; --i) {
        if (squarefree && m.exponent(i) > 0) continue;
        if (!component.contains(m.exchanged(j, i))) return false;
      }
    }
  }
  return true;
}

}  // namespace gins
