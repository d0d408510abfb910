#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gins/monomial.hpp"

namespace gins {

/// A set of monomials of one degree in one ring; the basis of a
/// monomial-spanned subspace of a graded component. Stored Lex-descending.
class MonomialSet {
 public:
  MonomialSet(Ring ring, int n, int degree, std::vector<Monomial> members = {});

  Ring ring() const { return ring_; }
  int n() const { return n_; }
  int degree() const { return degree_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Monomial>& members() const { return members_; }
  bool contains(const Monomial& m) const;

  /// All degree-d monomials not in this set.
  MonomialSet complement() const;

  std::string to_string() const;

  friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

 private:
  Ring ring_;
  int n_;
  int degree_;
  std::vector<Monomial> members_;
};

/// A monomial ideal given by its minimal generators, kept sorted by
/// (degree ascending, Lex descending). In the exterior ring divisibility is
/// support containment.
class MonomialIdeal {
 public:
  MonomialIdeal(Ring ring, int n, std::vector<Monomial> generators = {});

  /// The ideal whose degree-d part contains the given component for each listed d.
  /// Components must be closed under multiplication into the next listed degree
  /// for the result to reproduce them exactly.
  static MonomialIdeal from_components(Ring ring, int n, const std::map<int, MonomialSet>& components);

  Ring ring() const { return ring_; }
  int n() const { return n_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  /// 0 for the zero ideal.
  int max_generator_degree() const;
  int min_generator_degree() const;

  bool contains(const Monomial& m) const;
  MonomialSet degree_component(int d) const;
  std::size_t hilbert(int d) const { return degree_component(d).size(); }

  /// Generators of degree <= d.
  MonomialIdeal truncated(int d) const;
  /// Componentwise equality in degrees 0..d.
  bool equal_up_to(const MonomialIdeal& other, int d) const;
  /// Componentwise inclusion in degrees 0..d.
  bool contained_in_up_to(const MonomialIdeal& other, int d) const;
  /// Exterior ideal J -> squarefree polynomial ideal J*.
  MonomialIdeal squarefree_image() const;

  std::string to_string() const;
  /// File format: header "ring=ext|poly n=<int>" then one generator per line.
  std::string serialize() const;
  static MonomialIdeal parse(const std::string& text);

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  Ring ring_;
  int n_;
  std::vector<Monomial> generators_;
};

/// How strong stability is tested.
///   kAuto        exterior rule for exterior ideals, polynomial rule otherwise
///   kSquarefree  squarefree rule for squarefree polynomial ideals: the
///                exchanged-in index must be absent from the monomial
enum class StabilityFlavor { kAuto, kSquarefree };

struct StabilityWitness {
  Monomial monomial;   ///< a generator of the ideal
  Monomial exchanged;  ///< an index-decreasing exchange of it that is not in the ideal
};

std::optional<StabilityWitness> stability_violation(const MonomialIdeal& ideal,
                                                    StabilityFlavor flavor = StabilityFlavor::kAuto);
inline bool is_strongly_stable(const MonomialIdeal& ideal, StabilityFlavor flavor = StabilityFlavor::kAuto) {
  return !stability_violation(ideal, flavor).has_value();
}

/// Strong stability of a single degree component (closure under index-decreasing exchanges).
bool is_strongly_stable(const MonomialSet& component);

}  // namespace gins
