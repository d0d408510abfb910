#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gins {

/// Exterior algebra E = Λ(V) or polynomial ring R = K[x_1..x_n].
enum class Ring { kExterior, kPolynomial };

std::string ring_name(Ring ring);  // "ext" | "poly"
Ring parse_ring(const std::string& text);

/// A monomial of either ring, stored as an exponent vector of length n.
/// Exterior monomials e_S have 0/1 exponents; the support is S.
/// Indices in the public interface are 1-based.
class Monomial {
 public:
  Monomial() = default;

  /// e_S for a strictly increasing support in [1, n].
  static Monomial exterior(int n, const std::vector<int>& support);
  /// x^a for an exponent list (n = exponents.size()).
  static Monomial polynomial(const std::vector<int>& exponents);
  static Monomial one(Ring ring, int n);

  Ring ring() const { return ring_; }
  int n() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int exponent(int i) const { return exps_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<std::uint8_t>& exponents() const { return exps_; }

  /// Indices with positive exponent, ascending.
  std::vector<int> support() const;
  /// Smallest / largest index in the support; 0 for the unit monomial.
  int min_index() const;
  int max_index() const;

  bool divides(const Monomial& other) const;
  /// Product; nullopt in the exterior ring when supports overlap.
  std::optional<Monomial> times(const Monomial& other) const;
  /// Multiply by x_i (or wedge with e_i); nullopt if i is already in an exterior support.
  std::optional<Monomial> times_variable(int i) const;
  /// Replace one factor x_from by x_to. Requires exponent(from) > 0.
  Monomial exchanged(int from, int to) const;
  /// Same exponents viewed in the polynomial ring (e_S -> x_S).
  Monomial as_polynomial() const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.ring_ <=> b.ring_; c != 0) return c;
    return a.exps_ <=> b.exps_;
  }

 private:
  Monomial(Ring ring, std::vector<std::uint8_t> exps);

  Ring ring_ = Ring::kPolynomial;
  int degree_ = 0;
  std::vector<std::uint8_t> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Parses "e{1,3,4}" (exterior, n from the caller) or "x1^2*x3" / "1" (polynomial).
Monomial parse_monomial(const std::string& text, Ring ring, int n);

/// Graded lexicographic comparison induced by x_1 > ... > x_n; used for canonical ordering.
std::strong_ordering lex_compare(const Monomial& u, const Monomial& v);

/// All monomials of degree d in the ring, in Lex-descending order.
std::vector<Monomial> all_monomials(Ring ring, int n, int degree);

std::uint64_t binomial(int n, int k);

/// Number of monomials of degree d in n variables of the ring.
std::uint64_t component_dimension(Ring ring, int n, int degree);

/// An ordered monomial basis of one graded component with index lookup.
class MonomialBasis {
 public:
  MonomialBasis() = default;
  explicit MonomialBasis(std::vector<Monomial> monomials);

  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  /// Position of m; throws InvalidInput if m is not in the basis.
  std::size_t index_of(const Monomial& m) const;
  std::optional<std::size_t> find(const Monomial& m) const;

 private:
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

}  // namespace gins
