#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "gins/error.hpp"
#include "gins/field.hpp"
#include "gins/matrix.hpp"
#include "gins/monomial.hpp"

namespace gins {

enum class ChangeKind { kIdentity, kElementary, kPermutation, kRandomDense, kRandomUpperTriangular, kGeneral };

inline std::string change_kind_name(ChangeKind kind) {
  switch (kind) {
    case ChangeKind::kIdentity: return "identity";
    case ChangeKind::kElementary: return "elementary";
    case ChangeKind::kPermutation: return "permutation";
    case ChangeKind::kRandomDense: return "random-dense";
    case ChangeKind::kRandomUpperTriangular: return "random-upper-triangular";
    case ChangeKind::kGeneral: return "general";
  }
  return "general";
}

/// Largest n for which exterior compound matrices are built.
inline constexpr int kMaxExteriorVariables = 12;

/// An invertible linear change of coordinates phi = (a_ij), acting by
/// phi(e_j) = sum_i a_ij e_i (and likewise on x_j). Indices are 1-based.
template <class Field>
class CoordinateChange {
 public:
  using Element = typename Field::Element;

  static CoordinateChange identity(const Field& field, int n) {
    Matrix<Field> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), field.zero());
    for (int i = 0; i < n; ++i) m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = field.one();
    return CoordinateChange(field, std::move(m), ChangeKind::kIdentity);
  }

  /// e_b -> e_a + e_b, all other basis vectors fixed; requires a < b.
  static CoordinateChange elementary(const Field& field, int n, int a, int b) {
    if (!(1 <= a && a < b && b <= n)) {
      throw InvalidInput("elementary change needs 1 <= a < b <= n, got (" + std::to_string(a) + "," +
                         std::to_string(b) + ")");
    }
    auto phi = identity(field, n);
    phi.matrix_(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) = field.one();
    phi.kind_ = ChangeKind::kElementary;
    return phi;
  }

  /// e_i -> e_{image[i-1]}; image must be a permutation of 1..n.
  static CoordinateChange permutation(const Field& field, const std::vector<int>& image) {
    const int n = static_cast<int>(image.size());
    Matrix<Field> m(image.size(), image.size(), field.zero());
    std::vector<bool> seen(image.size(), false);
    for (int i = 0; i < n; ++i) {
      const int t = image[static_cast<std::size_t>(i)];
      if (t < 1 || t > n || seen[static_cast<std::size_t>(t - 1)]) throw InvalidInput("not a permutation");
      seen[static_cast<std::size_t>(t - 1)] = true;
      m(static_cast<std::size_t>(t - 1), static_cast<std::size_t>(i)) = field.one();
    }
    return CoordinateChange(field, std::move(m), ChangeKind::kPermutation);
  }

  /// Entries uniform over the field (rational mode: integers in [-10^6, 10^6]);
  /// redrawn until invertible.
  static CoordinateChange random_dense(const Field& field, int n, Rng& rng) {
    return random(field, n, rng, false);
  }

  /// a_ij = 0 for i > j, nonzero diagonal.
  static CoordinateChange random_upper_triangular(const Field& field, int n, Rng& rng) {
    return random(field, n, rng, true);
  }

  static CoordinateChange from_matrix(const Field& field, Matrix<Field> m) {
    return CoordinateChange(field, std::move(m), ChangeKind::kGeneral);
  }

  int n() const { return static_cast<int>(matrix_.rows()); }
  ChangeKind kind() const { return kind_; }
  const Field& field() const { return field_; }
  const Matrix<Field>& matrix() const { return matrix_; }
  /// a_ij, 1-based.
  const Element& entry(int i, int j) const {
    return matrix_(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
  }

 private:
  CoordinateChange(const Field& field, Matrix<Field> m, ChangeKind kind)
      : field_(field), matrix_(std::move(m)), kind_(kind) {
    if (matrix_.rows() != matrix_.cols()) throw InvalidInput("coordinate change must be square");
    if (matrix_rank(field_, matrix_) != matrix_.rows()) throw InvalidInput("coordinate change is singular");
  }

  static CoordinateChange random(const Field& field, int n, Rng& rng, bool upper) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      Matrix<Field> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), field.zero());
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (upper && i > j) continue;
          m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = field.random(rng);
        }
      }
      if (matrix_rank(field, m) == static_cast<std::size_t>(n)) {
        return CoordinateChange(field, std::move(m),
                                upper ? ChangeKind::kRandomUpperTriangular : ChangeKind::kRandomDense);
      }
    }
    throw InvalidInput("could not draw an invertible random matrix over " + field.name());
  }

  Field field_;
  Matrix<Field> matrix_;
  ChangeKind kind_;
};

/// Images of monomials under a fixed coordinate change, with per-degree caches.
/// Exterior images use the degree-d compound matrix (all d x d minors, built by
/// expansion along the last column from the degree d-1 minors); polynomial
/// images multiply out the product of linear forms.
template <class Field>
class ChangeAction {
 public:
  using Element = typename Field::Element;

  /// Keeps a reference to phi, which must outlive the action.
  explicit ChangeAction(const CoordinateChange<Field>& phi, int max_exterior_n = kMaxExteriorVariables)
      : phi_(phi), field_(phi.field()), max_exterior_n_(max_exterior_n) {}

  /// Coefficients of phi(m) over the given basis of deg(m) monomials.
  std::vector<Element> image(const Monomial& m, const MonomialBasis& basis) {
    if (m.n() != phi_.n()) throw InvalidInput("monomial and coordinate change have different n");
    const auto& canonical = canonical_image(m);
    const auto& cbasis = canonical_basis(m.ring(), m.degree());
    std::vector<Element> row(basis.size(), field_.zero());
    if (basis.size() != cbasis.size()) throw InvalidInput("basis is not a full graded component");
    for (std::size_t i = 0; i < cbasis.size(); ++i) {
      if (!field_.is_zero(canonical[i])) row[basis.index_of(cbasis[i])] = canonical[i];
    }
    return row;
  }

  /// Coefficients of phi(m) over the Lex-descending basis of its degree.
  const std::vector<Element>& canonical_image(const Monomial& m) {
    if (m.ring() == Ring::kExterior) return exterior_image(m);
    return polynomial_image(m);
  }

  const MonomialBasis& canonical_basis(Ring ring, int d) {
    auto& slot = (ring == Ring::kExterior ? ext_bases_ : poly_bases_)[d];
    if (slot.size() == 0 && component_dimension(ring, phi_.n(), d) > 0) {
      slot = MonomialBasis(all_monomials(ring, phi_.n(), d));
    }
    return slot;
  }

 private:
  const std::vector<Element>& exterior_image(const Monomial& m) {
    const int n = phi_.n();
    if (n > max_exterior_n_ || n > 32) {
      throw SizeLimitExceeded("exterior minors are limited to n <= " + std::to_string(max_exterior_n_));
    }
    if (auto it = ext_images_.find(m); it != ext_images_.end()) return it->second;
    const int d = m.degree();
    const auto& basis = canonical_basis(Ring::kExterior, d);
    std::vector<Element> row(basis.size(), field_.zero());
    const auto cols = m.support();
    for (std::size_t t = 0; t < basis.size(); ++t) row[t] = minor(basis[t].support(), cols);
    return ext_images_.emplace(m, std::move(row)).first->second;
  }

  static std::uint64_t mask_of(const std::vector<int>& s) {
    std::uint64_t mask = 0;
    for (int i : s) mask |= std::uint64_t{1} << (i - 1);
    return mask;
  }

  /// det phi[rows, cols], memoized on (rows, cols) masks.
  Element minor(const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.empty()) return field_.one();
    const std::uint64_t key = (mask_of(rows) << 32) | mask_of(cols);
    if (auto it = minors_.find(key); it != minors_.end()) return it->second;
    const int last = cols.back();
    std::vector<int> rest_cols(cols.begin(), cols.end() - 1);
    Element det = field_.zero();
    const std::size_t d = rows.size();
    for (std::size_t k = 0; k < d; ++k) {
      const Element& a = phi_.entry(rows[k], last);
      if (field_.is_zero(a)) continue;
      std::vector<int> rest_rows;
      rest_rows.reserve(d - 1);
      for (std::size_t r = 0; r < d; ++r) {
        if (r != k) rest_rows.push_back(rows[r]);
      }
      Element term = field_.mul(a, minor(rest_rows, rest_cols));
      det = ((k + d) % 2 == 1) ? field_.add(det, term) : field_.sub(det, term);
    }
    minors_.emplace(key, det);
    return det;
  }

  const std::vector<Element>& polynomial_image(const Monomial& m) {
    if (auto it = poly_images_.find(m); it != poly_images_.end()) return it->second;
    const int n = phi_.n();
    const int d = m.degree();
    const auto& basis = canonical_basis(Ring::kPolynomial, d);
    std::vector<Element> row(basis.size(), field_.zero());
    if (d == 0) {
      row[0] = field_.one();
    } else {
      const int s = m.max_index();
      std::vector<int> lower(m.exponents().begin(), m.exponents().end());
      --lower[static_cast<std::size_t>(s - 1)];
      const Monomial quotient = Monomial::polynomial(lower);
      const auto previous = polynomial_image(quotient);  // copy: the map may rehash below
      const auto& pbasis = canonical_basis(Ring::kPolynomial, d - 1);
      for (std::size_t u = 0; u < previous.size(); ++u) {
        if (field_.is_zero(previous[u])) continue;
        for (int k = 1; k <= n; ++k) {
          const Element& a = phi_.entry(k, s);
          if (field_.is_zero(a)) continue;
          const auto idx = basis.index_of(*pbasis[u].times_variable(k));
          row[idx] = field_.add(row[idx], field_.mul(previous[u], a));
        }
      }
    }
    return poly_images_.emplace(m, std::move(row)).first->second;
  }

  const CoordinateChange<Field>& phi_;
  Field field_;
  int max_exterior_n_;
  std::map<int, MonomialBasis> ext_bases_;
  std::map<int, MonomialBasis> poly_bases_;
  std::unordered_map<std::uint64_t, Element> minors_;
  std::unordered_map<Monomial, std::vector<Element>, MonomialHash> ext_images_;
  std::unordered_map<Monomial, std::vector<Element>, MonomialHash> poly_images_;
};

/// phi(m) as a coefficient row over the given basis of its degree.
template <class Field>
std::vector<typename Field::Element> apply_change(const CoordinateChange<Field>& phi, const Monomial& m,
                                                  const MonomialBasis& basis) {
  if (m.ring() == Ring::kExterior && m.degree() > phi.n()) {
    throw InvalidInput("exterior degree exceeds n");
  }
  ChangeAction<Field> action(phi);
  return action.image(m, basis);
}

}  // namespace gins
