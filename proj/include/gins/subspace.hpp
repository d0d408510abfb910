#pragma once

#include <optional>
#include <vector>

#include "gins/error.hpp"
#include "gins/ideal.hpp"
#include "gins/matrix.hpp"
#include "gins/monomial.hpp"
#include "gins/term_order.hpp"

namespace gins {

/// All degree-d monomials sorted descending under the order.
inline MonomialBasis ordered_basis(Ring ring, int n, int degree, const TermOrder& order) {
  auto monomials = all_monomials(ring, n, degree);
  order.sort_descending(monomials);
  return MonomialBasis(std::move(monomials));
}

/// A subspace of one graded component, given by spanning rows over an ordered
/// monomial basis. With an attached order the columns run from the largest
/// monomial to the smallest, so pivot columns after reduction are the
/// initial monomials of the space.
template <class Field>
class Subspace {
 public:
  using Element = typename Field::Element;

  Subspace(Field field, Ring ring, int n, int degree, MonomialBasis columns,
           std::optional<TermOrder> order = std::nullopt)
      : field_(std::move(field)), ring_(ring), n_(n), degree_(degree), columns_(std::move(columns)),
        order_(std::move(order)) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      const auto& m = columns_[i];
      if (m.ring() != ring || m.n() != n || m.degree() != degree) {
        throw InvalidInput("subspace column " + m.to_string() + " does not match the component");
      }
      if (order_ && i > 0 && !order_->greater(columns_[i - 1], m)) {
        throw InvalidInput("subspace columns are not descending under " + order_->to_string());
      }
    }
    rows_ = Matrix<Field>(0, columns_.size(), field_.zero());
  }

  /// The full component with columns descending under the order.
  static Subspace ambient(Field field, Ring ring, int n, int degree, const TermOrder& order) {
    return Subspace(std::move(field), ring, n, degree, ordered_basis(ring, n, degree, order), order);
  }

  const Field& field() const { return field_; }
  Ring ring() const { return ring_; }
  int n() const { return n_; }
  int degree() const { return degree_; }
  const MonomialBasis& columns() const { return columns_; }
  const std::optional<TermOrder>& order() const { return order_; }
  const Matrix<Field>& coefficients() const { return rows_; }

  void add_row(const std::vector<Element>& row) {
    if (row.size() != columns_.size()) throw InvalidInput("row length does not match the basis");
    rows_.append_row(row);
    reduced_ = false;
  }

  void add_monomial(const Monomial& m) {
    std::vector<Element> row(columns_.size(), field_.zero());
    row[columns_.index_of(m)] = field_.one();
    add_row(row);
  }

  struct Reduction {
    std::size_t rank = 0;
    std::vector<Monomial> pivots;  ///< in column order
  };

  /// Brings the rows to reduced echelon form (rows == rank afterwards).
  Reduction reduce() {
    const Echelon e = row_reduce(field_, rows_);
    reduced_ = true;
    Reduction r;
    r.rank = e.rank;
    for (auto c : e.pivot_columns) r.pivots.push_back(columns_[c]);
    return r;
  }

  bool is_reduced() const { return reduced_; }

 private:
  Field field_;
  Ring ring_;
  int n_;
  int degree_;
  MonomialBasis columns_;
  std::optional<TermOrder> order_;
  Matrix<Field> rows_;
  bool reduced_ = true;
};

/// Rank and pivot monomials of W; W is left unchanged.
template <class Field>
typename Subspace<Field>::Reduction row_reduce(Subspace<Field> w) {
  return w.reduce();
}

}  // namespace gins
