#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gins/monomial.hpp"

namespace gins {

/// A degree-compatible monomial order. Monomials of larger degree are always
/// larger; within one degree the variant decides:
///   Lex              first differing index, larger exponent wins (x_1 > ... > x_n)
///   RevLex           last differing index, smaller exponent wins
///   WeightThen*      larger weight wins, ties broken by Lex or RevLex
///   Inverse(inner)   the within-degree order of inner, reversed
class TermOrder {
 public:
  enum class Kind { kLex, kRevLex, kWeightThenLex, kWeightThenRevLex, kInverse };

  static TermOrder lex();
  static TermOrder revlex();
  static TermOrder weight_then_lex(std::vector<std::int64_t> weights);
  static TermOrder weight_then_revlex(std::vector<std::int64_t> weights);
  static TermOrder inverse(const TermOrder& inner);

  /// Parses lex | revlex | weight:<w1,...,wn>:<lex|revlex> | inv:<order>.
  static TermOrder parse(const std::string& text);

  Kind kind() const { return kind_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  /// Only valid for Inverse.
  const TermOrder& inner() const { return *inner_; }

  /// Throws InvalidInput when u and v live in different rings or variable counts.
  std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
  bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

  /// Sorts in place so that the largest monomial comes first.
  void sort_descending(std::vector<Monomial>& monomials) const;

  std::string to_string() const;

 private:
  TermOrder(Kind kind, std::vector<std::int64_t> weights, std::shared_ptr<const TermOrder> inner);
  std::strong_ordering compare_same_degree(const Monomial& u, const Monomial& v) const;

  Kind kind_;
  std::vector<std::int64_t> weights_;
  std::shared_ptr<const TermOrder> inner_;
};

}  // namespace gins
