#include "gins/term_order.hpp"

#include <algorithm>
#include <sstream>

#include "gins/error.hpp"

namespace gins {

namespace {

std::strong_ordering lex_within(const Monomial& u, const Monomial& v) {
  const auto& a = u.exponents();
  const auto& b = v.exponents();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering revlex_within(const Monomial& u, const Monomial& v) {
  const auto& a = u.exponents();
  const auto& b = v.exponents();
  for (std::size_t i = a.size(); i > 0; --i) {
    if (a[i - 1] != b[i - 1]) return b[i - 1] <=> a[i - 1];
  }
  return std::strong_ordering::equal;
}

std::vector<std::int64_t> parse_weights(const std::string& text) {
  std::vector<std::int64_t> weights;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      weights.push_back(std::stoll(item, &used));
      if (used != item.size()) throw InvalidInput("bad weight: " + item);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad weight: " + item);
    }
  }
  if (weights.empty()) throw InvalidInput("weight order needs at least one weight");
  return weights;
}

}  // namespace

TermOrder::TermOrder(Kind kind, std::vector<std::int64_t> weights, std::shared_ptr<const TermOrder> inner)
    : kind_(kind), weights_(std::move(weights)), inner_(std::move(inner)) {}

TermOrder TermOrder::lex() { return TermOrder(Kind::kLex, {}, nullptr); }
TermOrder TermOrder::revlex() { return TermOrder(Kind::kRevLex, {}, nullptr); }
TermOrder TermOrder::weight_then_lex(std::vector<std::int64_t> weights) {
  return TermOrder(Kind::kWeightThenLex, std::move(weights), nullptr);
}
TermOrder TermOrder::weight_then_revlex(std::vector<std::int64_t> weights) {
  return TermOrder(Kind::kWeightThenRevLex, std::move(weights), nullptr);
}
TermOrder TermOrder::inverse(const TermOrder& inner) {
  return TermOrder(Kind::kInverse, {}, std::make_shared<const TermOrder>(inner));
}

TermOrder TermOrder::parse(const std::string& text) {
  if (text == "lex") return lex();
  if (text == "revlex" || text == "rev") return revlex();
  if (text.rfind("inv:", 0) == 0) return inverse(parse(text.substr(4)));
  if (text.rfind("weight:", 0) == 0) {
    const std::string rest = text.substr(7);
    const auto colon = rest.rfind(':');
    if (colon == std::string::npos) throw InvalidInput("weight order needs a tie-break: " + text);
    auto weights = parse_weights(rest.substr(0, colon));
    const std::string tie = rest.substr(colon + 1);
    if (tie == "lex") return weight_then_lex(std::move(weights));
    if (tie == "revlex") return weight_then_revlex(std::move(weights));
    throw InvalidInput("weight tie-break must be lex or revlex: " + text);
  }
  throw InvalidInput("unknown term order: " + text);
}

std::strong_ordering TermOrder::compare_same_degree(const Monomial& u, const Monomial& v) const {
  switch (kind_) {
    case Kind::kLex:
      return lex_within(u, v);
    case Kind::kRevLex:
      return revlex_within(u, v);
    case Kind::kWeightThenLex:
    case Kind::kWeightThenRevLex: {
      if (weights_.size() != static_cast<std::size_t>(u.n())) {
        throw InvalidInput("weight vector has " + std::to_string(weights_.size()) + " entries but n = " +
                           std::to_string(u.n()));
      }
      std::int64_t wu = 0, wv = 0;
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        wu += weights_[i] * u.exponents()[i];
        wv += weights_[i] * v.exponents()[i];
      }
      if (wu != wv) return wu <=> wv;
      return kind_ == Kind::kWeightThenLex ? lex_within(u, v) : revlex_within(u, v);
    }
    case Kind::kInverse:
      return 0 <=> inner_->compare_same_degree(u, v);
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrder::compare(const Monomial& u, const Monomial& v) const {
  if (u.ring() != v.ring() || u.n() != v.n()) {
    throw InvalidInput("cannot compare " + u.to_string() + " and " + v.to_string() +
                       ": different ring or variable count");
  }
  if (u.degree() != v.degree()) return u.degree() <=> v.degree();
  return compare_same_degree(u, v);
}

void TermOrder::sort_descending(std::vector<Monomial>& monomials) const {
  std::sort(monomials.begin(), monomials.end(),
            [this](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; });
}

std::string TermOrder::to_string() const {
  switch (kind_) {
    case Kind::kLex:
      return "lex";
    case Kind::kRevLex:
      return "revlex";
    case Kind::kWeightThenLex:
    case Kind::kWeightThenRevLex: {
      std::string s = "weight:";
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(weights_[i]);
      }
      return s + (kind_ == Kind::kWeightThenLex ? ":lex" : ":revlex");
    }
    case Kind::kInverse:
      return "inv:" + inner_->to_string();
  }
  return "?";
}

}  // namespace gins
