#include "gins/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gins/error.hpp"

namespace gins {

std::string ring_name(Ring ring) { return ring == Ring::kExterior ? "ext" : "poly"; }

Ring parse_ring(const std::string& text) {
  if (text == "ext" || text == "exterior") return Ring::kExterior;
  if (text == "poly" || text == "polynomial") return Ring::kPolynomial;
  throw InvalidInput("unknown ring: " + text + " (expected ext or poly)");
}

Monomial::Monomial(Ring ring, std::vector<std::uint8_t> exps) : ring_(ring), exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::exterior(int n, const std::vector<int>& support) {
  if (n < 0 || n > 64) throw InvalidInput("exterior monomial: bad variable count " + std::to_string(n));
  std::vector<std::uint8_t> exps(static_cast<std::size_t>(n), 0);
  int previous = 0;
  for (int i : support) {
    if (i <= previous || i > n) {
      throw InvalidInput("exterior support must be strictly increasing within [1, " +
                         std::to_string(n) + "]");
    }
    exps[static_cast<std::size_t>(i - 1)] = 1;
    previous = i;
  }
  return Monomial(Ring::kExterior, std::move(exps));
}

Monomial Monomial::polynomial(const std::vector<int>& exponents) {
  std::vector<std::uint8_t> exps;
  exps.reserve(exponents.size());
  for (int e : exponents) {
    if (e < 0 || e > 255) throw InvalidInput("polynomial exponent out of range: " + std::to_string(e));
    exps.push_back(static_cast<std::uint8_t>(e));
  }
  return Monomial(Ring::kPolynomial, std::move(exps));
}

Monomial Monomial::one(Ring ring, int n) {
  return Monomial(ring, std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) s.push_back(static_cast<int>(i) + 1);
  }
  return s;
}

int Monomial::min_index() const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) return static_cast<int>(i) + 1;
  }
  return 0;
}

int Monomial::max_index() const {
  for (std::size_t i = exps_.size(); i > 0; --i) {
    if (exps_[i - 1] > 0) return static_cast<int>(i);
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (ring_ != other.ring_ || exps_.size() != other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

std::optional<Monomial> Monomial::times(const Monomial& other) const {
  if (ring_ != other.ring_ || exps_.size() != other.exps_.size()) {
    throw InvalidInput("monomial product across rings or variable counts");
  }
  std::vector<std::uint8_t> exps(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const int e = exps_[i] + other.exps_[i];
    if (ring_ == Ring::kExterior && e > 1) return std::nullopt;
    if (e > 255) throw InvalidInput("exponent overflow in monomial product");
    exps[i] = static_cast<std::uint8_t>(e);
  }
  return Monomial(ring_, std::move(exps));
}

std::optional<Monomial> Monomial::times_variable(int i) const {
  auto exps = exps_;
  auto& e = exps[static_cast<std::size_t>(i - 1)];
  if (ring_ == Ring::kExterior && e > 0) return std::nullopt;
  if (e == 255) throw InvalidInput("exponent overflow in monomial product");
  ++e;
  return Monomial(ring_, std::move(exps));
}

Monomial Monomial::exchanged(int from, int to) const {
  auto exps = exps_;
  auto& f = exps[static_cast<std::size_t>(from - 1)];
  if (f == 0) throw InvalidInput("exchange: variable not present");
  --f;
  ++exps[static_cast<std::size_t>(to - 1)];
  return Monomial(ring_, std::move(exps));
}

Monomial Monomial::as_polynomial() const { return Monomial(Ring::kPolynomial, exps_); }

std::string Monomial::to_string() const {
  std::ostringstream out;
  if (ring_ == Ring::kExterior) {
    out << "e{";
    bool first = true;
    for (int i : support()) {
      if (!first) out << ',';
      out << i;
      first = false;
    }
    out << '}';
    return out.str();
  }
  if (degree_ == 0) return "1";
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) out << '*';
    out << 'x' << (i + 1);
    if (exps_[i] > 1) out << '^' << static_cast<int>(exps_[i]);
    first = false;
  }
  return out.str();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(m.ring());
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

int parse_positive(const std::string& digits, const std::string& context) {
  if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw InvalidInput("bad integer '" + digits + "' in monomial " + context);
  }
  return std::stoi(digits);
}

}  // namespace

Monomial parse_monomial(const std::string& raw, Ring ring, int n) {
  const std::string text = strip(raw);
  if (ring == Ring::kExterior) {
    if (text.size() < 3 || text[0] != 'e' || text[1] != '{' || text.back() != '}') {
      throw InvalidInput("exterior monomial must look like e{1,3,4}: " + raw);
    }
    std::vector<int> support;
    const std::string body = text.substr(2, text.size() - 3);
    std::stringstream ss(body);
    std::string item;
    while (!body.empty() && std::getline(ss, item, ',')) support.push_back(parse_positive(item, raw));
    return Monomial::exterior(n, support);
  }
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  if (text == "1") return Monomial::polynomial(exps);
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    if (factor.size() < 2 || factor[0] != 'x') throw InvalidInput("polynomial factor must be x<i>[^k]: " + raw);
    const auto caret = factor.find('^');
    const int var = parse_positive(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1), raw);
    const int power = caret == std::string::npos ? 1 : parse_positive(factor.substr(caret + 1), raw);
    if (var < 1 || var > n) throw InvalidInput("variable index out of range in " + raw);
    exps[static_cast<std::size_t>(var - 1)] += power;
  }
  return Monomial::polynomial(exps);
}

std::strong_ordering lex_compare(const Monomial& u, const Monomial& v) {
  if (u.degree() != v.degree()) return u.degree() <=> v.degree();
  const auto& a = u.exponents();
  const auto& b = v.exponents();
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

namespace {

void fill_polynomial(int n, int index, int remaining, std::vector<int>& exps, std::vector<Monomial>& out) {
  if (index == n - 1) {
    exps[static_cast<std::size_t>(index)] = remaining;
    out.push_back(Monomial::polynomial(exps));
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[static_cast<std::size_t>(index)] = e;
    fill_polynomial(n, index + 1, remaining - e, exps, out);
  }
}

void fill_exterior(int n, int start, int remaining, std::vector<int>& support, std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.push_back(Monomial::exterior(n, support));
    return;
  }
  for (int i = start; i <= n - remaining + 1; ++i) {
    support.push_back(i);
    fill_exterior(n, i + 1, remaining - 1, support, out);
    support.pop_back();
  }
}

}  // namespace

std::vector<Monomial> all_monomials(Ring ring, int n, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (ring == Ring::kExterior) {
    if (degree > n) return out;
    std::vector<int> support;
    fill_exterior(n, 1, degree, support, out);
    return out;
  }
  if (n == 0) {
    if (degree == 0) out.push_back(Monomial::polynomial({}));
    return out;
  }
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  fill_polynomial(n, 0, degree, exps, out);
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t component_dimension(Ring ring, int n, int degree) {
  if (degree < 0) return 0;
  if (ring == Ring::kExterior) return binomial(n, degree);
  if (n == 0) return degree == 0 ? 1 : 0;
  return binomial(n + degree - 1, degree);
}

MonomialBasis::MonomialBasis(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (!index_.emplace(monomials_[i], i).second) {
      throw InvalidInput("duplicate monomial in basis: " + monomials_[i].to_string());
    }
  }
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw InvalidInput("monomial not in basis: " + m.to_string());
  return it->second;
}

std::optional<std::size_t> MonomialBasis::find(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace gins
