#include "gins/field.hpp"

namespace gins {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto w : kWitnesses) {
    std::uint64_t x = powmod(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 32)) {
    throw InvalidInput("prime modulus must be below 2^32, got " + std::to_string(p));
  }
  if (!is_prime(p)) throw InvalidInput("field modulus is not prime: " + std::to_string(p));
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw InvalidInput("inverse of zero in " + name());
  return powmod(a, p_ - 2, p_);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw InvalidInput("inverse of zero in rational field");
  return Element(1) / a;
}

FieldSpec parse_field(const std::string& text) {
  if (text == "rational") return RationalField{};
  const std::string prefix = "prime:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string digits = text.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidInput("bad prime in field spec: " + text);
    }
    return PrimeField(std::stoull(digits));
  }
  if (text == "prime") return PrimeField{};
  throw InvalidInput("unknown field spec: " + text + " (expected prime:<p> or rational)");
}

std::string field_name(const FieldSpec& field) {
  return std::visit([](const auto& f) { return f.name(); }, field);
}

std::uint64_t field_characteristic(const FieldSpec& field) {
  return std::visit([](const auto& f) { return f.characteristic(); }, field);
}

}  // namespace gins
