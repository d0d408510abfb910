#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <variant>

#include "gins/error.hpp"

namespace gins {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; independent of the standard
/// library's distribution implementation so seeded runs replay everywhere.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// SplitMix64 finalizer; used to derive independent stream seeds from a master seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Integers modulo a prime p < 2^32, so a product of two residues fits in 64 bits.
class PrimeField {
 public:
  using Element = std::uint64_t;
  static constexpr std::uint64_t kDefaultModulus = 2147483629ULL;

  explicit PrimeField(std::uint64_t p = kDefaultModulus);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1 % p_; }
  Element from_int(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<Element>(r);
  }
  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const { return (a * b) % p_; }
  Element inv(Element a) const;
  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }
  Element random(Rng& rng) const { return uniform_below(rng, p_); }
  std::string to_string(Element a) const { return std::to_string(a); }
  std::string name() const { return "prime:" + std::to_string(p_); }

 private:
  std::uint64_t p_;
};

/// The rationals, exact via GMP. Random draws are integers in [-10^6, 10^6].
class RationalField {
 public:
  using Element = mpq_class;
  static constexpr std::int64_t kRandomBound = 1000000;

  std::uint64_t characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element random(Rng& rng) const {
    auto v = static_cast<std::int64_t>(uniform_below(rng, 2 * kRandomBound + 1)) - kRandomBound;
    return from_int(v);
  }
  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string name() const { return "rational"; }
};

/// Runtime choice of coefficient field; dispatch with std::visit.
using FieldSpec = std::variant<PrimeField, RationalField>;

/// Parses "prime:<p>" or "rational".
FieldSpec parse_field(const std::string& text);
std::string field_name(const FieldSpec& field);
std::uint64_t field_characteristic(const FieldSpec& field);

}  // namespace gins
