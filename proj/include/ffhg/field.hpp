#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ffhg/error.hpp"

namespace ffhg {

/// An element of F_q by canonical code. The base-p digits of the code, low to
/// high, are the coefficients of the representative polynomial modulo the
/// field's modulus. Code 0 is zero, code 1 is one.
struct Element {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

/// A concrete finite field F_{p^e}.
///
/// The modulus is the lexicographically smallest monic irreducible of degree e
/// (coefficients compared low to high; for e = 1 it is the polynomial x), and
/// the generator is the smallest code of multiplicative order q - 1. Both are
/// deterministic, so two constructions of the same (p, e) agree in every table.
///
/// A Field is a cheap handle: copies share the immutable exp/log tables, and
/// sharing across threads is safe.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  /// Throws InvalidInput for non-prime p, e < 1, or p^e > kMaxOrder.
  static Field make(std::uint32_t p, std::uint32_t e);
  /// Factors q as a prime power and forwards to make().
  static Field of_order(std::uint64_t q);

  std::uint32_t p() const noexcept;
  std::uint32_t e() const noexcept;
  std::uint32_t q() const noexcept;
  /// q - 1, the order of F_q^x.
  std::uint32_t group_order() const noexcept { return q() - 1; }

  /// Monic modulus, coefficients low to high, length e + 1.
  std::span<const std::uint32_t> modulus() const noexcept;
  Element generator() const noexcept;

  Element zero() const noexcept { return Element{0}; }
  Element one() const noexcept { return Element{1}; }
  Element minus_one() const noexcept { return neg(one()); }
  /// Image of an integer in the prime subfield.
  Element from_integer(std::int64_t n) const noexcept;
  /// Checks code < q; throws InvalidInput otherwise.
  Element element(std::uint64_t code) const;
  bool contains(Element x) const noexcept { return x.code < q(); }

  Element add(Element a, Element b) const noexcept;
  Element sub(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element mul(Element a, Element b) const noexcept;
  Element div(Element a, Element b) const;
  Element inv(Element a) const;
  /// Negative exponents require a nonzero base; 0^0 = 1.
  Element pow(Element a, std::int64_t k) const;

  /// Exponent k in [0, q - 2] with generator^k = x. Throws for x = 0.
  std::uint32_t dlog(Element x) const;
  /// generator^k, k reduced mod q - 1.
  Element exp(std::uint64_t k) const noexcept;

  /// Coefficients of the representative polynomial, low to high, length e.
  std::vector<std::uint32_t> digits(Element x) const;

  /// "F_q (p^e) modulus [..] generator g"
  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.impl_ == b.impl_ || (a.p() == b.p() && a.e() == b.e());
  }

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n) noexcept;
/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace ffhg
