#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ffhg {

using Rational = mpq_class;
using Integer = mpz_class;

std::uint32_t euler_phi(std::uint32_t n);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Integer coefficients of the n-th cyclotomic polynomial, low to high.
/// Computed once per order and cached for the life of the process.
std::span<const std::int64_t> cyclotomic_polynomial(std::uint32_t n);

/// An exact element of Q(zeta_n).
///
/// Stored as integer numerators over one common positive denominator, in the
/// power basis 1, z, ..., z^(phi(n) - 1) after reduction modulo Phi_n. The form
/// is canonical: equal values of equal order compare equal structurally.
/// Orders n = 2 (mod 4) are folded to n / 2 and rational values carry order 1.
/// Mixed-order arithmetic lifts to the lcm of the orders.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(std::int64_t v);  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(const Rational& r);

  /// zeta_n^k with k taken mod n.
  static Cyclotomic root(std::uint32_t n, std::int64_t k);
  /// sum_k c_k zeta_n^k for any length of c; indices are taken mod n.
  static Cyclotomic from_coefficients(std::uint32_t n, std::span<const Rational> c);
  /// (1 / denominator) * sum_k counts[k] zeta_n^k, counts.size() == n.
  static Cyclotomic from_root_counts(std::uint32_t n, std::span<const std::int64_t> counts,
                                     const Integer& denominator = 1);
  /// Inverse of to_string() for the given order.
  static Cyclotomic parse(std::string_view text, std::uint32_t n);

  std::uint32_t order() const noexcept { return order_; }
  /// Reduced rational coefficients, length phi(order()).
  std::vector<Rational> coefficients() const;
  Rational coefficient(std::size_t i) const;
  const Integer& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept;
  std::optional<Rational> as_rational() const;
  /// The value as a rational integer, or nullopt when it is not one (or does
  /// not fit in 64 bits).
  std::optional<std::int64_t> as_integer() const;

  /// Complex conjugation, zeta -> zeta^(-1).
  Cyclotomic conj() const;
  /// The Galois automorphism zeta_n -> zeta_n^k, gcd(k, n) = 1.
  Cyclotomic galois(std::int64_t k) const;
  /// The same value in the smallest Q(zeta_d) that contains it.
  Cyclotomic compressed() const;

  /// Numerical embedding zeta_n -> exp(2 pi i / n). Diagnostics only.
  std::complex<double> to_complex() const;

  /// Polynomial in z with rational coefficients, e.g. "1/7 - 2/7*z".
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& b);
  Cyclotomic& operator-=(const Cyclotomic& b);
  Cyclotomic& operator*=(const Cyclotomic& b);
  Cyclotomic& operator*=(const Rational& r);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(std::uint32_t n, std::vector<Integer> raw, Integer den);
  void canonicalize(std::vector<Integer> raw);

  std::uint32_t order_ = 1;
  std::vector<Integer> num_;  // length phi(order_)
  Integer den_ = 1;
};

/// Sum of n-th roots of unity with integer multiplicities: an element of the
/// group ring Z[Z/n], before reduction modulo Phi_n. This is the working
/// accumulator for character sums; Cyclotomic is the canonical value.
/// Arithmetic is checked and throws std::overflow_error beyond 64 bits.
class RootSum {
 public:
  explicit RootSum(std::uint32_t n);

  std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(counts_.size()); }
  std::span<const std::int64_t> counts() const noexcept { return counts_; }

  void add_root(std::uint64_t k, std::int64_t multiplicity = 1);
  /// this += multiplicity * zeta^shift * other
  void add_rotated(const RootSum& other, std::uint64_t shift, std::int64_t multiplicity = 1);
  RootSum rotated(std::uint64_t shift) const;
  void negate() noexcept;

  /// Cyclic convolution: the product in Z[Z/n].
  friend RootSum operator*(const RootSum& a, const RootSum& b);

  Cyclotomic value(const Integer& denominator = 1) const;

 private:
  std::vector<std::int64_t> counts_;
};

}  // namespace ffhg
