#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "ffhg/cyclotomic.hpp"
#include "ffhg/field.hpp"

namespace ffhg {

/// Value of a multiplicative character at 0.
enum class ZeroConvention {
  /// chi(0) = 0 for every chi, including the trivial character.
  GreeneAllZero,
  /// chi(0) = 0 for chi != eps, eps(0) = 1.
  PaperTrivialOne,
};

std::string_view to_string(ZeroConvention c) noexcept;
/// Accepts "greene-all-zero" and "paper-trivial-one".
ZeroConvention parse_convention(std::string_view text);

/// A multiplicative character of F_q^x, chi(g) = zeta_{q-1}^m for the field's
/// fixed generator g. Exponent 0 is the trivial character.
class Character {
 public:
  Character(Field field, std::int64_t exponent);

  static Character trivial(const Field& f) { return Character(f, 0); }
  /// The canonical character of order k, exponent (q - 1) / k. Throws
  /// InvalidInput when k does not divide q - 1.
  static Character of_order(const Field& f, std::uint32_t k);
  static Character quadratic(const Field& f) { return of_order(f, 2); }
  static Character cubic(const Field& f) { return of_order(f, 3); }

  const Field& field() const noexcept { return field_; }
  std::uint32_t exponent() const noexcept { return m_; }
  /// (q - 1) / gcd(m, q - 1)
  std::uint32_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return m_ == 0; }

  Character conj() const { return Character(field_, -static_cast<std::int64_t>(m_)); }
  Character pow(std::int64_t k) const;
  Character operator*(const Character& b) const;

  /// k with chi(x) = zeta_n^k, where n is any multiple of order(); nullopt
  /// when chi(x) = 0 under the convention.
  std::optional<std::uint32_t> log_value(Element x, ZeroConvention conv, std::uint32_t n) const;
  std::optional<std::uint32_t> log_value(Element x, ZeroConvention conv) const { return log_value(x, conv, order_); }

  friend bool operator==(const Character& a, const Character& b) noexcept {
    return a.m_ == b.m_ && a.field_ == b.field_;
  }

 private:
  Field field_;
  std::uint32_t m_;
  std::uint32_t order_;
};

void require_same_field(const Character& a, const Character& b);

Cyclotomic char_eval(const Character& chi, Element x, ZeroConvention conv);

/// J(A, B) = sum_{t in F_q} A(t) B(1 - t).
Cyclotomic jacobi_sum(const Character& a, const Character& b, ZeroConvention conv = ZeroConvention::GreeneAllZero);
/// J(A, B) as a root sum of order n (a multiple of both character orders).
RootSum jacobi_root_sum(const Character& a, const Character& b, ZeroConvention conv, std::uint32_t n);

/// Normalized binomial (A over B) = B(-1) / q * J(A, conj B).
Cyclotomic norm_binomial(const Character& a, const Character& b, ZeroConvention conv = ZeroConvention::GreeneAllZero);

/// delta(t) = 1 iff t = 0.
inline Cyclotomic delta(Element t) { return Cyclotomic(t.code == 0 ? 1 : 0); }

/// delta(t) + q/(q-1) sum_chi (A chi over chi) chi(t), summed over all q - 1
/// characters. Expected to equal conj(A)(1 - t).
Cyclotomic lemma21_expand(const Character& a, Element t, ZeroConvention conv = ZeroConvention::GreeneAllZero);

/// (J(A, B), q B(-1) (A over conj B)).
std::pair<Cyclotomic, Cyclotomic> lemma21_jacobi_binomial(const Character& a, const Character& b,
                                                          ZeroConvention conv = ZeroConvention::GreeneAllZero);

/// ((A over B), (A over A conj B)).
std::pair<Cyclotomic, Cyclotomic> lemma21_reflection(const Character& a, const Character& b,
                                                     ZeroConvention conv = ZeroConvention::GreeneAllZero);

}  // namespace ffhg
