#include "ffhg/character.hpp"

#include <numeric>
#include <string>

namespace ffhg {

std::string_view to_string(ZeroConvention c) noexcept {
  return c == ZeroConvention::GreeneAllZero ? "greene-all-zero" : "paper-trivial-one";
}

ZeroConvention parse_convention(std::string_view text) {
  if (text == "greene-all-zero") return ZeroConvention::GreeneAllZero;
  if (text == "paper-trivial-one") return ZeroConvention::PaperTrivialOne;
  throw InvalidInput("unknown zero convention '" + std::string(text) + "'");
}

Character::Character(Field field, std::int64_t exponent) : field_(std::move(field)) {
  const std::int64_t n = field_.group_order();
  m_ = static_cast<std::uint32_t>(((exponent % n) + n) % n);
  order_ = static_cast<std::uint32_t>(n / std::gcd<std::int64_t>(m_, n));
}

Character Character::of_order(const Field& f, std::uint32_t k) {
  const std::uint32_t n = f.group_order();
  if (k == 0 || n % k != 0)
    throw InvalidInput("no character of order " + std::to_string(k) + " on F_" + std::to_string(f.q()) +
                       " (q - 1 = " + std::to_string(n) + ")");
  return Character(f, n / k);
}

Character Character::pow(std::int64_t k) const {
  const std::int64_t n = field_.group_order();
  return Character(field_, static_cast<std::int64_t>(m_) * (k % n));
}

Character Character::operator*(const Character& b) const {
  require_same_field(*this, b);
  return Character(field_, static_cast<std::int64_t>(m_) + b.m_);
}

std::optional<std::uint32_t> Character::log_value(Element x, ZeroConvention conv, std::uint32_t n) const {
  if (x.code == 0) {
    if (m_ == 0 && conv == ZeroConvention::PaperTrivialOne) return 0;
    return std::nullopt;
  }
  // chi(g^k) = zeta_{q-1}^(m k) = zeta_n^(m k n / (q-1)); n / order divides n.
  const std::uint64_t step = m_ / (field_.group_order() / order_);
  const std::uint64_t k = (step * field_.dlog(x)) % order_;
  return static_cast<std::uint32_t>(k * (n / order_));
}

void require_same_field(const Character& a, const Character& b) {
  if (!(a.field() == b.field())) throw InvalidInput("characters belong to different fields");
}

Cyclotomic char_eval(const Character& chi, Element x, ZeroConvention conv) {
  const auto k = chi.log_value(x, conv);
  if (!k) return Cyclotomic(0);
  return Cyclotomic::root(chi.order(), *k);
}

RootSum jacobi_root_sum(const Character& a, const Character& b, ZeroConvention conv, std::uint32_t n) {
  require_same_field(a, b);
  if (n % a.order() != 0 || n % b.order() != 0) throw std::invalid_argument("root sum order must be a multiple of both character orders");
  const Field& f = a.field();
  RootSum sum(n);
  for (std::uint32_t code = 0; code < f.q(); ++code) {
    const Element t{code};
    const auto at = a.log_value(t, conv, n);
    if (!at) continue;
    const auto bt = b.log_value(f.sub(f.one(), t), conv, n);
    if (!bt) continue;
    sum.add_root(std::uint64_t{*at} + *bt);
  }
  return sum;
}

Cyclotomic jacobi_sum(const Character& a, const Character& b, ZeroConvention conv) {
  const auto n = static_cast<std::uint32_t>(lcm_u64(a.order(), b.order()));
  return jacobi_root_sum(a, b, conv, n).value();
}

Cyclotomic norm_binomial(const Character& a, const Character& b, ZeroConvention conv) {
  const Field& f = a.field();
  const Cyclotomic sign = char_eval(b, f.minus_one(), conv);
  return sign * jacobi_sum(a, b.conj(), conv) * Rational(1, f.q());
}

Cyclotomic lemma21_expand(const Character& a, Element t, ZeroConvention conv) {
  const Field& f = a.field();
  const std::uint32_t n = f.group_order();
  const Element minus_one = f.minus_one();
  // q (A chi over chi) = chi(-1) J(A chi, conj chi); sum these times chi(t).
  RootSum sum(n);
  for (std::uint32_t m = 0; m < n; ++m) {
    const Character chi(f, m);
    const auto at_t = chi.log_value(t, conv, n);
    if (!at_t) continue;
    const auto sign = chi.log_value(minus_one, conv, n);
    sum.add_rotated(jacobi_root_sum(a * chi, chi.conj(), conv, n), std::uint64_t{*at_t} + *sign);
  }
  return delta(t) + sum.value(Integer(n));
}

std::pair<Cyclotomic, Cyclotomic> lemma21_jacobi_binomial(const Character& a, const Character& b, ZeroConvention conv) {
  const Field& f = a.field();
  Cyclotomic rhs = char_eval(b, f.minus_one(), conv) * norm_binomial(a, b.conj(), conv) * Rational(f.q());
  return {jacobi_sum(a, b, conv), std::move(rhs)};
}

std::pair<Cyclotomic, Cyclotomic> lemma21_reflection(const Character& a, const Character& b, ZeroConvention conv) {
  return {norm_binomial(a, b, conv), norm_binomial(a, a * b.conj(), conv)};
}

}  // namespace ffhg
