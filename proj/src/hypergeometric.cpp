#include "ffhg/hypergeometric.hpp"

#include <string>

namespace ffhg {

std::string_view to_string(F1Form f) noexcept {
  switch (f) {
    case F1Form::Definition: return "def";
    case F1Form::SingleSum: return "single";
    case F1Form::Inverted: return "inverted";
  }
  return "?";
}

F1Form parse_f1_form(std::string_view text) {
  if (text == "def") return F1Form::Definition;
  if (text == "single") return F1Form::SingleSum;
  if (text == "inverted") return F1Form::Inverted;
  throw InvalidInput("unknown F1 form '" + std::string(text) + "' (expected def, single or inverted)");
}

HypergeometricEvaluator::HypergeometricEvaluator(Field field)
    : field_(std::move(field)), n_(field_.group_order()), log_minus_one_(field_.dlog(field_.minus_one())) {
}

std::uint32_t HypergeometricEvaluator::reduce(std::int64_t m) const {
  const std::int64_t n = n_;
  return static_cast<std::uint32_t>(((m % n) + n) % n);
}

std::uint32_t HypergeometricEvaluator::check(const Character& chi) const {
  if (!(chi.field() == field_)) throw InvalidInput("character belongs to a different field than the evaluator");
  return chi.exponent();
}

const RootSum& HypergeometricEvaluator::scaled_binomial(std::uint32_t a, std::uint32_t b) {
  a %= n_;
  b %= n_;
  const std::uint64_t key = std::uint64_t{a} * n_ + b;
  if (auto it = binomials_.find(key); it != binomials_.end()) return it->second;
  if (jacobi_points_.empty()) {
    for (std::uint32_t code = 2; code < field_.q(); ++code) {
      const Element t{code};
      jacobi_points_.emplace_back(field_.dlog(t), field_.dlog(field_.sub(field_.one(), t)));
    }
  }
  // chi_b(-1) sum_{t != 0, 1} chi_a(t) conj(chi_b)(1 - t); the t = 0, 1 terms
  // vanish under the all-zero convention.
  const std::uint64_t minus_b = (n_ - b) % n_;
  const std::uint64_t sign = std::uint64_t{b} * log_minus_one_;
  RootSum s(n_);
  for (const auto& [lt, l1t] : jacobi_points_) s.add_root(std::uint64_t{a} * lt + minus_b * l1t + sign);
  return binomials_.emplace(key, std::move(s)).first->second;
}

// ---------------------------------------------------------------------------
// 2F1

Cyclotomic HypergeometricEvaluator::greene_2f1(const Gauss2F1Spec& spec) {
  const std::uint32_t a = check(spec.a), b = check(spec.b), c = check(spec.c);
  if (!field_.contains(spec.x)) throw InvalidInput("argument is not an element of the field");
  RootSum sum(n_);
  auto term = [&](std::uint32_t m, std::uint64_t shift) {
    const RootSum prod = scaled_binomial(reduce(std::int64_t{a} + m), m) * scaled_binomial(reduce(std::int64_t{b} + m), reduce(std::int64_t{c} + m));
    sum.add_rotated(prod, shift);
  };
  if (spec.x.code == 0) {
    term(0, 0);
  } else {
    const std::uint64_t lx = field_.dlog(spec.x);
    for (std::uint32_t m = 0; m < n_; ++m) term(m, m * lx);
  }
  // q/(q-1) * (1/q^2) * sum of scaled products
  return sum.value(Integer(field_.q()) * n_);
}

std::vector<Cyclotomic> HypergeometricEvaluator::greene_2f1_all(const Character& ca, const Character& cb,
                                                                const Character& cc) {
  const std::uint32_t a = check(ca), b = check(cb), c = check(cc);
  std::vector<RootSum> coeff;
  coeff.reserve(n_);
  for (std::uint32_t m = 0; m < n_; ++m)
    coeff.push_back(scaled_binomial(reduce(std::int64_t{a} + m), m) * scaled_binomial(reduce(std::int64_t{b} + m), reduce(std::int64_t{c} + m)));
  const Integer den = Integer(field_.q()) * n_;
  std::vector<Cyclotomic> out;
  out.reserve(field_.q());
  out.push_back(coeff[0].value(den));
  for (std::uint32_t code = 1; code < field_.q(); ++code) {
    const std::uint64_t lx = field_.dlog(Element{code});
    RootSum sum(n_);
    for (std::uint32_t m = 0; m < n_; ++m) sum.add_rotated(coeff[m], m * lx);
    out.push_back(sum.value(den));
  }
  return out;
}

// ---------------------------------------------------------------------------
// F1, double character sum

RootSum HypergeometricEvaluator::f1_coefficient(std::uint32_t a, std::uint32_t b1, std::uint32_t b2, std::uint32_t c,
                                                std::uint32_t m1, std::uint32_t m2, F1Binomial variant) {
  const std::int64_t m = std::int64_t{m1} + m2;
  const RootSum& first = variant == F1Binomial::AsPrinted
                             ? scaled_binomial(reduce(a + m), reduce(c + m))
                             : scaled_binomial(reduce(a + m), reduce(std::int64_t{c} - a));
  return first * scaled_binomial(reduce(std::int64_t{b1} + m1), m1) * scaled_binomial(reduce(std::int64_t{b2} + m2), m2);
}

Cyclotomic HypergeometricEvaluator::ghosh_f1_def(const F1Spec& spec, F1Binomial variant) {
  const std::uint32_t a = check(spec.a), b1 = check(spec.b1), b2 = check(spec.b2), c = check(spec.c);
  if (!field_.contains(spec.x) || !field_.contains(spec.y)) throw InvalidInput("argument is not an element of the field");
  // chi(0) = 0 except for the trivial character, so a zero argument keeps only m = 0.
  const std::uint32_t m1_end = spec.x.code == 0 ? 1 : n_;
  const std::uint32_t m2_end = spec.y.code == 0 ? 1 : n_;
  const std::uint64_t lx = spec.x.code == 0 ? 0 : field_.dlog(spec.x);
  const std::uint64_t ly = spec.y.code == 0 ? 0 : field_.dlog(spec.y);
  RootSum sum(n_);
  for (std::uint32_t m1 = 0; m1 < m1_end; ++m1)
    for (std::uint32_t m2 = 0; m2 < m2_end; ++m2)
      sum.add_rotated(f1_coefficient(a, b1, b2, c, m1, m2, variant), m1 * lx + m2 * ly);
  // q^2/(q-1)^2 * (1/q^3) * sum of scaled products
  return sum.value(Integer(field_.q()) * n_ * n_);
}

std::vector<Cyclotomic> HypergeometricEvaluator::ghosh_f1_def_grid(const Character& ca, const Character& cb1,
                                                                   const Character& cb2, const Character& cc,
                                                                   F1Binomial variant) {
  const std::uint32_t a = check(ca), b1 = check(cb1), b2 = check(cb2), c = check(cc);
  const std::uint32_t q = field_.q();
  std::vector<RootSum> coeff;  // coeff[m1 * n + m2]
  coeff.reserve(std::size_t{n_} * n_);
  for (std::uint32_t m1 = 0; m1 < n_; ++m1)
    for (std::uint32_t m2 = 0; m2 < n_; ++m2) coeff.push_back(f1_coefficient(a, b1, b2, c, m1, m2, variant));

  // Separable transform: partial[x * n + m2] = sum_{m1} coeff(m1, m2) chi_{m1}(x).
  std::vector<RootSum> partial(std::size_t{q} * n_, RootSum(n_));
  for (std::uint32_t x = 0; x < q; ++x) {
    const std::uint32_t m1_end = x == 0 ? 1 : n_;
    const std::uint64_t lx = x == 0 ? 0 : field_.dlog(Element{x});
    for (std::uint32_t m2 = 0; m2 < n_; ++m2) {
      RootSum& dst = partial[std::size_t{x} * n_ + m2];
      for (std::uint32_t m1 = 0; m1 < m1_end; ++m1) dst.add_rotated(coeff[std::size_t{m1} * n_ + m2], m1 * lx);
    }
  }
  const Integer den = Integer(q) * n_ * n_;
  std::vector<Cyclotomic> out;
  out.reserve(std::size_t{q} * q);
  for (std::uint32_t x = 0; x < q; ++x) {
    for (std::uint32_t y = 0; y < q; ++y) {
      const std::uint32_t m2_end = y == 0 ? 1 : n_;
      const std::uint64_t ly = y == 0 ? 0 : field_.dlog(Element{y});
      RootSum sum(n_);
      for (std::uint32_t m2 = 0; m2 < m2_end; ++m2) sum.add_rotated(partial[std::size_t{x} * n_ + m2], m2 * ly);
      out.push_back(sum.value(den));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// F1, single sums

namespace {

void require_nonzero_arguments(const F1Spec& spec) {
  if (spec.x.code == 0 || spec.y.code == 0)
    throw OutOfDomain("single-sum F1 forms require xy != 0; use the double-sum definition");
}

std::uint32_t lcm_of(std::initializer_list<std::uint32_t> orders) {
  std::uint64_t l = 1;
  for (const auto o : orders) l = lcm_u64(l, o);
  return static_cast<std::uint32_t>(l);
}

}  // namespace

Cyclotomic HypergeometricEvaluator::ghosh_f1_single(const F1Spec& spec) const {
  for (const Character* chi : {&spec.a, &spec.b1, &spec.b2, &spec.c}) check(*chi);
  require_nonzero_arguments(spec);
  const Field& f = field_;
  const Character abar_c = spec.a.conj() * spec.c;
  const Character b1bar = spec.b1.conj(), b2bar = spec.b2.conj();
  const Character sign_char = spec.a * spec.c;
  const std::uint32_t n = lcm_of({spec.a.order(), abar_c.order(), b1bar.order(), b2bar.order(), sign_char.order()});
  constexpr auto conv = ZeroConvention::GreeneAllZero;

  RootSum sum(n);
  for (std::uint32_t code = 0; code < f.q(); ++code) {
    const Element t{code};
    const auto v0 = spec.a.log_value(t, conv, n);
    if (!v0) continue;
    const auto v1 = abar_c.log_value(f.sub(f.one(), t), conv, n);
    if (!v1) continue;
    const auto v2 = b1bar.log_value(f.sub(f.one(), f.mul(spec.x, t)), conv, n);
    if (!v2) continue;
    const auto v3 = b2bar.log_value(f.sub(f.one(), f.mul(spec.y, t)), conv, n);
    if (!v3) continue;
    sum.add_root(std::uint64_t{*v0} + *v1 + *v2 + *v3);
  }
  const auto sign = sign_char.log_value(f.minus_one(), conv, n);
  return sum.rotated(*sign).value(Integer(f.q()));
}

Cyclotomic HypergeometricEvaluator::ghosh_f1_inverted(const F1Spec& spec) const {
  for (const Character* chi : {&spec.a, &spec.b1, &spec.b2, &spec.c}) check(*chi);
  require_nonzero_arguments(spec);
  const Field& f = field_;
  const Character lead = spec.b1 * spec.b2 * spec.c.conj();
  const Character abar_c = spec.a.conj() * spec.c;
  const Character b1bar = spec.b1.conj(), b2bar = spec.b2.conj();
  const Character sign_char = spec.a * spec.c;
  const std::uint32_t n = lcm_of({lead.order(), abar_c.order(), b1bar.order(), b2bar.order(), sign_char.order()});
  constexpr auto conv = ZeroConvention::GreeneAllZero;

  RootSum sum(n);
  for (std::uint32_t code = 1; code < f.q(); ++code) {
    const Element s{code};
    const auto v0 = lead.log_value(s, conv, n);
    const auto v1 = abar_c.log_value(f.sub(s, f.one()), conv, n);
    if (!v1) continue;
    const auto v2 = b1bar.log_value(f.sub(s, spec.x), conv, n);
    if (!v2) continue;
    const auto v3 = b2bar.log_value(f.sub(s, spec.y), conv, n);
    if (!v3) continue;
    sum.add_root(std::uint64_t{*v0} + *v1 + *v2 + *v3);
  }
  const auto sign = sign_char.log_value(f.minus_one(), conv, n);
  return sum.rotated(*sign).value(Integer(f.q()));
}

Cyclotomic HypergeometricEvaluator::ghosh_f1(const F1Spec& spec, F1Form form) {
  switch (form) {
    case F1Form::Definition: return ghosh_f1_def(spec);
    case F1Form::SingleSum: return ghosh_f1_single(spec);
    case F1Form::Inverted: return ghosh_f1_inverted(spec);
  }
  throw std::logic_error("unreachable F1 form");
}

Cyclotomic greene_2f1(const Gauss2F1Spec& spec) { return HypergeometricEvaluator(spec.a.field()).greene_2f1(spec); }

Cyclotomic ghosh_f1_def(const F1Spec& spec, F1Binomial variant) {
  return HypergeometricEvaluator(spec.a.field()).ghosh_f1_def(spec, variant);
}

Cyclotomic ghosh_f1_single(const F1Spec& spec) { return HypergeometricEvaluator(spec.a.field()).ghosh_f1_single(spec); }

Cyclotomic ghosh_f1_inverted(const F1Spec& spec) {
  return HypergeometricEvaluator(spec.a.field()).ghosh_f1_inverted(spec);
}

}  // namespace ffhg
