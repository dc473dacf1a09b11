#include "ffhg/picard.hpp"

#include <string>

#include "ffhg/character.hpp"

namespace ffhg {

std::string_view to_string(Family f) noexcept { return f == Family::Picard ? "picard" : "legendre"; }

bool is_admissible_picard(const Field& f, Element lambda, Element mu) noexcept {
  if (!f.contains(lambda) || !f.contains(mu)) return false;
  const Element one = f.one();
  return lambda.code != 0 && mu.code != 0 && lambda != one && mu != one && lambda != mu;
}

CurveParams CurveParams::picard(const Field& f, Element lambda, Element mu) {
  if (f.p() <= 3) throw InvalidInput("Picard curves need characteristic p > 3 (got p = " + std::to_string(f.p()) + ")");
  if (!f.contains(lambda) || !f.contains(mu)) throw InvalidInput("lambda and mu must be elements of F_" + std::to_string(f.q()));
  if (lambda.code == 0 || lambda == f.one() || mu.code == 0 || mu == f.one())
    throw InvalidInput("lambda and mu must avoid 0 and 1 (the quartic would have a repeated root)");
  if (lambda == mu) throw InvalidInput("lambda = mu gives coincident roots of the quartic");
  return CurveParams{Family::Picard, f, lambda, mu};
}

CurveParams CurveParams::legendre(const Field& f, Element lambda) {
  if (f.p() == 2) throw InvalidInput("the Legendre family needs odd q");
  if (!f.contains(lambda)) throw InvalidInput("lambda must be an element of F_" + std::to_string(f.q()));
  if (lambda.code == 0 || lambda == f.one()) throw InvalidInput("lambda must avoid 0 and 1");
  return CurveParams{Family::Legendre, f, lambda, Element{0}};
}

std::vector<std::pair<Element, Element>> admissible_pairs(const Field& f) {
  std::vector<std::pair<Element, Element>> out;
  for (std::uint32_t l = 0; l < f.q(); ++l)
    for (std::uint32_t m = 0; m < f.q(); ++m)
      if (is_admissible_picard(f, Element{l}, Element{m})) out.emplace_back(Element{l}, Element{m});
  return out;
}

void require_cubic_character(const Field& f) {
  if (f.q() % 3 != 1)
    throw InvalidInput("q = " + std::to_string(f.q()) + " is not 1 mod 3, so F_q has no cubic character");
}

namespace {

Element curve_rhs(const CurveParams& c, Element x) {
  const Field& f = c.field;
  Element v = f.mul(x, f.sub(x, f.one()));
  v = f.mul(v, f.sub(x, c.lambda));
  if (c.family == Family::Picard) v = f.mul(v, f.sub(x, c.mu));
  return v;
}

}  // namespace

std::int64_t count_bruteforce(const CurveParams& params) {
  const Field& f = params.field;
  const int degree = params.family == Family::Picard ? 3 : 2;
  std::vector<Element> powers(f.q());
  for (std::uint32_t y = 0; y < f.q(); ++y) powers[y] = f.pow(Element{y}, degree);
  std::int64_t affine = 0;
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    const Element v = curve_rhs(params, Element{x});
    for (const Element yy : powers)
      if (yy == v) ++affine;
  }
  return affine + 1;
}

std::int64_t count_charsum(const CurveParams& params) {
  if (params.family != Family::Picard) throw InvalidInput("the cubic character count applies to Picard curves");
  const Field& f = params.field;
  require_cubic_character(f);
  const Character chi3 = Character::cubic(f);
  RootSum sum(3);
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    const Element v = curve_rhs(params, Element{x});
    for (int j = 0; j < 3; ++j)
      if (const auto k = chi3.pow(j).log_value(v, ZeroConvention::PaperTrivialOne, 3)) sum.add_root(*k);
  }
  const auto total = (Cyclotomic(1) + sum.value()).as_integer();
  if (!total) throw IntegralityError("cubic character point count is not a rational integer");
  return *total;
}

std::int64_t trace_frobenius(const CurveParams& params) {
  return 1 + static_cast<std::int64_t>(params.field.q()) - count_bruteforce(params);
}

TheoremValue trace_via_theorem(const CurveParams& params, HypergeometricEvaluator& evaluator, F1Form form) {
  if (params.family != Family::Picard) throw InvalidInput("the F1 trace formula applies to Picard curves");
  const Field& f = params.field;
  require_cubic_character(f);
  if (!(evaluator.field() == f)) throw InvalidInput("evaluator field differs from curve field");
  const Character chi3 = Character::cubic(f);
  const Character eps = Character::trivial(f);

  TheoremValue out{Cyclotomic(0), std::nullopt, {Cyclotomic(0), Cyclotomic(0)}};
  for (int j = 1; j <= 2; ++j) {
    const Character chi = chi3.pow(j);
    const Cyclotomic sign = char_eval(chi3.pow(2 * j), f.minus_one(), ZeroConvention::GreeneAllZero);
    if (sign != Cyclotomic(1)) throw std::logic_error("chi3^(2j)(-1) != 1");
    out.terms[j - 1] = evaluator.ghosh_f1(F1Spec{chi, chi, chi, eps, params.lambda, params.mu}, form);
    out.value += sign * out.terms[j - 1];
  }
  out.value *= Rational(-static_cast<long>(f.q()));
  out.integer = out.value.as_integer();
  return out;
}

TheoremValue trace_via_theorem(const CurveParams& params, F1Form form) {
  HypergeometricEvaluator evaluator(params.field);
  return trace_via_theorem(params, evaluator, form);
}

Cyclotomic koike_rhs(const CurveParams& params, HypergeometricEvaluator& evaluator) {
  if (params.family != Family::Legendre) throw InvalidInput("the 2F1 trace formula applies to Legendre curves");
  const Field& f = params.field;
  const Character phi = Character::quadratic(f);
  const Character eps = Character::trivial(f);
  const Cyclotomic sign = char_eval(phi, f.minus_one(), ZeroConvention::GreeneAllZero);
  return Rational(-static_cast<long>(f.q())) * sign * evaluator.greene_2f1(Gauss2F1Spec{phi, phi, eps, params.lambda});
}

TraceReport picard_report(const CurveParams& params, HypergeometricEvaluator& evaluator) {
  TraceReport r{params};
  r.count = count_bruteforce(params);
  r.trace = 1 + static_cast<std::int64_t>(params.field.q()) - r.count;
  auto theorem = trace_via_theorem(params, evaluator);
  r.rhs = std::move(theorem.value);
  r.rhs_integer = theorem.integer;
  r.match = r.rhs_integer && *r.rhs_integer == r.trace;
  return r;
}

TraceReport picard_report(const CurveParams& params) {
  HypergeometricEvaluator evaluator(params.field);
  return picard_report(params, evaluator);
}

TraceReport koike_check(const CurveParams& params, HypergeometricEvaluator& evaluator) {
  TraceReport r{params};
  r.count = count_bruteforce(params);
  r.trace = 1 + static_cast<std::int64_t>(params.field.q()) - r.count;
  r.rhs = koike_rhs(params, evaluator);
  r.rhs_integer = r.rhs.as_integer();
  r.match = r.rhs_integer && *r.rhs_integer == r.trace;
  return r;
}

TraceReport koike_check(const CurveParams& params) {
  HypergeometricEvaluator evaluator(params.field);
  return koike_check(params, evaluator);
}

bool hasse_weil_ok(const TraceReport& report) {
  const std::int64_t genus = report.params.family == Family::Picard ? 3 : 1;
  const std::int64_t q = report.params.field.q();
  return report.trace * report.trace <= 4 * genus * genus * q;
}

}  // namespace ffhg
