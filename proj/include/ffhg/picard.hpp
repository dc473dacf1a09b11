#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ffhg/cyclotomic.hpp"
#include "ffhg/field.hpp"
#include "ffhg/hypergeometric.hpp"

namespace ffhg {

enum class Family { Picard, Legendre };

std::string_view to_string(Family f) noexcept;

/// A member of the Picard family y^3 = x(x-1)(x-lambda)(x-mu) or of the
/// Legendre family y^2 = x(x-1)(x-lambda) over a given field.
struct CurveParams {
  Family family = Family::Picard;
  Field field;
  Element lambda;
  Element mu;  // unused for Legendre

  /// Requires p > 3 and distinct roots 0, 1, lambda, mu. Throws InvalidInput.
  static CurveParams picard(const Field& f, Element lambda, Element mu);
  /// Requires odd q and lambda not in {0, 1}. Throws InvalidInput.
  static CurveParams legendre(const Field& f, Element lambda);
};

/// Whether (lambda, mu) gives a Picard curve over f (p > 3 is not checked).
bool is_admissible_picard(const Field& f, Element lambda, Element mu) noexcept;
/// Every admissible (lambda, mu), ordered by (code(lambda), code(mu)).
std::vector<std::pair<Element, Element>> admissible_pairs(const Field& f);
/// Throws InvalidInput unless q = 1 (mod 3), i.e. a cubic character exists.
void require_cubic_character(const Field& f);

/// Projective point count by enumerating every affine (x, y), plus the single
/// point at infinity. The enumeration uses field arithmetic only.
std::int64_t count_bruteforce(const CurveParams& params);

/// 1 + sum_x sum_{j=0..2} chi3^j(f(x)) with eps(0) = 1 (Picard only, q = 1 mod 3).
/// Throws IntegralityError if the character sum fails to be an integer.
std::int64_t count_charsum(const CurveParams& params);

/// 1 + q - count_bruteforce(params)
std::int64_t trace_frobenius(const CurveParams& params);

struct TheoremValue {
  /// -q sum_j chi3^{2j}(-1) F1(chi3^j, chi3^j, chi3^j; eps | lambda, mu)
  Cyclotomic value;
  std::optional<std::int64_t> integer;
  /// F1 values for j = 1, 2
  std::array<Cyclotomic, 2> terms;
};

/// Right-hand side of the trace formula for a Picard curve. The F1 values are
/// computed in the requested form; the default single sum is O(q).
TheoremValue trace_via_theorem(const CurveParams& params, HypergeometricEvaluator& evaluator,
                               F1Form form = F1Form::SingleSum);
TheoremValue trace_via_theorem(const CurveParams& params, F1Form form = F1Form::SingleSum);

/// -q phi(-1) 2F1(phi, phi; eps | lambda) for a Legendre curve.
Cyclotomic koike_rhs(const CurveParams& params, HypergeometricEvaluator& evaluator);

struct TraceReport {
  CurveParams params;
  std::int64_t count = 0;
  std::int64_t trace = 0;
  Cyclotomic rhs;
  std::optional<std::int64_t> rhs_integer;
  bool match = false;
};

/// Brute-force trace against the trace formula for a Picard curve.
TraceReport picard_report(const CurveParams& params, HypergeometricEvaluator& evaluator);
TraceReport picard_report(const CurveParams& params);
/// Brute-force trace against the 2F1 expression for a Legendre curve.
TraceReport koike_check(const CurveParams& params, HypergeometricEvaluator& evaluator);
TraceReport koike_check(const CurveParams& params);

/// trace^2 <= 4 g^2 q with g = 3 (Picard) or 1 (Legendre), in exact integers.
bool hasse_weil_ok(const TraceReport& report);

}  // namespace ffhg
