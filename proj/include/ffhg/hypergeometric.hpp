#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ffhg/character.hpp"
#include "ffhg/cyclotomic.hpp"
#include "ffhg/field.hpp"

namespace ffhg {

/// Arguments of Greene's 2F1(A, B; C | x).
struct Gauss2F1Spec {
  Character a, b, c;
  Element x;
};

/// Arguments of the two-variable F1(A; B1, B2; C | x, y).
struct F1Spec {
  Character a, b1, b2, c;
  Element x, y;
};

enum class F1Form {
  /// Double character sum over (chi1, chi2).
  Definition,
  /// Single sum over t: A(t) conj(A)C(1-t) conj(B1)(1-xt) conj(B2)(1-yt).
  SingleSum,
  /// Single sum after s = 1/t.
  Inverted,
};

std::string_view to_string(F1Form f) noexcept;
/// Accepts "def", "single", "inverted".
F1Form parse_f1_form(std::string_view text);

/// First binomial of the F1 double sum.
enum class F1Binomial {
  /// (A chi over C chi): the defining form, equal to the single sum.
  AsPrinted,
  /// (A chi over conj(A) C): kept for the equivalence test that rejects it.
  ProofVariant,
};

/// Evaluates the finite-field hypergeometric functions over one field.
///
/// Every normalized binomial inside the sums uses ZeroConvention::GreeneAllZero.
/// The argument factors chi(x), chi1(x), chi2(y) of the character-sum forms use
/// eps(0) = 1, so at x = 0 the trivial-character term survives. The single-sum
/// F1 forms are defined only for xy != 0 and throw OutOfDomain otherwise.
///
/// Scaled binomials q (A over B) are cached lazily, so an evaluator must not be
/// shared between threads; construct one per worker.
class HypergeometricEvaluator {
 public:
  explicit HypergeometricEvaluator(Field field);

  const Field& field() const noexcept { return field_; }

  Cyclotomic greene_2f1(const Gauss2F1Spec& spec);
  /// 2F1(A, B; C | x) for every x, indexed by element code.
  std::vector<Cyclotomic> greene_2f1_all(const Character& a, const Character& b, const Character& c);

  Cyclotomic ghosh_f1_def(const F1Spec& spec, F1Binomial variant = F1Binomial::AsPrinted);
  /// The double-sum form for every (x, y); entry x.code * q + y.code.
  std::vector<Cyclotomic> ghosh_f1_def_grid(const Character& a, const Character& b1, const Character& b2,
                                            const Character& c, F1Binomial variant = F1Binomial::AsPrinted);
  Cyclotomic ghosh_f1_single(const F1Spec& spec) const;
  Cyclotomic ghosh_f1_inverted(const F1Spec& spec) const;
  Cyclotomic ghosh_f1(const F1Spec& spec, F1Form form);

  /// q (chi_a over chi_b) = chi_b(-1) J(chi_a, conj chi_b) as a root sum of
  /// order q - 1; a and b are character exponents.
  const RootSum& scaled_binomial(std::uint32_t a, std::uint32_t b);

 private:
  std::uint32_t reduce(std::int64_t m) const;
  std::uint32_t check(const Character& chi) const;
  RootSum f1_coefficient(std::uint32_t a, std::uint32_t b1, std::uint32_t b2, std::uint32_t c, std::uint32_t m1,
                         std::uint32_t m2, F1Binomial variant);

  Field field_;
  std::uint32_t n_;
  std::uint32_t log_minus_one_;
  // dlog pairs (dlog t, dlog (1 - t)) for t not in {0, 1}
  std::vector<std::pair<std::uint32_t, std::uint32_t>> jacobi_points_;
  std::unordered_map<std::uint64_t, RootSum> binomials_;
};

/// Convenience wrappers over a throwaway evaluator.
Cyclotomic greene_2f1(const Gauss2F1Spec& spec);
Cyclotomic ghosh_f1_def(const F1Spec& spec, F1Binomial variant = F1Binomial::AsPrinted);
Cyclotomic ghosh_f1_single(const F1Spec& spec);
Cyclotomic ghosh_f1_inverted(const F1Spec& spec);

}  // namespace ffhg
