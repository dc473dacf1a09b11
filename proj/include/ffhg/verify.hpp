#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ffhg/character.hpp"
#include "ffhg/field.hpp"
#include "ffhg/picard.hpp"

namespace ffhg {

/// Cases and mismatches for one field (or one sub-check) of a sweep.
struct CaseGroup {
  std::string label;
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
};

/// Outcome of one verification target. Mismatch rows carry the exact values of
/// both sides; only the first kMaxRows are kept, the counts are complete.
struct VerifySummary {
  static constexpr std::size_t kMaxRows = 64;

  std::string target;
  std::vector<CaseGroup> groups;
  std::vector<std::string> mismatch_rows;

  std::uint64_t total_cases() const noexcept;
  std::uint64_t total_mismatches() const noexcept;
  bool ok() const noexcept { return total_mismatches() == 0; }

  void record(CaseGroup& group, bool equal, const std::string& row);
};

void print_summary(std::ostream& os, const VerifySummary& summary);

/// {eps, chi3, chi3^2, phi}, keeping only those that exist on f.
std::vector<Character> standard_characters(const Field& f);

/// Fields F_p for primes p = 1 (mod 3) with p_min <= p <= p_max.
std::vector<Field> primes_one_mod_three(std::uint32_t p_min, std::uint32_t p_max);
/// Fields F_p for odd primes p_min <= p <= p_max.
std::vector<Field> odd_primes(std::uint32_t p_min, std::uint32_t p_max);

/// trace_via_theorem against trace_frobenius for every admissible (lambda, mu).
/// When `reports` is given, every computed report is appended to it.
VerifySummary verify_theorem(const std::vector<Field>& fields, unsigned jobs = 1,
                             std::vector<TraceReport>* reports = nullptr);

/// count_charsum against count_bruteforce for every admissible (lambda, mu).
VerifySummary verify_counting(const std::vector<Field>& fields, unsigned jobs = 1);

/// 1 + q - #E against -q phi(-1) 2F1(phi, phi; eps | lambda), every lambda.
VerifySummary verify_koike(const std::vector<Field>& fields, unsigned jobs = 1);

/// The three normalized-binomial identities over all characters (and all t
/// for the expansion identity) under the given convention.
VerifySummary verify_lemma21(const std::vector<Field>& fields, ZeroConvention conv = ZeroConvention::GreeneAllZero);

/// Double-sum definition against the single sum, all xy != 0, all quadruples
/// over standard_characters().
VerifySummary verify_lemma22(const std::vector<Field>& fields);

/// Definition = single sum = inverted sum, all xy != 0, all quadruples over
/// standard_characters() for each field, plus `samples` seeded random
/// quadruples over `random_field` when given.
VerifySummary verify_f1_forms(const std::vector<Field>& fields, const std::optional<Field>& random_field,
                              std::size_t samples, std::uint64_t seed);

}  // namespace ffhg
