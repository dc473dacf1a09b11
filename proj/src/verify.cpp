#include "ffhg/verify.hpp"

#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "ffhg/hypergeometric.hpp"
#include "ffhg/report.hpp"

namespace ffhg {

std::uint64_t VerifySummary::total_cases() const noexcept {
  std::uint64_t n = 0;
  for (const auto& g : groups) n += g.cases;
  return n;
}

std::uint64_t VerifySummary::total_mismatches() const noexcept {
  std::uint64_t n = 0;
  for (const auto& g : groups) n += g.mismatches;
  return n;
}

void VerifySummary::record(CaseGroup& group, bool equal, const std::string& row) {
  ++group.cases;
  if (equal) return;
  ++group.mismatches;
  if (mismatch_rows.size() < kMaxRows) mismatch_rows.push_back(row);
}

void print_summary(std::ostream& os, const VerifySummary& s) {
  os << "verify " << s.target << '\n';
  os << std::left << std::setw(28) << "group" << std::right << std::setw(12) << "cases" << std::setw(12) << "mismatches"
     << '\n';
  for (const auto& g : s.groups)
    os << std::left << std::setw(28) << g.label << std::right << std::setw(12) << g.cases << std::setw(12)
       << g.mismatches << '\n';
  os << std::left << std::setw(28) << "total" << std::right << std::setw(12) << s.total_cases() << std::setw(12)
     << s.total_mismatches() << '\n';
  if (!s.mismatch_rows.empty()) {
    os << "mismatches:\n";
    for (const auto& row : s.mismatch_rows) os << "  " << row << '\n';
    if (s.mismatch_rows.size() < s.total_mismatches())
      os << "  ... " << (s.total_mismatches() - s.mismatch_rows.size()) << " more\n";
  }
  os << (s.ok() ? "OK" : "FAILED") << '\n';
}

std::vector<Character> standard_characters(const Field& f) {
  std::vector<Character> out{Character::trivial(f)};
  const std::uint32_t n = f.group_order();
  if (n % 3 == 0) {
    out.push_back(Character::cubic(f));
    out.push_back(Character::cubic(f).pow(2));
  }
  if (n % 2 == 0) out.push_back(Character::quadratic(f));
  return out;
}

std::vector<Field> primes_one_mod_three(std::uint32_t p_min, std::uint32_t p_max) {
  std::vector<Field> out;
  for (std::uint32_t p = std::max(p_min, 5u); p <= p_max; ++p)
    if (p % 3 == 1 && is_prime(p)) out.push_back(Field::make(p, 1));
  return out;
}

std::vector<Field> odd_primes(std::uint32_t p_min, std::uint32_t p_max) {
  std::vector<Field> out;
  for (std::uint32_t p = std::max(p_min, 3u); p <= p_max; ++p)
    if (is_prime(p)) out.push_back(Field::make(p, 1));
  return out;
}

namespace {

std::string field_label(const Field& f) { return "q=" + std::to_string(f.q()); }

std::string quad_label(const Character& a, const Character& b1, const Character& b2, const Character& c) {
  std::ostringstream os;
  os << "A=" << a.exponent() << " B1=" << b1.exponent() << " B2=" << b2.exponent() << " C=" << c.exponent();
  return os.str();
}

}  // namespace

VerifySummary verify_theorem(const std::vector<Field>& fields, unsigned jobs, std::vector<TraceReport>* reports) {
  VerifySummary s{"theorem"};
  for (const auto& f : fields) {
    CaseGroup group{field_label(f)};
    for (auto& r : picard_table(f, jobs)) {
      std::ostringstream row;
      row << "q=" << f.q() << " lambda=" << r.params.lambda.code << " mu=" << r.params.mu.code << " trace=" << r.trace
          << " rhs=" << r.rhs.to_string() << " (order " << r.rhs.order() << ")";
      s.record(group, r.match, row.str());
      if (reports) reports->push_back(std::move(r));
    }
    s.groups.push_back(group);
  }
  return s;
}

VerifySummary verify_counting(const std::vector<Field>& fields, unsigned jobs) {
  VerifySummary s{"counting"};
  for (const auto& f : fields) {
    require_cubic_character(f);
    const auto pairs = admissible_pairs(f);
    std::vector<std::pair<std::int64_t, std::int64_t>> counts(pairs.size());
    parallel_shards(pairs.size(), jobs, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const auto params = CurveParams::picard(f, pairs[i].first, pairs[i].second);
        counts[i] = {count_bruteforce(params), count_charsum(params)};
      }
    });
    CaseGroup group{field_label(f)};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      std::ostringstream row;
      row << "q=" << f.q() << " lambda=" << pairs[i].first.code << " mu=" << pairs[i].second.code
          << " bruteforce=" << counts[i].first << " charsum=" << counts[i].second;
      s.record(group, counts[i].first == counts[i].second, row.str());
    }
    s.groups.push_back(group);
  }
  return s;
}

VerifySummary verify_koike(const std::vector<Field>& fields, unsigned jobs) {
  VerifySummary s{"koike"};
  for (const auto& f : fields) {
    HypergeometricEvaluator evaluator(f);
    const Character phi = Character::quadratic(f);
    const auto values = evaluator.greene_2f1_all(phi, phi, Character::trivial(f));
    const Cyclotomic scale =
        Rational(-static_cast<long>(f.q())) * char_eval(phi, f.minus_one(), ZeroConvention::GreeneAllZero);

    std::vector<std::int64_t> traces(f.q(), 0);
    parallel_shards(f.q(), jobs, [&](std::size_t begin, std::size_t end) {
      for (std::size_t l = std::max<std::size_t>(begin, 2); l < end; ++l)
        traces[l] = trace_frobenius(CurveParams::legendre(f, Element{static_cast<std::uint32_t>(l)}));
    });
    CaseGroup group{field_label(f)};
    for (std::uint32_t l = 2; l < f.q(); ++l) {
      const Cyclotomic rhs = scale * values[l];
      const auto rhs_int = rhs.as_integer();
      std::ostringstream row;
      row << "q=" << f.q() << " lambda=" << l << " trace=" << traces[l] << " rhs=" << rhs.to_string() << " (order "
          << rhs.order() << ")";
      s.record(group, rhs_int && *rhs_int == traces[l], row.str());
    }
    s.groups.push_back(group);
  }
  return s;
}

VerifySummary verify_lemma21(const std::vector<Field>& fields, ZeroConvention conv) {
  VerifySummary s{"lemma21 (" + std::string(to_string(conv)) + ")"};
  for (const auto& f : fields) {
    const std::uint32_t n = f.group_order();
    CaseGroup expansion{field_label(f) + " expansion"};
    CaseGroup jacobi{field_label(f) + " jacobi-binomial"};
    CaseGroup reflection{field_label(f) + " reflection"};
    for (std::uint32_t a = 0; a < n; ++a) {
      const Character A(f, a);
      for (std::uint32_t t = 0; t < f.q(); ++t) {
        const Element te{t};
        const Cyclotomic lhs = char_eval(A.conj(), f.sub(f.one(), te), conv);
        const Cyclotomic rhs = lemma21_expand(A, te, conv);
        std::ostringstream row;
        row << "expansion q=" << f.q() << " A=" << a << " t=" << t << " lhs=" << lhs.to_string() << " (order "
            << lhs.order() << ") rhs=" << rhs.to_string() << " (order " << rhs.order() << ")";
        s.record(expansion, lhs == rhs, row.str());
      }
      for (std::uint32_t b = 0; b < n; ++b) {
        const Character B(f, b);
        const auto [j_lhs, j_rhs] = lemma21_jacobi_binomial(A, B, conv);
        s.record(jacobi, j_lhs == j_rhs,
                 "jacobi-binomial q=" + std::to_string(f.q()) + " A=" + std::to_string(a) + " B=" + std::to_string(b) +
                     " lhs=" + j_lhs.to_string() + " rhs=" + j_rhs.to_string());
        const auto [r_lhs, r_rhs] = lemma21_reflection(A, B, conv);
        s.record(reflection, r_lhs == r_rhs,
                 "reflection q=" + std::to_string(f.q()) + " A=" + std::to_string(a) + " B=" + std::to_string(b) +
                     " lhs=" + r_lhs.to_string() + " rhs=" + r_rhs.to_string());
      }
    }
    s.groups.push_back(expansion);
    s.groups.push_back(jacobi);
    s.groups.push_back(reflection);
  }
  return s;
}

namespace {

// Compares the double-sum grid with the single (and optionally inverted) sums
// at every xy != 0 for one character quadruple.
void compare_forms(VerifySummary& s, CaseGroup& group, HypergeometricEvaluator& ev, const Character& a,
                   const Character& b1, const Character& b2, const Character& c, bool with_inverted) {
  const Field& f = ev.field();
  const auto grid = ev.ghosh_f1_def_grid(a, b1, b2, c);
  for (std::uint32_t x = 1; x < f.q(); ++x) {
    for (std::uint32_t y = 1; y < f.q(); ++y) {
      const F1Spec spec{a, b1, b2, c, Element{x}, Element{y}};
      const Cyclotomic& def = grid[std::size_t{x} * f.q() + y];
      const Cyclotomic single = ev.ghosh_f1_single(spec);
      bool equal = def == single;
      std::ostringstream row;
      row << "q=" << f.q() << " " << quad_label(a, b1, b2, c) << " x=" << x << " y=" << y << " def=" << def.to_string()
          << " (order " << def.order() << ") single=" << single.to_string() << " (order " << single.order() << ")";
      if (with_inverted) {
        const Cyclotomic inverted = ev.ghosh_f1_inverted(spec);
        equal = equal && single == inverted;
        row << " inverted=" << inverted.to_string() << " (order " << inverted.order() << ")";
      }
      s.record(group, equal, row.str());
    }
  }
}

}  // namespace

VerifySummary verify_lemma22(const std::vector<Field>& fields) {
  VerifySummary s{"lemma22"};
  for (const auto& f : fields) {
    HypergeometricEvaluator ev(f);
    const auto chars = standard_characters(f);
    CaseGroup group{field_label(f)};
    for (const auto& a : chars)
      for (const auto& b1 : chars)
        for (const auto& b2 : chars)
          for (const auto& c : chars) compare_forms(s, group, ev, a, b1, b2, c, false);
    s.groups.push_back(group);
  }
  return s;
}

VerifySummary verify_f1_forms(const std::vector<Field>& fields, const std::optional<Field>& random_field,
                              std::size_t samples, std::uint64_t seed) {
  VerifySummary s{"f1-forms"};
  for (const auto& f : fields) {
    HypergeometricEvaluator ev(f);
    const auto chars = standard_characters(f);
    CaseGroup group{field_label(f) + " standard"};
    for (const auto& a : chars)
      for (const auto& b1 : chars)
        for (const auto& b2 : chars)
          for (const auto& c : chars) compare_forms(s, group, ev, a, b1, b2, c, true);
    s.groups.push_back(group);
  }
  if (random_field && samples > 0) {
    const Field& f = *random_field;
    HypergeometricEvaluator ev(f);
    std::mt19937_64 rng(seed);
    const std::uint64_t n = f.group_order();
    auto draw = [&] { return Character(f, static_cast<std::int64_t>(rng() % n)); };
    CaseGroup group{field_label(f) + " random x" + std::to_string(samples)};
    for (std::size_t i = 0; i < samples; ++i) {
      const Character a = draw(), b1 = draw(), b2 = draw(), c = draw();
      compare_forms(s, group, ev, a, b1, b2, c, true);
    }
    s.groups.push_back(group);
  }
  return s;
}

}  // namespace ffhg
