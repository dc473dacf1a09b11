#include <doctest.h>

#include <cmath>

#include "ffhg/error.hpp"
#include "ffhg/picard.hpp"

using namespace ffhg;

namespace {

// Plain modular arithmetic, prime fields only; the point at infinity adds one.
std::int64_t naive_count(std::int64_t p, std::int64_t lambda, std::int64_t mu, int degree) {
  std::int64_t count = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t rhs = x * (x - 1 + p) % p * ((x - lambda + p) % p) % p;
    if (degree == 3) rhs = rhs * ((x - mu + p) % p) % p;
    for (std::int64_t y = 0; y < p; ++y) {
      const std::int64_t lhs = degree == 3 ? y * y % p * y % p : y * y % p;
      if (lhs == rhs) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("frozen Picard counts") {
  struct Row {
    std::uint32_t q, lambda, mu;
    std::int64_t count, trace;
  };
  for (const Row r : {Row{7, 2, 3, 8, 0}, Row{13, 2, 3, 11, 3}, Row{19, 2, 3, 17, 3}, Row{31, 5, 7, 35, -3}}) {
    const Field f = Field::of_order(r.q);
    const auto params = CurveParams::picard(f, Element{r.lambda}, Element{r.mu});
    CHECK(count_bruteforce(params) == r.count);
    CHECK(count_charsum(params) == r.count);
    CHECK(trace_frobenius(params) == r.trace);
    const auto theorem = trace_via_theorem(params);
    CHECK(theorem.integer == r.trace);
  }
}

TEST_CASE("frozen Legendre counts") {
  struct Row {
    std::uint32_t p, lambda;
    std::int64_t count, trace;
  };
  for (const Row r : {Row{5, 2, 8, -2}, Row{7, 2, 8, 0}, Row{7, 3, 4, 4}, Row{11, 5, 8, 4}}) {
    const auto params = CurveParams::legendre(Field::make(r.p, 1), Element{r.lambda});
    CHECK(count_bruteforce(params) == r.count);
    CHECK(trace_frobenius(params) == r.trace);
    const auto report = koike_check(params);
    CHECK(report.match);
    CHECK(report.rhs_integer == r.trace);
  }
}

TEST_CASE("brute-force counts agree with plain modular arithmetic") {
  for (const std::uint32_t p : {7u, 13u, 19u}) {
    const Field f = Field::make(p, 1);
    for (const auto& [l, m] : admissible_pairs(f))
      CHECK(count_bruteforce(CurveParams::picard(f, l, m)) == naive_count(p, l.code, m.code, 3));
    for (std::uint32_t l = 2; l < p; ++l)
      CHECK(count_bruteforce(CurveParams::legendre(f, Element{l})) == naive_count(p, l, 0, 2));
  }
}

TEST_CASE("admissible pairs") {
  const Field f = Field::of_order(7);
  const auto pairs = admissible_pairs(f);
  CHECK(pairs.size() == 20);
  CHECK(pairs.front().first.code == 2);
  CHECK(pairs.front().second.code == 3);
  CHECK(admissible_pairs(Field::of_order(13)).size() == 110);
  CHECK(is_admissible_picard(f, Element{2}, Element{3}));
  CHECK_FALSE(is_admissible_picard(f, Element{2}, Element{2}));
  CHECK_FALSE(is_admissible_picard(f, Element{0}, Element{3}));
  CHECK_FALSE(is_admissible_picard(f, Element{1}, Element{3}));
}

TEST_CASE("invalid curves") {
  const Field f7 = Field::of_order(7);
  CHECK_THROWS_AS(CurveParams::picard(f7, Element{2}, Element{2}), InvalidInput);
  CHECK_THROWS_AS(CurveParams::picard(f7, Element{1}, Element{3}), InvalidInput);
  CHECK_THROWS_AS(CurveParams::picard(Field::of_order(9), Element{2}, Element{3}), InvalidInput);
  CHECK_THROWS_AS(CurveParams::legendre(Field::of_order(8), Element{2}), InvalidInput);
  CHECK_THROWS_AS(CurveParams::legendre(f7, Element{0}), InvalidInput);
  const auto no_cubic = CurveParams::picard(Field::of_order(11), Element{2}, Element{3});
  CHECK_THROWS_AS(count_charsum(no_cubic), InvalidInput);
  CHECK_THROWS_AS(trace_via_theorem(no_cubic), InvalidInput);
  CHECK_NOTHROW(count_bruteforce(no_cubic));
}

TEST_CASE("theorem holds over F25 in every form") {
  const Field f = Field::of_order(25);
  HypergeometricEvaluator ev(f);
  for (const auto& [l, m] : admissible_pairs(f)) {
    const auto params = CurveParams::picard(f, l, m);
    const std::int64_t trace = trace_frobenius(params);
    CHECK(trace_via_theorem(params, ev, F1Form::SingleSum).integer == trace);
    if (l.code % 5 == 0) CHECK(trace_via_theorem(params, ev, F1Form::Definition).integer == trace);
  }
}

TEST_CASE("Hasse-Weil bound and conjugate terms") {
  const Field f = Field::of_order(37);
  HypergeometricEvaluator ev(f);
  for (const auto& [l, m] : admissible_pairs(f)) {
    const auto params = CurveParams::picard(f, l, m);
    const auto report = picard_report(params, ev);
    CHECK(report.match);
    CHECK(hasse_weil_ok(report));
    CHECK(std::abs(report.trace) <= 6 * std::sqrt(37.0));
    const auto theorem = trace_via_theorem(params, ev);
    CHECK(theorem.terms[0].conj() == theorem.terms[1]);
  }
}

TEST_CASE("swapping lambda and mu leaves the curve unchanged") {
  const Field f = Field::of_order(13);
  for (const auto& [l, m] : admissible_pairs(f)) {
    const auto a = trace_via_theorem(CurveParams::picard(f, l, m));
    const auto b = trace_via_theorem(CurveParams::picard(f, m, l));
    CHECK(a.value == b.value);
  }
}
