#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "ffhg/cyclotomic.hpp"
#include "ffhg/error.hpp"

using namespace ffhg;

namespace {

std::complex<double> zeta(std::uint32_t n, std::int64_t k) {
  return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / n);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  auto poly = [](std::uint32_t n) {
    auto s = cyclotomic_polynomial(n);
    return std::vector<std::int64_t>(s.begin(), s.end());
  };
  CHECK(poly(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(poly(3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(poly(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(poly(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(poly(105)[7] == -2);
  for (std::uint32_t n = 1; n < 200; ++n) CHECK(poly(n).size() == euler_phi(n) + 1);
}

TEST_CASE("sum of all n-th roots vanishes") {
  for (std::uint32_t n : {2u, 3u, 5u, 6u, 12u, 18u, 30u}) {
    Cyclotomic s;
    for (std::uint32_t k = 0; k < n; ++k) s += Cyclotomic::root(n, k);
    CHECK(s.is_zero());
    CHECK(s.order() == 1);
  }
}

TEST_CASE("orders 2 mod 4 fold and rationals collapse") {
  const Cyclotomic z6 = Cyclotomic::root(6, 1);
  CHECK(z6.order() == 3);
  CHECK(z6 == -Cyclotomic::root(3, 2));
  CHECK(Cyclotomic::root(2, 1) == Cyclotomic(-1));
  CHECK(Cyclotomic::root(2, 1).order() == 1);
  CHECK((Cyclotomic::root(4, 1) * Cyclotomic::root(4, 1)) == Cyclotomic(-1));
  CHECK((Cyclotomic::root(4, 1) * Cyclotomic::root(4, 1)).order() == 1);
}

TEST_CASE("mixed orders lift to the lcm") {
  const Cyclotomic a = Cyclotomic::root(3, 1);
  const Cyclotomic b = Cyclotomic::root(4, 1);
  const Cyclotomic c = a * b;
  CHECK(c.order() == 12);
  CHECK(c == Cyclotomic::root(12, 7));
  const auto z = c.to_complex();
  CHECK(std::abs(z - zeta(3, 1) * zeta(4, 1)) < 1e-12);
  CHECK(a + b - b == a);
}

TEST_CASE("field arithmetic against complex embedding") {
  const std::uint32_t n = 21;
  Cyclotomic x = Cyclotomic::root(n, 1) * Rational(3, 7) + Cyclotomic::root(n, 5) - Cyclotomic(Rational(1, 2));
  Cyclotomic y = Cyclotomic::root(n, 2) * Rational(-5, 3) + Cyclotomic::root(n, 17) * Rational(2);
  const auto zx = 3.0 / 7 * zeta(n, 1) + zeta(n, 5) - 0.5;
  const auto zy = -5.0 / 3 * zeta(n, 2) + 2.0 * zeta(n, 17);
  CHECK(std::abs(x.to_complex() - zx) < 1e-12);
  CHECK(std::abs((x * y).to_complex() - zx * zy) < 1e-12);
  CHECK(std::abs((x - y).to_complex() - (zx - zy)) < 1e-12);
  CHECK(std::abs(x.conj().to_complex() - std::conj(zx)) < 1e-12);
  CHECK(std::abs(x.galois(2).to_complex() - (3.0 / 7 * zeta(n, 2) + zeta(n, 10) - 0.5)) < 1e-12);
  CHECK_THROWS_AS(x.galois(3), InvalidInput);
}

TEST_CASE("rational and integer views") {
  CHECK(Cyclotomic(Rational(3, 4)).as_rational() == Rational(3, 4));
  CHECK_FALSE(Cyclotomic(Rational(3, 4)).as_integer());
  CHECK(Cyclotomic(-5).as_integer() == -5);
  CHECK_FALSE(Cyclotomic::root(3, 1).as_rational());
  // zeta_3 + zeta_3^2 = -1
  CHECK((Cyclotomic::root(3, 1) + Cyclotomic::root(3, 2)).as_integer() == -1);
  // Gauss sum for p = 5 squares to 5
  Cyclotomic g;
  for (int k : {1, 4}) g += Cyclotomic::root(5, k);
  for (int k : {2, 3}) g -= Cyclotomic::root(5, k);
  CHECK((g * g).as_integer() == 5);
}

TEST_CASE("compressed finds the smallest subfield") {
  const std::uint32_t n = 12;
  const Cyclotomic w = Cyclotomic::root(n, 4);
  const Cyclotomic lifted = w + Cyclotomic::root(n, 1) - Cyclotomic::root(n, 1);
  const Cyclotomic c = lifted.compressed();
  CHECK(c.order() == 3);
  CHECK(c == Cyclotomic::root(3, 1));
  const Cyclotomic i = (Cyclotomic::root(12, 3) * Rational(2)).compressed();
  CHECK(i.order() == 4);
}

TEST_CASE("text round trip") {
  const Cyclotomic v = Cyclotomic::parse("1/7 - 2/7*z + z^2", 5);
  CHECK(v.order() == 5);
  CHECK(v.to_string() == "1/7 - 2/7*z + z^2");
  CHECK(Cyclotomic::parse(v.to_string(), 5) == v);
  CHECK(Cyclotomic().to_string() == "0");
  CHECK(Cyclotomic::parse("-z", 3).to_string() == "-z");
  CHECK_THROWS_AS(Cyclotomic::parse("1 + y", 3), InvalidInput);
}

TEST_CASE("coefficients reduce modulo the cyclotomic polynomial") {
  const std::vector<Rational> c{Rational(0), Rational(0), Rational(1)};
  const Cyclotomic v = Cyclotomic::from_coefficients(3, c);
  CHECK(v == -Cyclotomic::root(3, 1) - Cyclotomic(1));
  CHECK(v.coefficients().size() == 2);
}

TEST_CASE("root sums are the group ring") {
  RootSum a(6), b(6);
  a.add_root(1);
  a.add_root(2, -3);
  b.add_root(5, 2);
  const RootSum c = a * b;
  CHECK(c.counts()[0] == 2);
  CHECK(c.counts()[1] == -6);
  CHECK(c.value() == a.value() * b.value());
  CHECK(a.rotated(5).counts()[0] == 1);
  const std::vector<std::int64_t> counts{1, 1, 1};
  CHECK(Cyclotomic::from_root_counts(3, counts).is_zero());
  CHECK(a.value(4) == a.value() * Rational(1, 4));
}

TEST_CASE("root sum overflow is detected") {
  RootSum a(2);
  a.add_root(0, INT64_MAX);
  CHECK_THROWS_AS(a.add_root(0, 1), std::overflow_error);
}
