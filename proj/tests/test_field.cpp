#include <doctest.h>

#include <set>
#include <vector>

#include "ffhg/error.hpp"
#include "ffhg/field.hpp"

using namespace ffhg;

namespace {

std::vector<std::uint32_t> modulus_of(const Field& f) { return {f.modulus().begin(), f.modulus().end()}; }

}  // namespace

TEST_CASE("prime fields use x as modulus and the smallest primitive root") {
  const Field f7 = Field::make(7, 1);
  CHECK(f7.q() == 7);
  CHECK(modulus_of(f7) == std::vector<std::uint32_t>{0, 1});
  CHECK(f7.generator().code == 3);
  CHECK(f7.dlog(Element{2}) == 2);
  CHECK(Field::make(13, 1).generator().code == 2);
  CHECK(Field::make(31, 1).generator().code == 3);
}

TEST_CASE("extension moduli are the lexicographically smallest irreducibles") {
  CHECK(modulus_of(Field::make(5, 2)) == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::make(5, 2).generator().code == 7);
  CHECK(modulus_of(Field::of_order(4)) == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(modulus_of(Field::of_order(8)) == std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK(modulus_of(Field::of_order(9)) == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("F4 multiplication") {
  const Field f = Field::of_order(4);
  CHECK(f.mul(Element{2}, Element{2}).code == 3);
  CHECK(f.mul(Element{2}, Element{3}).code == 1);
  CHECK(f.add(Element{2}, Element{3}).code == 1);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (const std::uint64_t q : {2u, 3u, 4u, 7u, 8u, 9u, 16u, 25u, 27u}) {
    const Field f = Field::of_order(q);
    CAPTURE(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      const Element x{a};
      CHECK(f.add(x, f.neg(x)) == f.zero());
      CHECK(f.mul(x, f.one()) == x);
      if (a != 0) CHECK(f.mul(x, f.inv(x)) == f.one());
      for (std::uint32_t b = 0; b < q; ++b) {
        const Element y{b};
        CHECK(f.add(x, y) == f.add(y, x));
        CHECK(f.mul(x, y) == f.mul(y, x));
        CHECK(f.sub(f.add(x, y), y) == x);
        const Element z{(a * 7 + b * 3) % static_cast<std::uint32_t>(q)};
        CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
      }
    }
  }
}

TEST_CASE("generator has full order and exp/dlog are inverse") {
  for (const std::uint64_t q : {5u, 7u, 16u, 25u, 49u, 81u, 121u, 125u}) {
    const Field f = Field::of_order(q);
    std::set<std::uint32_t> seen;
    for (std::uint32_t k = 0; k < f.group_order(); ++k) seen.insert(f.exp(k).code);
    CHECK(seen.size() == f.group_order());
    CHECK(seen.count(0) == 0);
    for (std::uint32_t a = 1; a < q; ++a) CHECK(f.exp(f.dlog(Element{a})) == Element{a});
    // every smaller code fails to generate
    for (std::uint32_t a = 2; a < f.generator().code; ++a) {
      std::uint32_t order = 1;
      for (Element x{a}; x != f.one(); x = f.mul(x, Element{a})) ++order;
      CHECK(order < f.group_order());
    }
  }
}

TEST_CASE("minus one and integers") {
  const Field f = Field::of_order(25);
  CHECK(f.minus_one().code == 4);
  CHECK(f.from_integer(-1) == f.minus_one());
  CHECK(f.from_integer(12).code == 2);
  CHECK(Field::of_order(16).minus_one() == Field::of_order(16).one());
  CHECK(f.digits(Element{7}) == std::vector<std::uint32_t>{2, 1});
}

TEST_CASE("powers") {
  const Field f = Field::make(7, 1);
  CHECK(f.pow(Element{3}, 6) == f.one());
  CHECK(f.pow(Element{3}, -1) == f.inv(Element{3}));
  CHECK(f.pow(f.zero(), 0) == f.one());
  CHECK(f.pow(f.zero(), 5) == f.zero());
  CHECK_THROWS_AS(f.pow(f.zero(), -1), InvalidInput);
}

TEST_CASE("invalid construction and elements") {
  CHECK_THROWS_AS(Field::of_order(12), InvalidInput);
  CHECK_THROWS_AS(Field::of_order(1), InvalidInput);
  CHECK_THROWS_AS(Field::make(4, 1), InvalidInput);
  CHECK_THROWS_AS(Field::make(7, 0), InvalidInput);
  CHECK_THROWS_AS(Field::of_order((1u << 20) + 7), InvalidInput);
  const Field f = Field::make(7, 1);
  CHECK_THROWS_AS(f.element(7), InvalidInput);
  CHECK_THROWS_AS(f.inv(f.zero()), InvalidInput);
  CHECK_THROWS_AS(f.dlog(f.zero()), InvalidInput);
}

TEST_CASE("prime helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(1048573));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
}
