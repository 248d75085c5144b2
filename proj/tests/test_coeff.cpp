#include <doctest.h>

#include <random>

#include "sfdga/coeff.hpp"
#include "sfdga/error.hpp"

using namespace sfdga;

namespace {
const RingSpec Z = RingSpec::integers();
const RingSpec Q = RingSpec::rationals();
const RingSpec Z6 = RingSpec::integers_mod(6);

Coefficient q(long n, long d) { return Coefficient(Q, mpq_class(n, d)); }
}  // namespace

TEST_CASE("ring strings round trip") {
  for (const char* s : {"int", "rat", "zmod:2", "zmod:6", "zmod:1000003"})
    CHECK(RingSpec::parse(s).to_string() == s);
  CHECK_THROWS_AS(RingSpec::parse("zmod:1"), Error);
  CHECK_THROWS_AS(RingSpec::parse("zmod:"), Error);
  CHECK_THROWS_AS(RingSpec::parse("real"), Error);
  CHECK(RingSpec::parse("zmod:7").is_field());
  CHECK_FALSE(Z6.is_field());
}

TEST_CASE("ring_add") {
  CHECK(ring_add(Coefficient(Z, 2), Coefficient(Z, 3)) == Coefficient(Z, 5));
  CHECK(ring_add(q(1, 2), q(1, 3)) == q(5, 6));
  CHECK(ring_add(Coefficient(Z6, 4), Coefficient(Z6, 5)) == Coefficient(Z6, 3));
}

TEST_CASE("ring_mul") {
  CHECK(ring_mul(Coefficient(Z, -1), Coefficient(Z, -1)) == Coefficient(Z, 1));
  CHECK(ring_mul(q(2, 3), q(3, 4)) == q(1, 2));
  CHECK(ring_mul(Coefficient(Z6, 2), Coefficient(Z6, 3)).is_zero());
}

TEST_CASE("mixed rings are rejected") {
  try {
    (void)(Coefficient(Z, 1) + Coefficient(Q, 1));
    FAIL("expected MixedRings");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MixedRings);
  }
  CHECK_THROWS_AS((void)(Coefficient(Z6, 1) * Coefficient(RingSpec::integers_mod(5), 1)), Error);
}

TEST_CASE("units and inverses") {
  CHECK(Coefficient(Z, -1).is_unit());
  CHECK(Coefficient(Z, -1).unit_inverse() == Coefficient(Z, -1));
  CHECK_FALSE(Coefficient(Z, 2).is_unit());
  CHECK(q(2, 3).is_unit());
  CHECK(q(2, 3).unit_inverse() == q(3, 2));
  CHECK(Coefficient(Z6, 5).is_unit());
  CHECK(Coefficient(Z6, 5).unit_inverse() == Coefficient(Z6, 5));
  CHECK_FALSE(Coefficient(Z6, 2).is_unit());
  try {
    (void)Coefficient(Z6, 2).unit_inverse();
    FAIL("expected NotAUnit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAUnit);
  }
}

TEST_CASE("canonical forms") {
  CHECK(Coefficient(Z6, -1).to_string() == "5");
  CHECK(Coefficient(Z6, 13).to_string() == "1");
  CHECK(Coefficient(Q, mpq_class(4, -6)).to_string() == "-2/3");
  CHECK(Coefficient::parse(Q, "6/4") == q(3, 2));
  CHECK(Coefficient::parse(RingSpec::integers_mod(7), "1/2") == Coefficient(RingSpec::integers_mod(7), 4));
  CHECK_THROWS_AS(Coefficient::parse(Z, "1/2"), Error);
  CHECK_THROWS_AS(Coefficient::parse(Z6, "1/2"), Error);
  Coefficient c = Coefficient::parse(Q, "-10/4");
  CHECK(Coefficient(Q, c.value()) == c);
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
  for (RingSpec ring : {Z, Q, Z6, RingSpec::integers_mod(2), RingSpec::integers_mod(97)}) {
    auto sample = [&] {
      if (ring.kind() == RingKind::Rationals) return Coefficient(ring, mpq_class(num(rng), den(rng)));
      return Coefficient(ring, num(rng));
    };
    Coefficient zero = Coefficient::zero(ring), one = Coefficient::one(ring);
    for (int i = 0; i < 200; ++i) {
      auto a = sample(), b = sample(), c = sample();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK((a + -a).is_zero());
      if (a.is_unit()) CHECK((a.unit_inverse() * a).is_one());
      CHECK(Coefficient(ring, a.value()) == a);
    }
  }
}
