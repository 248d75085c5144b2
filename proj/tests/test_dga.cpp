#include <doctest.h>

#include "helpers.hpp"
#include "sfdga/dga.hpp"
#include "sfdga/error.hpp"
#include "sfdga/ideal.hpp"
#include "sfdga/reduce.hpp"

using namespace sfdga;
using sfdga::testing::P;

namespace {

AlgebraPresentation algebra(const std::string& text, RingSpec ring = RingSpec::integers()) {
  return std::get<AlgebraPresentation>(parse_presentation(text, ring));
}

GroupPresentation group(const std::string& text) {
  return std::get<GroupPresentation>(parse_presentation(text, RingSpec::integers()));
}

// Generators in degrees 0..3 where signs in the Leibniz rule matter:
// d(a) = x - 1, d(b) = x^2 - 1, d(e) = a*(x + 1) - b, d(c) = d(a*e).
SemifreeDga graded_example() {
  auto s = make_signature(RingSpec::integers(), {{"x", 0}, {"a", 1}, {"b", 1}, {"e", 2}, {"c", 3}});
  std::vector<NcPoly> d{NcPoly::zero(s), P(s, "x - 1"), P(s, "x^2 - 1"), P(s, "a*(x + 1) - b"), NcPoly::zero(s)};
  SemifreeDga partial(s, d);
  d[4] = leibniz_extend(partial, P(s, "a*e"));
  return SemifreeDga(s, d);
}

std::vector<SemifreeDga> corpus() {
  std::vector<SemifreeDga> out;
  for (const char* g : {"group T = < g | g >", "group Z = < a | >", "group K = < a, b | a*b*a^-1*b^-1 >",
                        "group S = < a, b | a^2, b^3, a*b*a^-1*b^-2 >"}) {
    auto pair = group_to_dgas(group(g), RingSpec::integers());
    out.push_back(pair.a);
    out.push_back(pair.b);
  }
  for (const char* a : {"algebra A = < x1, x2 | x1*x2 - 1 >", "algebra B = < x, y | x*y - y*x - 1, x^2 >"}) {
    auto pair = algebra_to_dgas(algebra(a));
    out.push_back(pair.a);
    out.push_back(pair.b);
  }
  out.push_back(graded_example());
  out.push_back(stabilize(stabilize(graded_example(), 0), 3));
  return out;
}

}  // namespace

TEST_CASE("leibniz_extend examples") {
  auto pair = algebra_to_dgas(algebra("algebra A = < x1, x2 | x1*x2 - 1, x2 >"));
  const auto& a = pair.a;
  const auto& s = a.signature();
  CHECK(leibniz_extend(a, NcPoly::one(s)).is_zero());
  CHECK(leibniz_extend(a, P(s, "r1")) == P(s, "x1*x2 - 1"));
  CHECK(leibniz_extend(a, P(s, "r2")) == P(s, "x2"));
  // d(r1 r2) = d(r1) r2 - r1 d(r2)
  CHECK(leibniz_extend(a, P(s, "r1*r2")) == P(s, "(x1*x2 - 1)*r2 - r1*x2"));
  // Degree-0 letters contribute no sign.
  CHECK(leibniz_extend(a, P(s, "x1*r2*x2")) == P(s, "x1*x2*x2"));
}

TEST_CASE("validate") {
  for (const char* g : {"group T = < g | g >", "group Z = < a | >", "group E = < | >"}) {
    auto pair = group_to_dgas(group(g), RingSpec::integers());
    CHECK(validate(pair.a).passed());
    CHECK(validate(pair.b).passed());
  }
  auto bad_degree = make_signature(RingSpec::integers(), {{"x", 0}});
  auto report = validate(SemifreeDga(bad_degree, {NcPoly::one(bad_degree)}));
  CHECK_FALSE(report.passed());
  CHECK_FALSE(report.generators[0].degree_ok);

  auto s3 = algebra_to_dgas(algebra("algebra A = < x1, x2 | x1*x2 - 1 >"));
  CHECK(validate(s3.a).passed());
  CHECK(validate(graded_example()).passed());

  // d^2 != 0: d(e) = a with d(a) = x.
  auto s = make_signature(RingSpec::integers(), {{"x", 0}, {"a", 1}, {"e", 2}});
  auto broken = validate(SemifreeDga(s, {NcPoly::zero(s), P(s, "x"), P(s, "a")}));
  CHECK_FALSE(broken.passed());
  CHECK(broken.generators[2].degree_ok);
  CHECK_FALSE(broken.generators[2].square_zero);
  CHECK(broken.generators[2].square == "x");
}

TEST_CASE("stabilize") {
  auto empty = make_signature(RingSpec::integers(), {});
  SemifreeDga e0(empty, {});
  auto s = stabilize(e0, 0);
  REQUIRE(s.signature()->size() == 2);
  CHECK((*s.signature())[0] == GeneratorSymbol{"e#1", 1});
  CHECK((*s.signature())[1] == GeneratorSymbol{"f#1", 0});
  CHECK(s.differential("e#1") == NcPoly::generator(s.signature(), "f#1"));
  CHECK(s.differential("f#1").is_zero());

  auto twice = stabilize(s, 0);
  CHECK(twice.signature()->size() == 4);
  CHECK((*twice.signature())[2].name == "e#2");
  CHECK(validate(twice).passed());

  auto neg = stabilize(e0, -3);
  CHECK((*neg.signature())[0].degree == -2);
  CHECK((*neg.signature())[1].degree == -3);
}

TEST_CASE("h0_presentation") {
  auto pair = algebra_to_dgas(algebra("algebra A = < x1, x2 | x1*x2 - 1, x1^2 >"));
  auto h0a = h0_presentation(pair.a);
  CHECK(h0a.to_string() == "algebra H0 = < x1, x2 | x1*x2 - 1, x1^2 >");
  auto h0b = h0_presentation(pair.b);
  CHECK(h0b.to_string() == "algebra H0 = < x1, x2 | 1, 1 >");

  auto s = make_signature(RingSpec::integers(), {{"x", 0}, {"y", 0}, {"e", 2}});
  auto free = h0_presentation(SemifreeDga(s, {NcPoly::zero(s), NcPoly::zero(s), NcPoly::zero(s)}));
  CHECK(free.signature->size() == 2);
  CHECK(free.relations.empty());

  auto neg = stabilize(pair.a, -1);
  try {
    (void)h0_presentation(neg);
    FAIL("expected NegativeDegreeGenerator");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativeDegreeGenerator);
  }
}

TEST_CASE("h0 under stabilization") {
  auto pair = group_to_dgas(group("group G = < a, b | a*b*a^-1, b^2 >"), RingSpec::integers());
  auto base = h0_presentation(pair.a);
  for (int k : {2, 3, 7}) {
    auto h = h0_presentation(stabilize(pair.a, k));
    CHECK(h.signature->generators() == base.signature->generators());
    CHECK(h.relations == base.relations);
  }
  // k = 1 adds a degree-1 generator f with d(f) = 0: one extra, inert, zero relation.
  auto h1 = h0_presentation(stabilize(pair.a, 1));
  CHECK(h1.signature->generators() == base.signature->generators());
  REQUIRE(h1.relations.size() == base.relations.size() + 1);
  CHECK(h1.relations.back().is_zero());

  // k = 0 adds a degree-0 generator f together with the relation f; the
  // quotients agree: the maps X -> X and f -> 0 carry relations into ideals.
  auto h0 = h0_presentation(stabilize(pair.a, 0));
  REQUIRE(h0.signature->size() == base.signature->size() + 1);
  REQUIRE(h0.relations.size() == base.relations.size() + 1);
  const auto& f_name = h0.signature->generators().back().name;
  CHECK(h0.relations.back() == NcPoly::generator(h0.signature, f_name));
  for (const auto& r : base.relations)
    CHECK(member_with_cofactors(rename_into(r, h0.signature), h0.relations, SearchBound{1}));
  std::vector<NcPoly> kill_f;
  for (std::uint32_t i = 0; i + 1 < h0.signature->size(); ++i)
    kill_f.push_back(NcPoly::generator(base.signature, i));
  kill_f.push_back(NcPoly::zero(base.signature));
  for (const auto& r : h0.relations)
    CHECK(member_with_cofactors(substitute(r, kill_f, base.signature), base.relations, SearchBound{1}));
}

TEST_CASE("check_augmentation") {
  auto pair = group_to_dgas(group("group T = < g | g >"), RingSpec::integers());
  auto eps = canonical_augmentations(pair.a, pair.b);
  CHECK(check_augmentation(pair.a, eps.a));
  CHECK(check_augmentation(pair.b, eps.b));

  auto s3 = algebra_to_dgas(algebra("algebra A = < x | x >"));
  const auto& sig = *s3.b.signature();
  for (long v : {0L, 1L, 5L}) {
    Augmentation e{{Coefficient(sig.ring(), v), Coefficient::zero(sig.ring())}};
    CHECK_FALSE(check_augmentation(s3.b, e));
  }

  auto s = make_signature(RingSpec::integers(), {{"a", 1}, {"b", 2}});
  SemifreeDga zero_d(s, {NcPoly::zero(s), NcPoly::zero(s)});
  CHECK(check_augmentation(zero_d, Augmentation{{Coefficient::zero(s->ring()), Coefficient::zero(s->ring())}}));
  CHECK_FALSE(check_augmentation(zero_d, Augmentation{{Coefficient::one(s->ring()), Coefficient::zero(s->ring())}}));
  try {
    (void)check_augmentation(zero_d, Augmentation{{Coefficient::zero(s->ring())}});
    FAIL("expected MissingValue");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingValue);
  }
}

TEST_CASE("d^2 = 0 on random polynomials for the corpus") {
  std::mt19937 rng(21);
  for (const auto& dga : corpus()) {
    REQUIRE(validate(dga).passed());
    for (int i = 0; i < 100; ++i) {
      auto p = sfdga::testing::random_poly(rng, dga.signature(), 4, 4);
      CHECK(leibniz_extend(dga, leibniz_extend(dga, p)).is_zero());
    }
  }
}

TEST_CASE("graded derivation identity on random homogeneous pairs") {
  std::mt19937 rng(22);
  int checked = 0;
  for (const auto& dga : corpus()) {
    for (int i = 0; i < 60; ++i) {
      int dp = i % 3, dq = (i / 3) % 3;
      auto p = sfdga::testing::random_homogeneous(rng, dga.signature(), dp, 2, 3);
      auto q = sfdga::testing::random_homogeneous(rng, dga.signature(), dq, 2, 3);
      if (p.is_zero()) continue;
      auto sign = Coefficient(dga.signature()->ring(), dp % 2 == 0 ? 1L : -1L);
      CHECK(leibniz_extend(dga, p * q) == leibniz_extend(dga, p) * q + sign * (p * leibniz_extend(dga, q)));
      ++checked;
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("stabilization preserves validity") {
  for (const auto& dga : corpus())
    for (int k : {-2, 0, 1, 4}) CHECK(validate(stabilize(dga, k)).passed());
}
