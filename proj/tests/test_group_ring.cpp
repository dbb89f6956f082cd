#include <doctest.h>

#include "oracles.hpp"
#include "pushcalc/error.hpp"
#include "pushcalc/generators.hpp"
#include "pushcalc/group_ring.hpp"

using namespace pushcalc;

namespace {
FreeWord w(std::string_view text) { return parse_word(text); }
RingElem term(std::string_view word, long long c = 1) { return RingElem(w(word), c); }
}  // namespace

TEST_CASE("canonical form drops zero coefficients") {
  RingElem a = term("a1") + term("a1", -1);
  CHECK(a.is_zero());
  CHECK(a == RingElem::zero());
  CHECK(format_ring(a) == "0");
  CHECK(format_ring(RingElem::one()) == "1");
  CHECK(format_ring(term("e") - term("a1 a2 A1")) == "1 - a1a2A1");
  CHECK(format_ring(term("A1", -2) + term("a1", 3)) == "3a1 - 2A1");
}

TEST_CASE("multiplication matches naive convolution") {
  RingElem a = term("e") + term("a1");
  RingElem b = term("e") - term("A1");
  CHECK(a * b == term("a1") - term("A1"));
  Sampler rng(5);
  for (int i = 0; i < 300; ++i) {
    int g = rng.uniform(1, 3);
    RingElem x = random_ring(rng, g, 6, 6);
    RingElem y = random_ring(rng, g, 6, 6);
    CHECK(oracle::naive(x * y) == oracle::naive_mul(oracle::naive(x), oracle::naive(y)));
  }
}

TEST_CASE("translation") {
  CHECK(translate(w("a1"), term("e") + term("a1")) == term("a1") + term("a1 a1"));
  CHECK(translate(w("a1"), term("A1 a2")) == term("a2"));
  CHECK(translate_right(term("a2 a1"), w("A1")) == term("a2"));
  Sampler rng(6);
  for (int i = 0; i < 200; ++i) {
    FreeWord u = rng.word(2, 5), v = rng.word(2, 5);
    RingElem a = random_ring(rng, 2, 4, 4);
    CHECK(translate(u, a) == RingElem(u) * a);
    CHECK(translate_right(a, v) == a * RingElem(v));
  }
}

TEST_CASE("endomorphism application") {
  FreeEndo phi({w("a1 a2"), w("e")});
  CHECK(ring_endo_apply(phi, term("a1") + term("a2", 2)) == term("a1 a2") + term("e", 2));
  // Collapsing words can cancel terms.
  CHECK(ring_endo_apply(phi, term("a2") - term("e")).is_zero());
}

TEST_CASE("augmentation and coefficients") {
  CHECK(augment(term("e") + term("a1")) == 2);
  CHECK(augment(term("e") - term("a1 a2 A1")) == 0);
  CHECK(coefficient(term("a1", 5), w("a1")) == 5);
  CHECK(coefficient(term("a1", 5), w("A1")) == 0);
  CHECK(max_word_length(term("a1 a2") + term("a1")) == 2);
}

TEST_CASE("coefficients are arbitrary precision") {
  RingElem a(w("a1"), BigInt("123456789012345678901234567890"));
  RingElem sq = a * a;
  CHECK(coefficient(sq, w("a1 a1")) == BigInt("15241578753238836750495351562536198787501905199875019052100"));
}

TEST_CASE("module vectors") {
  const SphereLabel p = SphereLabel::p(1), t1 = SphereLabel::tau(1), t0 = SphereLabel::tau(0);
  CHECK(t0 < p);
  CHECK(p < t1);
  CHECK(SphereLabel::p(2) < t1);
  CHECK(format_label(t0) == "t0");
  CHECK(parse_label("p3") == SphereLabel::p(3));
  CHECK_THROWS_AS(parse_label("q1"), ParseError);

  ModuleVec v = ModuleVec::unit(t1);
  v.add(p, term("e") - term("a1 a2 A1"));
  CHECK(format_module(v) == "t1 + (1 - a1a2A1)·p1");
  CHECK(format_module(ModuleVec::unit(p, term("a1"))) == "a1·p1");
  CHECK(format_module(module_add(ModuleVec::unit(t1), ModuleVec::unit(p))) == "t1 + p1");
  CHECK(format_module(ModuleVec()) == "0");
  CHECK(format_module(module_scale(-1, ModuleVec::unit(p, term("A1")))) == "-A1·p1");
  CHECK(module_translate(w("a1"), ModuleVec::unit(p, term("A1"))) == ModuleVec::unit(p));
}
