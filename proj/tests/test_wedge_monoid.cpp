#include <doctest.h>

#include "oracles.hpp"
#include "pushcalc/error.hpp"
#include "pushcalc/generators.hpp"
#include "pushcalc/wedge_monoid.hpp"

using namespace pushcalc;

namespace {

FreeWord w(std::string_view text) { return parse_word(text); }
RingElem term(std::string_view word, long long c = 1) { return RingElem(w(word), c); }

const SphereLabel P = SphereLabel::p(1);
const SphereLabel T = SphereLabel::tau(1);

WedgeSignature rank_one() { return WedgeSignature(1, {P, T}); }

ModuleVec vec(std::initializer_list<std::pair<SphereLabel, RingElem>> parts) {
  ModuleVec out;
  for (const auto& [label, ring] : parts) out.add(label, ring);
  return out;
}

// (α, αp, τ + p) and (α, α⁻¹p, τ − α⁻¹p), written out by hand.
SelfMapClass pi_alpha() {
  return SelfMapClass(rank_one(), FreeEndo({w("a1")}),
                      {{P, vec({{P, term("a1")}})}, {T, vec({{T, term("e")}, {P, term("e")}})}});
}
SelfMapClass pi_alpha_inv() {
  return SelfMapClass(rank_one(), FreeEndo({w("a1")}),
                      {{P, vec({{P, term("A1")}})}, {T, vec({{T, term("e")}, {P, term("A1", -1)}})}});
}

}  // namespace

TEST_CASE("signature validation") {
  CHECK_THROWS_AS(WedgeSignature(1, {P, T}, 2), InvalidInput);
  CHECK_THROWS_AS(WedgeSignature(1, {T, P, P}), InvalidInput);
  WedgeSignature sig(1, {T, P});
  CHECK(sig.labels() == std::vector<SphereLabel>{P, T});
  CHECK(sig.label_index(T) == 1);
  CHECK_THROWS_AS(SelfMapClass(rank_one(), FreeEndo({w("a1")}), {{P, vec({{SphereLabel::p(2), term("e")}})}}),
                  SignatureMismatch);
  CHECK_THROWS_AS(SelfMapClass(rank_one(), FreeEndo({w("a1"), w("a1")}), {}), SignatureMismatch);
}

TEST_CASE("identity") {
  CHECK(format_tuple(identity(rank_one())) == "(a1, p1, t1)");
  CHECK(format_tuple(identity(WedgeSignature(0, {P}))) == "(p1)");
  Sampler rng(1);
  for (int i = 0; i < 100; ++i) {
    auto h = random_self_map(rng, random_signature(rng, 2, 2), 3, 3, 4);
    CHECK(compose(identity(h.signature()), h) == h);
    CHECK(compose(h, identity(h.signature())) == h);
  }
}

TEST_CASE("the rank-one pushes are mutually inverse") {
  CHECK(format_tuple(pi_alpha()) == "(a1, a1·p1, t1 + p1)");
  CHECK(format_tuple(pi_alpha_inv()) == "(a1, A1·p1, t1 - A1·p1)");
  CHECK(compose(pi_alpha(), pi_alpha_inv()) == identity(rank_one()));
  CHECK(compose(pi_alpha_inv(), pi_alpha()) == identity(rank_one()));
  CHECK(verify_inverse(pi_alpha(), pi_alpha_inv()));
  CHECK(verify_inverse(identity(rank_one()), identity(rank_one())));
  CHECK_FALSE(verify_inverse(pi_alpha(), identity(rank_one())));
}

TEST_CASE("powers of the rank-one push") {
  SelfMapClass h = identity(rank_one());
  for (int n = 1; n <= 12; ++n) {
    h = compose(h, pi_alpha());
    RingElem geometric;
    for (int i = 0; i < n; ++i) geometric += RingElem(power(w("a1"), i));
    SelfMapClass expected(rank_one(), FreeEndo({w("a1")}),
                          {{P, vec({{P, RingElem(power(w("a1"), n))}})}, {T, vec({{T, term("e")}, {P, geometric}})}});
    CHECK(h == expected);
  }
}

TEST_CASE("compose agrees with the transcribed rank-one law") {
  Sampler rng(2);
  for (int i = 0; i < 400; ++i) {
    auto a = random_self_map(rng, rank_one(), 3, 3, 4);
    auto b = random_self_map(rng, rank_one(), 3, 3, 4);
    CHECK(oracle::to_rank_one(compose(a, b)) == oracle::compose_rank_one(oracle::to_rank_one(a), oracle::to_rank_one(b)));
  }
}

TEST_CASE("compose on a hand example with two circles") {
  // outer = (a2, a1, p1 ↦ a1·p1), inner = (a1 a2, e, p1 ↦ a2·p1 - p1):
  // a2·p1 ↦ outer(p1)·φ(a2) = a1·p1·a1 = a1a1·p1; the constant term stays -a1·p1.
  WedgeSignature sig(2, {P});
  SelfMapClass outer(sig, FreeEndo({w("a2"), w("a1")}), {{P, vec({{P, term("a1")}})}});
  SelfMapClass inner(sig, FreeEndo({w("a1 a2"), FreeWord()}), {{P, vec({{P, term("a2") - term("e")}})}});
  SelfMapClass got = compose(outer, inner);
  CHECK(got.circle_part() == FreeEndo({w("a2 a1"), FreeWord()}));
  CHECK(got.sphere_image(P) == vec({{P, term("a1 a1") - term("a1")}}));
}

TEST_CASE("compose checks signatures") {
  CHECK_THROWS_AS(compose(identity(rank_one()), identity(WedgeSignature(1, {T}))), SignatureMismatch);
  CHECK_FALSE(verify_inverse(identity(rank_one()), identity(WedgeSignature(1, {T}))));
}

TEST_CASE("associativity and functoriality on random triples") {
  Sampler rng(3);
  for (int i = 0; i < 200; ++i) {
    WedgeSignature sig = random_signature(rng, 2, 2);
    auto a = random_self_map(rng, sig, 3, 3, 4);
    auto b = random_self_map(rng, sig, 3, 3, 4);
    auto c = random_self_map(rng, sig, 3, 3, 4);
    CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
    CHECK(compose(a, b).circle_part() == endo_compose(a.circle_part(), b.circle_part()));
    CHECK(top_homology_matrix(compose(a, b)) == top_homology_matrix(a) * top_homology_matrix(b));
  }
}

TEST_CASE("top homology") {
  CHECK(top_homology_matrix(pi_alpha()) == IntMatrix{{1, 1}, {0, 1}});
  CHECK(top_homology_matrix(pi_alpha_inv()) == IntMatrix{{1, -1}, {0, 1}});
  CHECK(format_matrix(top_homology_matrix(pi_alpha())) == "[[1, 1], [0, 1]]");
  CHECK(top_homology_matrix(identity(rank_one())) == IntMatrix::identity(2));
}

TEST_CASE("collapsing the circle") {
  SelfMapClass collapse(rank_one(), FreeEndo({FreeWord()}), {{P, vec({{P, term("e")}})}, {T, vec({{T, term("e")}})}});
  CHECK(format_tuple(collapse) == "(e, p1, t1)");
  // Collapsing after pushing forgets the α-translations.
  CHECK(compose(collapse, pi_alpha()).sphere_image(P) == vec({{P, term("e")}}));
}
