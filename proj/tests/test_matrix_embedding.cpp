#include <doctest.h>

#include "oracles.hpp"
#include "pushcalc/error.hpp"
#include "pushcalc/generators.hpp"
#include "pushcalc/matrix_embedding.hpp"

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

SelfMapClass pi_alpha() {
  return SelfMapClass(rank_one(), FreeEndo({w("a1")}),
                      {{P, vec({{P, term("a1")}})}, {T, vec({{T, term("e")}, {P, term("e")}})}});
}
SelfMapClass pi_alpha_inv() {
  return SelfMapClass(rank_one(), FreeEndo({w("a1")}),
                      {{P, vec({{P, term("A1")}})}, {T, vec({{T, term("e")}, {P, term("A1", -1)}})}});
}

BasisKey key(const SphereLabel& label, std::string_view word) { return BasisKey{label, w(word)}; }

}  // namespace

TEST_CASE("block form of the rank-one push") {
  auto a = embed(pi_alpha());
  CHECK(a.slope() == FreeEndo({w("a1")}));
  CHECK(a.block(P, P) == term("a1"));
  CHECK(a.block(P, T) == term("e"));
  CHECK(a.block(T, T) == term("e"));
  CHECK(a.block(T, P).is_zero());

  auto b = embed(pi_alpha_inv());
  CHECK(b.block(P, P) == term("A1"));
  CHECK(b.block(P, T) == term("A1", -1));

  CHECK(matrix_mul(a, b) == embed(identity(rank_one())));
  CHECK(matrix_mul(b, a) == embed(identity(rank_one())));
}

TEST_CASE("identity and the collapse map") {
  auto id = embed(identity(rank_one()));
  CHECK(id.block(P, P) == RingElem::one());
  CHECK(id.block(T, T) == RingElem::one());
  CHECK(id.block(P, T).is_zero());

  SelfMapClass collapse(rank_one(), FreeEndo({FreeWord()}), {{P, vec({{P, term("e")}})}, {T, vec({{T, term("e")}})}});
  auto c = embed(collapse);
  CHECK(c.slope() == FreeEndo({FreeWord()}));
  // Slope e: every column u·p lands on the row p·e, a row of 1s.
  auto t = materialize(c, 2);
  for (const auto& u : enumerate_words(1, 2)) {
    CHECK(t.entry(key(P, "e"), BasisKey{P, u}) == 1);
    CHECK(t.entry(BasisKey{P, u}, BasisKey{P, u}) == (u.is_identity() ? 1 : 0));
  }
}

TEST_CASE("embed is a homomorphism and injective") {
  Sampler rng(21);
  for (int i = 0; i < 200; ++i) {
    WedgeSignature sig = random_signature(rng, 2, 2);
    auto a = random_self_map(rng, sig, 3, 3, 4);
    auto b = random_self_map(rng, sig, 3, 3, 4);
    CHECK(embed(compose(a, b)) == matrix_mul(embed(a), embed(b)));
    CHECK(unembed(embed(a)) == a);
    CHECK((embed(a) == embed(b)) == (a == b));
  }
}

TEST_CASE("materialized rank-one push at radius 0") {
  auto t = materialize(embed(pi_alpha()), 0);
  CHECK(t.radius() == 0);
  CHECK(t.columns().size() == 2);
  CHECK(t.entry(key(P, "a1"), key(P, "e")) == 1);
  CHECK(t.entry(key(P, "e"), key(T, "e")) == 1);
  CHECK(t.entry(key(T, "e"), key(T, "e")) == 1);
  CHECK(t.entry(key(P, "e"), key(P, "e")) == 0);
  CHECK(t.row_reach() == 1);
}

TEST_CASE("diagonal constancy rule on a two-circle slope") {
  // Column u·p1 holds the e-column translated on the right by slope(u).
  WedgeSignature sig(2, {P});
  SelfMapClass h(sig, FreeEndo({w("a2"), w("a1 a1")}), {{P, vec({{P, term("a1") - term("A2")}})}});
  auto t = materialize(embed(h), 1);
  CHECK(t.entry(key(P, "a1 a2"), key(P, "a1")) == 1);
  CHECK(t.entry(key(P, "e"), key(P, "a1")) == -1);
  CHECK(t.entry(key(P, "a1 a1 a1"), key(P, "a2")) == 1);
  CHECK(t.entry(key(P, "A2 a1 a1"), key(P, "a2")) == -1);
  CHECK(is_diagonally_constant(t, h.circle_part()));
}

TEST_CASE("truncated products agree with an entrywise product") {
  Sampler rng(22);
  for (int i = 0; i < 60; ++i) {
    WedgeSignature sig = random_signature(rng, 2, 1);
    auto A = embed(random_self_map(rng, sig, 2, 2, 2));
    auto B = embed(random_self_map(rng, sig, 2, 2, 2));
    const int r = rng.uniform(0, 2);
    auto right = materialize(B, r);
    CHECK(right.row_reach() <= row_bound(B, r));
    auto left = materialize(A, static_cast<int>(row_bound(B, r)));
    auto product = truncated_product(left, right);
    CHECK(product.radius() == r);
    CHECK(oracle::entries(product) == oracle::dense_product(left, right));
    CHECK(product == materialize(matrix_mul(A, B), r));
  }
}

TEST_CASE("truncated product refuses a left factor that is too small") {
  auto a = embed(pi_alpha());
  auto right = materialize(a, 1);  // reaches p·a1a1
  auto left = materialize(a, 1);
  CHECK_THROWS_AS(truncated_product(left, right), SizeMismatch);
  CHECK_NOTHROW(truncated_product(materialize(a, 2), right));
}

TEST_CASE("explicit column sets carry no radius") {
  auto a = embed(pi_alpha());
  auto t = materialize(a, std::vector<BasisKey>{key(P, "a1"), key(T, "A1")});
  CHECK(t.radius() == -1);
  CHECK(t.columns().size() == 2);
  CHECK(t.entry(key(P, "a1 a1"), key(P, "a1")) == 1);
  CHECK(t.entry(key(P, "A1"), key(T, "A1")) == 1);
}

TEST_CASE("is_diagonally_constant") {
  CHECK(is_diagonally_constant(materialize(embed(pi_alpha()), 2), FreeEndo({w("a1")})));
  CHECK(is_diagonally_constant(materialize(embed(identity(rank_one())), 2), FreeEndo::identity(1)));
  auto t = materialize(embed(pi_alpha()), 2);
  t.set_entry(key(P, "a1 a1"), key(P, "a1"), 5);
  CHECK_FALSE(is_diagonally_constant(t, FreeEndo({w("a1")})));
  auto u = materialize(embed(pi_alpha()), 2);
  u.set_entry(key(T, "a1"), key(T, "A1"), 1);
  CHECK_FALSE(is_diagonally_constant(u, FreeEndo({w("a1")})));
}

TEST_CASE("materialized columns are finite and bounded by term counts") {
  Sampler rng(23);
  for (int i = 0; i < 50; ++i) {
    auto A = embed(random_self_map(rng, random_signature(rng, 2, 1), 2, 3, 3));
    const auto t = materialize(A, 2);
    for (const auto& [col, column] : t.columns()) {
      std::size_t bound = 0;
      for (const auto& row : A.signature().labels()) bound += A.block(row, col.label).size();
      CHECK(column.size() <= bound);
    }
  }
}

TEST_CASE("TSV dump") {
  auto tsv = materialize(embed(pi_alpha()), 0).to_tsv();
  CHECK(tsv ==
        "row\\col\tp1:e\tt1:e\n"
        "p1:e\t0\t1\n"
        "p1:a1\t1\t0\n"
        "t1:e\t0\t1\n");
}
