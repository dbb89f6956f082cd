#include <doctest.h>

#include "oracles.hpp"
#include "pushcalc/error.hpp"
#include "pushcalc/free_group.hpp"
#include "pushcalc/random.hpp"

using namespace pushcalc;

namespace {
FreeWord w(std::string_view text) { return parse_word(text); }
}  // namespace

TEST_CASE("reduction cancels adjacent inverse pairs") {
  CHECK(w("a1 A1") == FreeWord());
  CHECK(w("a1 a2 A2 A1 a3") == w("a3"));
  CHECK(format_word(w("a2 a1 A1 a1")) == "a2 a1");
  CHECK(w("e").is_identity());
  CHECK(w("").is_identity());
}

TEST_CASE("reduce agrees with a stack reducer on random letter sequences") {
  Sampler rng(11);
  for (int i = 0; i < 500; ++i) {
    std::vector<Letter> raw;
    std::vector<int> codes;
    int len = rng.uniform(0, 30);
    for (int j = 0; j < len; ++j) {
      Letter l = rng.letter(3);
      raw.push_back(l);
      codes.push_back(l.sign() * l.gen());
    }
    CHECK(oracle::raw(FreeWord::reduce(raw)) == oracle::reduce(codes));
  }
}

TEST_CASE("group operations") {
  CHECK(w("a1 a2") * w("A2 a3") == w("a1 a3"));
  CHECK(invert(w("a1 A2 a3")) == w("A3 a2 A1"));
  CHECK(power(w("a1 a2"), 2) == w("a1 a2 a1 a2"));
  CHECK(power(w("a1 a2"), -1) == w("A2 A1"));
  CHECK(power(w("a1"), 0).is_identity());
  CHECK(w("a1^3") == w("a1 a1 a1"));
  CHECK(w("a2^-2 a1") == w("A2 A2 a1"));
}

TEST_CASE("shortlex order puts a1 before A1 before a2") {
  CHECK(w("e") < w("a1"));
  CHECK(w("a1") < w("A1"));
  CHECK(w("A1") < w("a2"));
  CHECK(w("a2") < w("a1 a1"));
  CHECK(w("a1 a2") < w("a1 A2"));
  auto words = enumerate_words(1, 2);
  REQUIRE(words.size() == 5);
  CHECK(format_word(words[0]) == "e");
  CHECK(format_word(words[1]) == "a1");
  CHECK(format_word(words[2]) == "A1");
  CHECK(format_word(words[3]) == "a1 a1");
  CHECK(format_word(words[4]) == "A1 A1");
  CHECK(enumerate_words(2, 3).size() == 1 + 4 + 12 + 36);
}

TEST_CASE("endomorphisms") {
  FreeEndo swap({w("a2"), w("a1")});
  CHECK(endo_apply(swap, w("a1 A2")) == w("a2 A1"));
  FreeEndo collapse({FreeWord(), w("a2")});
  CHECK(endo_apply(collapse, w("a1 a2 A1")) == w("a2"));
  FreeEndo phi({w("a1 a2"), w("A1")});
  for (const auto& u : enumerate_words(2, 3)) {
    CHECK(endo_apply(endo_compose(phi, swap), u) == endo_apply(phi, endo_apply(swap, u)));
  }
  CHECK_THROWS_AS(endo_apply(FreeEndo({w("a1")}), w("a2")), SizeMismatch);
}

TEST_CASE("letter_profile") {
  auto prof = letter_profile(w("a1 a1"), 1);
  REQUIRE(prof.size() == 2);
  CHECK(prof[0].sign == 1);
  CHECK(prof[0].prefix == FreeWord());
  CHECK(prof[1].sign == 1);
  CHECK(prof[1].prefix == w("a1"));

  CHECK(letter_profile(w("a2 a2 a2"), 1).empty());

  // A negative occurrence's prefix includes the occurrence itself.
  prof = letter_profile(w("a1 a2 A1"), 1);
  REQUIRE(prof.size() == 2);
  CHECK(prof[0].sign == 1);
  CHECK(prof[0].prefix == FreeWord());
  CHECK(prof[1].sign == -1);
  CHECK(prof[1].prefix == w("a1 a2 A1"));
}

TEST_CASE("char_sign") {
  std::vector<int> orientable{1, 1};
  std::vector<int> flip{-1};
  CHECK(char_sign(orientable, w("a1 A2 a1")) == 1);
  CHECK(char_sign(flip, w("a1")) == -1);
  CHECK(char_sign(flip, w("A1")) == -1);
  CHECK(char_sign(flip, w("a1 a1")) == 1);
}

TEST_CASE("word grammar") {
  CHECK(format_word(w("a1a2A1")) == "a1 a2 A1");
  CHECK(format_word_compact(w("a1 a2 A1")) == "a1a2A1");
  CHECK(format_word(w("  a12  ")) == "a12");
  CHECK_THROWS_AS(parse_word("a0"), ParseError);
  CHECK_THROWS_AS(parse_word("a1 b2"), ParseError);
  CHECK_THROWS_AS(parse_word("a"), ParseError);
  CHECK_THROWS_AS(parse_word("a3", 2), ParseError);
  try {
    parse_word("a1 a2 x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
    CHECK(e.code() == "ParseError");
  }
  for (const auto& u : enumerate_words(3, 3)) CHECK(parse_word(format_word(u)) == u);
}
