#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pushcalc {

/// A generator α_i or its inverse. Generators are 1-indexed.
class Letter {
 public:
  constexpr Letter(int gen, int sign) : code_(sign < 0 ? -gen : gen) {}

  static constexpr Letter from_code(int code) { return Letter(code < 0 ? -code : code, code < 0 ? -1 : 1); }

  constexpr int gen() const { return code_ < 0 ? -code_ : code_; }
  constexpr int sign() const { return code_ < 0 ? -1 : 1; }
  constexpr int code() const { return code_; }
  constexpr Letter inverse() const { return from_code(-code_); }

  /// Position in the shortlex alphabet a1 < A1 < a2 < A2 < ...
  constexpr int rank_key() const { return 2 * gen() + (code_ < 0 ? 1 : 0); }

  friend constexpr bool operator==(Letter a, Letter b) { return a.code_ == b.code_; }
  friend constexpr auto operator<=>(Letter a, Letter b) { return a.rank_key() <=> b.rank_key(); }

 private:
  int code_;
};

/// A reduced word in a free group. Every constructor and operation returns a
/// reduced word, so equality of group elements is equality of letter
/// sequences. The empty word is the identity. Ordering is shortlex.
class FreeWord {
 public:
  FreeWord() = default;

  /// Freely reduces an arbitrary letter sequence.
  static FreeWord reduce(std::span<const Letter> raw);
  static FreeWord generator(int gen, int sign = 1) { return reduce(std::vector<Letter>{Letter(gen, sign)}); }
  static FreeWord power(Letter letter, int exponent);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_.back(); }

  /// Largest generator index occurring (0 for the identity).
  int max_gen() const;

  /// Initial subword of the given length.
  FreeWord prefix(std::size_t length) const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b);

 private:
  std::vector<Letter> letters_;
};

FreeWord concat(const FreeWord& u, const FreeWord& v);
FreeWord invert(const FreeWord& u);
FreeWord power(const FreeWord& u, int exponent);

inline FreeWord operator*(const FreeWord& u, const FreeWord& v) { return concat(u, v); }

/// An endomorphism of F_g given by the images of α_1..α_g.
class FreeEndo {
 public:
  FreeEndo() = default;
  explicit FreeEndo(std::vector<FreeWord> images);

  static FreeEndo identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<FreeWord>& images() const { return images_; }
  const FreeWord& image(int gen) const { return images_.at(gen - 1); }
  bool is_identity() const;

  /// Longest generator image; bounds how far the endomorphism stretches words.
  std::size_t max_image_length() const;

  friend bool operator==(const FreeEndo&, const FreeEndo&) = default;

 private:
  std::vector<FreeWord> images_;
};

FreeWord endo_apply(const FreeEndo& phi, const FreeWord& u);

/// phi ∘ psi (apply psi first).
FreeEndo endo_compose(const FreeEndo& phi, const FreeEndo& psi);

struct LetterOccurrence {
  int sign;
  FreeWord prefix;

  friend bool operator==(const LetterOccurrence&, const LetterOccurrence&) = default;
};

/// One entry per occurrence of α_gen^{±1} in u. The prefix stops just before
/// a positive occurrence and just after a negative one, so it ends in α_gen⁻¹
/// when the sign is -1.
std::vector<LetterOccurrence> letter_profile(const FreeWord& u, int gen);

/// Evaluates a {±1}-valued character on u. `character[i-1]` is the value on α_i.
int char_sign(std::span<const int> character, const FreeWord& u);

/// All reduced words of length ≤ max_length over `rank` generators, shortlex.
std::vector<FreeWord> enumerate_words(int rank, std::size_t max_length);

// Word grammar: tokens a<i> (generator), A<i> (inverse), optional ^<int>
// power suffix, separated by optional whitespace; "e" or "" is the identity.

/// Parses the word grammar. If `rank` > 0, generator indices above it are
/// rejected.
FreeWord parse_word(std::string_view text, int rank = 0);

/// Space-separated token form, "e" for the identity. Round-trips through
/// parse_word.
std::string format_word(const FreeWord& u);

/// Concatenated token form ("a1a2A1"), used inside tuple notation.
std::string format_word_compact(const FreeWord& u);

}  // namespace pushcalc
