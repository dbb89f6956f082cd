#include "pushcalc/free_group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "pushcalc/error.hpp"

namespace pushcalc {

FreeWord FreeWord::reduce(std::span<const Letter> raw) {
  FreeWord out;
  out.letters_.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.letters_.empty() && out.letters_.back() == l.inverse()) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

FreeWord FreeWord::power(Letter letter, int exponent) {
  Letter l = exponent < 0 ? letter.inverse() : letter;
  std::vector<Letter> raw(static_cast<std::size_t>(std::abs(exponent)), l);
  return reduce(raw);
}

int FreeWord::max_gen() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, l.gen());
  return m;
}

FreeWord FreeWord::prefix(std::size_t length) const {
  FreeWord out;
  out.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(length, size())));
  return out;
}

std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                b.letters_.end());
}

FreeWord concat(const FreeWord& u, const FreeWord& v) {
  auto ul = u.letters();
  auto vl = v.letters();
  std::size_t cancel = 0;
  while (cancel < ul.size() && cancel < vl.size() && ul[ul.size() - 1 - cancel] == vl[cancel].inverse()) ++cancel;
  std::vector<Letter> raw;
  raw.reserve(ul.size() + vl.size() - 2 * cancel);
  raw.insert(raw.end(), ul.begin(), ul.end() - static_cast<std::ptrdiff_t>(cancel));
  raw.insert(raw.end(), vl.begin() + static_cast<std::ptrdiff_t>(cancel), vl.end());
  return FreeWord::reduce(raw);
}

FreeWord invert(const FreeWord& u) {
  std::vector<Letter> raw;
  raw.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) raw.push_back(it->inverse());
  return FreeWord::reduce(raw);
}

FreeWord power(const FreeWord& u, int exponent) {
  FreeWord base = exponent < 0 ? invert(u) : u;
  FreeWord out;
  for (int i = 0; i < std::abs(exponent); ++i) out = concat(out, base);
  return out;
}

FreeEndo::FreeEndo(std::vector<FreeWord> images) : images_(std::move(images)) {}

FreeEndo FreeEndo::identity(int rank) {
  std::vector<FreeWord> images;
  for (int i = 1; i <= rank; ++i) images.push_back(FreeWord::generator(i));
  return FreeEndo(std::move(images));
}

bool FreeEndo::is_identity() const {
  for (int i = 1; i <= rank(); ++i) {
    const auto& w = images_[static_cast<std::size_t>(i - 1)];
    if (w.size() != 1 || w[0] != Letter(i, 1)) return false;
  }
  return true;
}

std::size_t FreeEndo::max_image_length() const {
  std::size_t m = 0;
  for (const auto& w : images_) m = std::max(m, w.size());
  return m;
}

FreeWord endo_apply(const FreeEndo& phi, const FreeWord& u) {
  std::vector<Letter> raw;
  for (Letter l : u.letters()) {
    if (l.gen() > phi.rank()) {
      throw SizeMismatch("word uses generator a" + std::to_string(l.gen()) + " but endomorphism has rank " +
                         std::to_string(phi.rank()));
    }
    const FreeWord& img = phi.image(l.gen());
    if (l.sign() > 0) {
      raw.insert(raw.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) raw.push_back(it->inverse());
    }
  }
  return FreeWord::reduce(raw);
}

FreeEndo endo_compose(const FreeEndo& phi, const FreeEndo& psi) {
  std::vector<FreeWord> images;
  images.reserve(psi.images().size());
  for (const auto& w : psi.images()) images.push_back(endo_apply(phi, w));
  return FreeEndo(std::move(images));
}

std::vector<LetterOccurrence> letter_profile(const FreeWord& u, int gen) {
  std::vector<LetterOccurrence> out;
  for (std::size_t pos = 0; pos < u.size(); ++pos) {
    Letter l = u[pos];
    if (l.gen() != gen) continue;
    out.push_back({l.sign(), u.prefix(l.sign() > 0 ? pos : pos + 1)});
  }
  return out;
}

int char_sign(std::span<const int> character, const FreeWord& u) {
  int s = 1;
  for (Letter l : u.letters()) {
    if (l.gen() > static_cast<int>(character.size())) {
      throw SizeMismatch("orientation character too short for generator a" + std::to_string(l.gen()));
    }
    s *= character[static_cast<std::size_t>(l.gen() - 1)];
  }
  return s;
}

std::vector<FreeWord> enumerate_words(int rank, std::size_t max_length) {
  std::vector<FreeWord> out{FreeWord()};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_length && rank > 0; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (int g = 1; g <= rank; ++g) {
        for (int s : {1, -1}) {
          Letter l(g, s);
          const FreeWord& w = out[i];
          if (!w.is_identity() && w.back() == l.inverse()) continue;
          out.push_back(concat(w, FreeWord::generator(g, s)));
        }
      }
    }
    layer_begin = layer_end;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

int read_int(std::string_view text, std::size_t& pos, bool allow_sign) {
  std::size_t start = pos;
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits) throw ParseError("expected integer", start);
  int value = 0;
  const char* first = text.data() + (text[start] == '+' ? start + 1 : start);
  auto [ptr, ec] = std::from_chars(first, text.data() + pos, value);
  if (ec != std::errc() || ptr != text.data() + pos) throw ParseError("integer out of range", start);
  return value;
}

}  // namespace

FreeWord parse_word(std::string_view text, int rank) {
  std::vector<Letter> raw;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (is_space(c)) {
      ++pos;
      continue;
    }
    std::size_t token_start = pos;
    if (c == 'e') {
      ++pos;
      continue;
    }
    if (c != 'a' && c != 'A') throw ParseError(std::string("unexpected character '") + c + "'", pos);
    ++pos;
    int gen = read_int(text, pos, false);
    if (gen < 1) throw ParseError("generator index must be >= 1", token_start);
    if (rank > 0 && gen > rank) {
      throw ParseError("generator a" + std::to_string(gen) + " exceeds rank " + std::to_string(rank), token_start);
    }
    int exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t exp_start = pos;
      exponent = read_int(text, pos, true);
      if (std::abs(exponent) > 1'000'000) throw ParseError("exponent too large", exp_start);
    }
    if (c == 'A') exponent = -exponent;
    Letter l = exponent < 0 ? Letter(gen, -1) : Letter(gen, 1);
    for (int i = 0; i < std::abs(exponent); ++i) raw.push_back(l);
  }
  return FreeWord::reduce(raw);
}

std::string format_word(const FreeWord& u) {
  if (u.is_identity()) return "e";
  std::string out;
  for (Letter l : u.letters()) {
    if (!out.empty()) out += ' ';
    out += l.sign() > 0 ? 'a' : 'A';
    out += std::to_string(l.gen());
  }
  return out;
}

std::string format_word_compact(const FreeWord& u) {
  if (u.is_identity()) return "e";
  std::string out;
  for (Letter l : u.letters()) {
    out += l.sign() > 0 ? 'a' : 'A';
    out += std::to_string(l.gen());
  }
  return out;
}

}  // namespace pushcalc
