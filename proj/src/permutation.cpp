#include "pushcalc/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "pushcalc/error.hpp"

namespace pushcalc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)]) throw InvalidInput("not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  std::swap(p.images_.at(static_cast<std::size_t>(a)), p.images_.at(static_cast<std::size_t>(b)));
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>((*this)(i))] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& sigma, const Permutation& rho) {
  if (sigma.size() != rho.size()) throw SizeMismatch("permutations of different degree");
  std::vector<int> images(static_cast<std::size_t>(rho.size()));
  for (int i = 0; i < rho.size(); ++i) images[static_cast<std::size_t>(i)] = sigma(rho(i));
  return Permutation(std::move(images));
}

Permutation parse_cycles(std::string_view text, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (text.substr(pos, 2) == "id") {
    pos += 2;
    skip_space();
    if (pos != text.size()) throw ParseError("trailing characters after 'id'", pos);
    return Permutation(std::move(images));
  }
  while (true) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (pos == text.size()) throw ParseError("unterminated cycle", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      std::size_t start = pos;
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw ParseError("point out of range", start);
        ++pos;
      }
      if (pos == start) throw ParseError("expected point number", pos);
      if (value < 1 || value > n) {
        throw ParseError("point " + std::to_string(value) + " outside 1.." + std::to_string(n), start);
      }
      if (used[static_cast<std::size_t>(value - 1)]) throw ParseError("point repeated in cycles", start);
      used[static_cast<std::size_t>(value - 1)] = true;
      cycle.push_back(value - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
  for (int start = 0; start < p.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || p(start) == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      out += (first ? "" : " ") + std::to_string(x + 1);
      first = false;
      x = p(x);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace pushcalc
