#include "pushcalc/random.hpp"

#include <numeric>
#include <utility>
#include <vector>

namespace pushcalc {

int Sampler::uniform(int lo, int hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

Letter Sampler::letter(int rank) { return Letter(uniform(1, rank), coin() ? 1 : -1); }

FreeWord Sampler::word(int rank, std::size_t max_length) {
  return word_of_length(rank, static_cast<std::size_t>(uniform(0, static_cast<int>(max_length))));
}

FreeWord Sampler::word_of_length(int rank, std::size_t length) {
  if (rank <= 0) return {};
  std::vector<Letter> letters;
  while (letters.size() < length) {
    Letter l = letter(rank);
    if (!letters.empty() && letters.back() == l.inverse()) continue;
    letters.push_back(l);
  }
  return FreeWord::reduce(letters);
}

Permutation Sampler::permutation(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(uniform(0, i))]);
  return Permutation(std::move(images));
}

}  // namespace pushcalc
