#pragma once

#include <cstdint>
#include <random>

#include "pushcalc/free_group.hpp"
#include "pushcalc/permutation.hpp"

namespace pushcalc {

/// Seeded source of random words and permutations. Deterministic for a
/// given seed on every platform (mt19937_64 plus hand-rolled range
/// reduction, since std distributions are implementation-defined).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return (engine_() & 1U) != 0; }

  Letter letter(int rank);
  /// Reduced word of length uniform in [0, max_length].
  FreeWord word(int rank, std::size_t max_length);
  /// Reduced word of exactly the given length.
  FreeWord word_of_length(int rank, std::size_t length);
  Permutation permutation(int n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace pushcalc
