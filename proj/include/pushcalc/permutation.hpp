#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pushcalc {

/// A permutation of {0, ..., n-1}; text forms are 1-based cycle notation.
class Permutation {
 public:
  Permutation() = default;
  /// `images[i]` is the image of i. Throws InvalidInput if not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Transposition of two 0-based points.
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (σ∘ρ)(i) = σ(ρ(i)).
Permutation operator*(const Permutation& sigma, const Permutation& rho);

/// Parses "(1 2)(3 4 5)", "()" or "id" on n points.
Permutation parse_cycles(std::string_view text, int n);
/// Disjoint cycles with smallest element first; "()" for the identity.
std::string format_cycles(const Permutation& p);

/// All n! permutations in lexicographic order of image vectors.
std::vector<Permutation> all_permutations(int n);

}  // namespace pushcalc
