#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pushcalc/free_group.hpp"
#include "pushcalc/group_ring.hpp"
#include "pushcalc/permutation.hpp"
#include "pushcalc/wedge_monoid.hpp"

namespace pushcalc {

/// One transverse crossing of a generator loop with a (d-1)-cell τ_cell:
/// local sign and the group element of the path from the basepoint.
struct Crossing {
  int cell;
  int sign;
  FreeWord prefix;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Combinatorial model of a manifold M with π₁(M) = F_g: orientation
/// character and, for each generator, the ordered list of cell crossings.
class ManifoldModel {
 public:
  ManifoldModel(int g, int d, std::vector<int> character, std::vector<std::vector<Crossing>> crossings,
                int cells, bool low_handle_dim = false);

  /// M^d_{g,1}: orientable, α_i crosses τ_i once, positively, prefix e.
  static ManifoldModel standard(int g, int d = 3);

  int g() const { return g_; }
  int d() const { return d_; }
  int cells() const { return cells_; }
  const std::vector<int>& character() const { return character_; }
  const std::vector<Crossing>& crossings(int gen) const { return crossings_.at(static_cast<std::size_t>(gen - 1)); }

  /// Declared: M has a handle decomposition with handles of index ≤ d-2.
  bool low_handle_dim() const { return low_handle_dim_; }
  ManifoldModel with_low_handle_dim(bool flag) const;

  bool is_standard() const;
  bool is_orientable() const;
  /// Simply connected or declared low handle dimension.
  bool satisfies_component_hypothesis() const { return g_ == 0 || low_handle_dim_; }

  friend bool operator==(const ManifoldModel&, const ManifoldModel&) = default;

 private:
  int g_;
  int d_;
  std::vector<int> character_;
  std::vector<std::vector<Crossing>> crossings_;
  int cells_;
  bool low_handle_dim_;
};

/// M with k punctures; M∖z ≃ M ∨ W_k has labels t1..t_cells, p1..pk.
struct PuncturedSignature {
  ManifoldModel model;
  int k;

  PuncturedSignature(ManifoldModel m, int punctures);
  WedgeSignature wedge() const;
};

/// An element (w_1, ..., w_k; σ) of F_g^k ⋊ Σ_k.
struct BraidElement {
  std::vector<FreeWord> words;
  Permutation perm;

  BraidElement(std::vector<FreeWord> slot_words, Permutation sigma);
  static BraidElement identity(int k);
  /// Loop generator: `word` in slot (1-based), identity permutation.
  static BraidElement loop(int k, int slot, const FreeWord& word);

  int k() const { return static_cast<int>(words.size()); }
  bool is_identity() const;

  friend bool operator==(const BraidElement&, const BraidElement&) = default;
};

/// (a; σ)·(b; ρ) = ((a_i · b_{σ⁻¹(i)})_i; σ∘ρ). Throws SizeMismatch.
BraidElement braid_mul(const BraidElement& a, const BraidElement& b);
BraidElement braid_inverse(const BraidElement& a);

/// "[a1 A2 | e ; (1 2)]".
std::string format_braid(const BraidElement& b);
/// Parses the bracket syntax; the slot count is the number of '|'-separated
/// words (an empty word list means k = 0).
BraidElement parse_braid(std::string_view text, int rank = 0);

/// Push of the loop generator carrying `letter` in `slot` (1-based).
/// Throws SlotOutOfRange.
SelfMapClass push_letter(const PuncturedSignature& sig, Letter letter, int slot);
SelfMapClass push_sym(const PuncturedSignature& sig, const Permutation& sigma);
/// Composition of letter pushes, first letter outermost.
SelfMapClass push_word(const PuncturedSignature& sig, const FreeWord& w, int slot);

/// f_i(w) = Σ_j ε_j w̄_j over the occurrences of α_i^{±1} in w.
RingElem fox_derivative(const FreeWord& w, int gen);

/// Closed form p ↦ w·p, τ_i ↦ τ_i + f_i(w)·p. Throws ModelNotDefault on a
/// customised model.
SelfMapClass push_word_closed(const PuncturedSignature& sig, const FreeWord& w, int slot);

SelfMapClass push_braid(const PuncturedSignature& sig, const BraidElement& gamma);

struct NotInImage {
  std::string reason;
};

/// Inverse of push_braid on its image (standard model only). Decodes the
/// p-sphere images and confirms by a full round trip.
std::variant<BraidElement, NotInImage> recover_braid(const PuncturedSignature& sig, const SelfMapClass& h);

struct KernelReport {
  std::size_t checked = 0;
  bool exhaustive = false;
  bool identity_in_kernel = false;
  std::vector<BraidElement> nontrivial_kernel;

  bool kernel_trivial() const { return identity_in_kernel && nontrivial_kernel.empty(); }
};

/// Searches braids with slot words of length ≤ max_word_len for elements
/// pushing to the identity. Exhaustive when the space has at most
/// max_braids elements, otherwise max_braids seeded samples (plus the
/// identity).
KernelReport kernel_report(const PuncturedSignature& sig, std::size_t max_word_len, std::size_t max_braids,
                           std::uint64_t seed);

}  // namespace pushcalc
