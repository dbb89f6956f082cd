#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pushcalc/bigint.hpp"
#include "pushcalc/free_group.hpp"
#include "pushcalc/permutation.hpp"
#include "pushcalc/point_push.hpp"

namespace pushcalc {

/// Finite stand-in for a based target X: a set P = π_{d-1}(X) with the
/// π₁(X) action (one permutation per generator), the reflection involution,
/// the charge subset c̃ and a list of declared classes f: M → X, each given
/// by the images of α_1..α_g as words in the π₁(X) generators.
class TargetModel {
 public:
  TargetModel(std::vector<std::string> class_ids, std::vector<Permutation> action, Permutation reflection,
              std::vector<int> charge, std::vector<std::vector<FreeWord>> f_classes);

  int pi1_gens() const { return static_cast<int>(action_.size()); }
  int class_count() const { return static_cast<int>(class_ids_.size()); }
  const std::vector<std::string>& class_ids() const { return class_ids_; }
  const std::vector<Permutation>& action() const { return action_; }
  const Permutation& reflection() const { return reflection_; }
  /// Sorted indices into class_ids().
  const std::vector<int>& charge() const { return charge_; }
  bool in_charge(int cls) const;
  const std::vector<std::vector<FreeWord>>& f_classes() const { return f_classes_; }

  /// Permutation of P induced by a word in the π₁(X) generators.
  Permutation act_word(const FreeWord& w) const;
  /// The g permutations f_*(α_1), ..., f_*(α_g) for an f-class.
  std::vector<Permutation> induced(int f_index, int g) const;

  int index_of(const std::string& id) const;

 private:
  std::vector<std::string> class_ids_;
  std::vector<Permutation> action_;
  Permutation reflection_;
  std::vector<int> charge_;
  std::vector<std::vector<FreeWord>> f_classes_;
};

/// (f, g_1, ..., g_k): an f-class index and k classes in c̃.
struct MapState {
  int f;
  std::vector<int> g_classes;

  friend bool operator==(const MapState&, const MapState&) = default;
  friend auto operator<=>(const MapState&, const MapState&) = default;
};

enum class HypothesisMode { Require, FormulaOnly };

/// ḡ_i = F(α_i)·g_{σ⁻¹(i)}, where F(u) is f_*(u) acting on P followed by
/// the reflection when the orientation character of u is -1. This is a
/// left action of F_g^k ⋊ Σ_k under braid_mul. Throws HypothesisViolation
/// unless the model satisfies the component hypothesis or mode is
/// FormulaOnly.
MapState act(const ManifoldModel& model, const TargetModel& target, const BraidElement& gamma, const MapState& s,
             HypothesisMode mode = HypothesisMode::Require);

/// Orbits of c̃ under ⟨f_*(α_1), ..., f_*(α_g)⟩.
std::vector<std::vector<int>> charge_orbits(const TargetModel& target, int f_index, int g);

/// Σ_f C(|c_f| + k - 1, k). Needs an orientable model.
BigInt components_formula(const ManifoldModel& model, const TargetModel& target, int k,
                          HypothesisMode mode = HypothesisMode::Require);

/// Default state guard: 10^6, or PUSHCALC_MAX_STATES if set.
std::uint64_t default_max_states();

/// Connected components of the state graph on all MapStates under the
/// loop generators and adjacent transpositions. Throws TooLarge when the
/// state count exceeds max_states.
BigInt components_bruteforce(const ManifoldModel& model, const TargetModel& target, int k,
                             std::uint64_t max_states = default_max_states(),
                             HypothesisMode mode = HypothesisMode::Require);

BigInt binomial(std::uint64_t n, std::uint64_t r);

}  // namespace pushcalc
