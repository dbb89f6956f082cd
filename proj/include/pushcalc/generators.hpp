#pragma once

#include <string>
#include <vector>

#include "pushcalc/group_ring.hpp"
#include "pushcalc/mapping_orbits.hpp"
#include "pushcalc/point_push.hpp"
#include "pushcalc/random.hpp"
#include "pushcalc/wedge_monoid.hpp"

namespace pushcalc {

// Random inputs for property checks, and shrinkers that propose strictly
// smaller variants of a failing input.

/// Unreduced letter sequence.
std::vector<Letter> random_letters(Sampler& rng, int rank, std::size_t max_length);
RingElem random_ring(Sampler& rng, int rank, int max_terms, std::size_t max_length, int max_coefficient = 3);
ModuleVec random_module(Sampler& rng, const WedgeSignature& sig, int max_terms, std::size_t max_length);
SelfMapClass random_self_map(Sampler& rng, const WedgeSignature& sig, std::size_t circle_length, int max_terms,
                             std::size_t max_length);
/// Signature with g circles, t0..t_g and `punctures` p-spheres.
WedgeSignature random_signature(Sampler& rng, int max_g, int max_punctures);
BraidElement random_braid(Sampler& rng, int rank, int k, std::size_t max_length);

/// Random model with low_handle_dim declared; orientable unless
/// `allow_nonorientable`.
ManifoldModel random_orbit_model(Sampler& rng, int max_g, bool allow_nonorientable);
/// Classes are pairs (x, s) when `with_reflection` (reflection flips s);
/// charge is a random union of orbits.
TargetModel random_target(Sampler& rng, int max_classes, int g, int max_f_classes, bool with_reflection);

std::vector<FreeWord> shrink(const FreeWord& w);
std::vector<std::vector<Letter>> shrink(const std::vector<Letter>& letters);
std::vector<RingElem> shrink(const RingElem& a);
std::vector<SelfMapClass> shrink(const SelfMapClass& h);
std::vector<BraidElement> shrink(const BraidElement& b);
inline std::vector<int> shrink(int) { return {}; }

std::string show(const FreeWord& w);
std::string show(const std::vector<Letter>& letters);
std::string show(const RingElem& a);
std::string show(const SelfMapClass& h);
std::string show(const BraidElement& b);
std::string show(int x);

}  // namespace pushcalc
