#pragma once

// Independent reference implementations used to check the library. They
// share no code with src/ beyond the value types they convert from.

#include <map>
#include <vector>

#include "pushcalc/group_ring.hpp"
#include "pushcalc/matrix_embedding.hpp"
#include "pushcalc/mapping_orbits.hpp"
#include "pushcalc/wedge_monoid.hpp"

namespace oracle {

/// Letters as signed generator indices: +i for a_i, -i for A_i.
using RawWord = std::vector<int>;

RawWord reduce(const RawWord& w);
RawWord raw(const pushcalc::FreeWord& w);

/// Group ring element as reduced raw word -> coefficient.
using NaiveRing = std::map<RawWord, long long>;

NaiveRing naive(const pushcalc::RingElem& a);
/// Double loop over terms, concatenate, reduce, accumulate.
NaiveRing naive_mul(const NaiveRing& a, const NaiveRing& b);

/// g = 1 self-map with sphere labels p, τ in the abelian notation: the circle
/// goes to α^k, p ↦ Σ α^i(m_i p + n_i τ), τ ↦ Σ α^i(r_i p + s_i τ).
struct RankOneMap {
  int k = 1;
  std::map<int, long long> m, n, r, s;

  friend bool operator==(const RankOneMap&, const RankOneMap&) = default;
};

/// Expects signature g = 1 with labels {p, τ} (one p-label, one τ-label).
RankOneMap to_rank_one(const pushcalc::SelfMapClass& h);
/// The composition law for g = 1 transcribed term by term.
RankOneMap compose_rank_one(const RankOneMap& outer, const RankOneMap& inner);

/// Product of two truncated matrices by summing over every middle index the
/// right factor touches, reading entries through entry().
std::map<std::pair<pushcalc::BasisKey, pushcalc::BasisKey>, pushcalc::BigInt> dense_product(
    const pushcalc::TruncatedMatrix& left, const pushcalc::TruncatedMatrix& right);
std::map<std::pair<pushcalc::BasisKey, pushcalc::BasisKey>, pushcalc::BigInt> entries(
    const pushcalc::TruncatedMatrix& t);

/// Path components of the configuration state graph for an orientable
/// model: breadth-first search over tuples of charge classes, moving one
/// slot by a generator permutation of the f-class or swapping two slots.
long long count_components(const pushcalc::TargetModel& target, int g, int k);

}  // namespace oracle
