#pragma once

#include <map>
#include <string>
#include <string_view>

#include "pushcalc/bigint.hpp"
#include "pushcalc/free_group.hpp"

namespace pushcalc {

/// An element of the integral group ring Z[F_g]: a finitely supported map
/// from reduced words to nonzero integers, kept in shortlex order.
class RingElem {
 public:
  using Terms = std::map<FreeWord, BigInt>;

  RingElem() = default;
  RingElem(const BigInt& constant);  // NOLINT(google-explicit-constructor)
  explicit RingElem(const FreeWord& word, const BigInt& coefficient = 1);

  static RingElem zero() { return {}; }
  static RingElem one() { return RingElem(FreeWord()); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c·word, dropping the term if the coefficient becomes zero.
  void add_term(const FreeWord& word, const BigInt& c);

  RingElem& operator+=(const RingElem& other);
  RingElem& operator-=(const RingElem& other);

  friend bool operator==(const RingElem&, const RingElem&) = default;

 private:
  Terms terms_;
};

RingElem ring_add(const RingElem& a, const RingElem& b);
RingElem ring_neg(const RingElem& a);
RingElem ring_mul(const RingElem& a, const RingElem& b);
RingElem ring_scale(const BigInt& c, const RingElem& a);

/// Left multiplication by a group element: each term w becomes u·w.
RingElem translate(const FreeWord& u, const RingElem& a);
/// Right multiplication by a group element: each term w becomes w·u.
RingElem translate_right(const RingElem& a, const FreeWord& u);

RingElem ring_endo_apply(const FreeEndo& phi, const RingElem& a);
BigInt coefficient(const RingElem& a, const FreeWord& u);

/// Augmentation Z[F_g] → Z.
BigInt augment(const RingElem& a);

/// Longest support word (0 for the zero element).
std::size_t max_word_length(const RingElem& a);

inline RingElem operator+(const RingElem& a, const RingElem& b) { return ring_add(a, b); }
inline RingElem operator-(const RingElem& a) { return ring_neg(a); }
inline RingElem operator-(const RingElem& a, const RingElem& b) { return ring_add(a, ring_neg(b)); }
inline RingElem operator*(const RingElem& a, const RingElem& b) { return ring_mul(a, b); }

/// Human form, e.g. "1 - a1a2A1", "2a1 + A2", "0".
std::string format_ring(const RingElem& a);

// ---------------------------------------------------------------------------
// Free modules over Z[F_g] with a basis of sphere labels.

/// Basis sphere of a wedge: τ_i cells (Tau, i ≥ 0; Tau 0 is the puncture
/// sphere p in the one-puncture presentation) and puncture spheres p_i
/// (P, i ≥ 1). Labels order as t0 < p1 < ... < pk < t1 < ... < tg.
struct SphereLabel {
  enum class Kind { Tau, P };

  Kind kind = Kind::Tau;
  int index = 0;

  static SphereLabel tau(int i) { return {Kind::Tau, i}; }
  static SphereLabel p(int i) { return {Kind::P, i}; }

  friend bool operator==(const SphereLabel&, const SphereLabel&) = default;
  friend std::strong_ordering operator<=>(const SphereLabel& a, const SphereLabel& b);
};

/// "t0", "t3", "p1", ...
std::string format_label(const SphereLabel& label);
SphereLabel parse_label(std::string_view text);

/// An element of the free module Z[F_g]B; zero entries are omitted.
class ModuleVec {
 public:
  using Entries = std::map<SphereLabel, RingElem>;

  ModuleVec() = default;
  static ModuleVec unit(const SphereLabel& label, const RingElem& coefficient = RingElem::one());

  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  RingElem at(const SphereLabel& label) const;

  void add(const SphereLabel& label, const RingElem& value);
  ModuleVec& operator+=(const ModuleVec& other);

  friend bool operator==(const ModuleVec&, const ModuleVec&) = default;

 private:
  Entries entries_;
};

ModuleVec module_add(const ModuleVec& a, const ModuleVec& b);
ModuleVec module_scale(const BigInt& c, const ModuleVec& v);
ModuleVec module_translate(const FreeWord& u, const ModuleVec& v);
ModuleVec module_translate_right(const ModuleVec& v, const FreeWord& u);
ModuleVec module_endo_apply(const FreeEndo& phi, const ModuleVec& v);

/// Tuple-notation rendering, e.g. "t1 + (1 - a1a2A1)·p1". Cells τ_i (i ≥ 1)
/// are listed before the puncture spheres.
std::string format_module(const ModuleVec& v);

}  // namespace pushcalc
