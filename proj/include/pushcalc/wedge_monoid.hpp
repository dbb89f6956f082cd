#pragma once

#include <map>
#include <string>
#include <vector>

#include "pushcalc/bigint.hpp"
#include "pushcalc/free_group.hpp"
#include "pushcalc/group_ring.hpp"

namespace pushcalc {

/// A wedge of g circles and a labelled set of (d-1)-spheres, d ≥ 3.
/// Labels are kept sorted and unique.
class WedgeSignature {
 public:
  WedgeSignature(int g, std::vector<SphereLabel> labels, int d = 3);

  int g() const { return g_; }
  int d() const { return d_; }
  const std::vector<SphereLabel>& labels() const { return labels_; }
  bool has_label(const SphereLabel& label) const;
  /// Position of a label in labels(); throws InvalidInput if absent.
  std::size_t label_index(const SphereLabel& label) const;

  friend bool operator==(const WedgeSignature&, const WedgeSignature&) = default;

 private:
  int g_;
  std::vector<SphereLabel> labels_;
  int d_;
};

/// A based homotopy class of self-maps of the wedge: the images of the
/// circles (an endomorphism of F_g) and of each basis sphere (a vector in
/// π_{d-1} = Z[F_g]B).
class SelfMapClass {
 public:
  SelfMapClass(WedgeSignature sig, FreeEndo circles, std::map<SphereLabel, ModuleVec> spheres);

  const WedgeSignature& signature() const { return sig_; }
  const FreeEndo& circle_part() const { return circles_; }
  const std::map<SphereLabel, ModuleVec>& sphere_part() const { return spheres_; }
  const ModuleVec& sphere_image(const SphereLabel& label) const;

  friend bool operator==(const SelfMapClass&, const SelfMapClass&) = default;

 private:
  WedgeSignature sig_;
  FreeEndo circles_;
  std::map<SphereLabel, ModuleVec> spheres_;  // one entry per signature label
};

/// Dense integer matrix; used for the action on H_{d-1} and for small checks.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::string format_matrix(const IntMatrix& m);

SelfMapClass identity(const WedgeSignature& sig);

/// outer ∘ inner. Circles compose as endomorphisms; a sphere term c·u·ℓ of
/// inner's image becomes c·outer(ℓ)·φ(u), φ the outer circle endomorphism.
/// Throws SignatureMismatch.
SelfMapClass compose(const SelfMapClass& outer, const SelfMapClass& inner);

/// (ℓ, b) entry: augmentation of the ℓ-coefficient of the image of b, in the
/// signature's label order.
IntMatrix top_homology_matrix(const SelfMapClass& h);

/// True iff h1∘h2 and h2∘h1 are both the identity.
bool verify_inverse(const SelfMapClass& h1, const SelfMapClass& h2);

/// Tuple notation "(a1, a1·p1, t1 + p1)": circle images, then sphere images
/// in label order.
std::string format_tuple(const SelfMapClass& h);

}  // namespace pushcalc
