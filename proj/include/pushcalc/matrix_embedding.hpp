#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pushcalc/bigint.hpp"
#include "pushcalc/free_group.hpp"
#include "pushcalc/group_ring.hpp"
#include "pushcalc/wedge_monoid.hpp"

namespace pushcalc {

/// A B×B block matrix whose F_g×F_g blocks are diagonally constant of slope
/// −w: entry a_{v,u} = a_{v·w(u)⁻¹, e}. Each block is stored as its
/// e-column, a ring element whose coefficient at v is a_{v,e}.
class ShiftedBlockMatrix {
 public:
  using BlockKey = std::pair<SphereLabel, SphereLabel>;  // (row label, column label)

  ShiftedBlockMatrix(WedgeSignature sig, FreeEndo slope, std::map<BlockKey, RingElem> blocks);

  const WedgeSignature& signature() const { return sig_; }
  const FreeEndo& slope() const { return slope_; }
  const std::map<BlockKey, RingElem>& blocks() const { return blocks_; }
  RingElem block(const SphereLabel& row, const SphereLabel& col) const;

  friend bool operator==(const ShiftedBlockMatrix&, const ShiftedBlockMatrix&) = default;

 private:
  WedgeSignature sig_;
  FreeEndo slope_;
  std::map<BlockKey, RingElem> blocks_;  // zero blocks omitted
};

ShiftedBlockMatrix embed(const SelfMapClass& h);

/// Inverse of embed on its image.
SelfMapClass unembed(const ShiftedBlockMatrix& a);

/// Closed-form product: slope A.slope ∘ B.slope and block columns
/// Σ_m A.col(ℓ,m) · A.slope(B.col(m,b)).
ShiftedBlockMatrix matrix_mul(const ShiftedBlockMatrix& a, const ShiftedBlockMatrix& b);

/// Rendering with I^(u) for the unit column at u, one row per label.
std::string format_block_matrix(const ShiftedBlockMatrix& a);

/// Basis vector u·b of π_{d-1} of the universal cover.
struct BasisKey {
  SphereLabel label;
  FreeWord word;

  friend bool operator==(const BasisKey&, const BasisKey&) = default;
  friend std::strong_ordering operator<=>(const BasisKey& a, const BasisKey& b) {
    if (auto c = a.label <=> b.label; c != 0) return c;
    return a.word <=> b.word;
  }
};

std::string format_basis_key(const BasisKey& key);

/// A finite window of an infinite vertically-finite matrix: every column
/// u·b with |u| ≤ radius (or an explicit column set), stored sparsely. Each
/// stored column is complete; rows are whatever the columns reach.
class TruncatedMatrix {
 public:
  using Column = std::map<BasisKey, BigInt>;

  TruncatedMatrix(int radius, std::map<BasisKey, Column> columns);

  /// Radius on which every column is present and trustworthy.
  int radius() const { return radius_; }
  const std::map<BasisKey, Column>& columns() const { return columns_; }
  bool has_column(const BasisKey& key) const { return columns_.count(key) != 0; }
  BigInt entry(const BasisKey& row, const BasisKey& col) const;

  /// Sorted union of nonzero row keys.
  std::vector<BasisKey> row_keys() const;
  /// Longest word among nonzero rows: the radius a left factor must cover.
  std::size_t row_reach() const;

  /// TSV dump; header and row labels are "label:word", rows are the union of
  /// column keys and nonzero row keys, all in shortlex order.
  std::string to_tsv() const;

  /// Overwrites one entry (zero erases). Used to build negative controls.
  void set_entry(const BasisKey& row, const BasisKey& col, const BigInt& value);

  friend bool operator==(const TruncatedMatrix&, const TruncatedMatrix&) = default;

 private:
  int radius_;
  std::map<BasisKey, Column> columns_;
};

/// Explicit action on all u·b with |u| ≤ radius, entries by the
/// diagonal-constancy rule.
TruncatedMatrix materialize(const ShiftedBlockMatrix& a, int radius);
/// Same, on an explicit set of columns (radius recorded as -1).
TruncatedMatrix materialize(const ShiftedBlockMatrix& a, const std::vector<BasisKey>& columns);

/// A-priori bound on row_reach() of materialize(a, radius).
std::size_t row_bound(const ShiftedBlockMatrix& a, int radius);

/// Honest sparse product left·right on right's columns. Throws SizeMismatch
/// unless left has a column for every row key of right; the result carries
/// right's radius.
TruncatedMatrix truncated_product(const TruncatedMatrix& left, const TruncatedMatrix& right);

/// Checks a_{v,u} = a_{v·slope(u)⁻¹, e} in both directions for every stored
/// column against the e-columns.
bool is_diagonally_constant(const TruncatedMatrix& t, const FreeEndo& slope);

}  // namespace pushcalc
