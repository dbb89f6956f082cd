#include "pushcalc/matrix_embedding.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pushcalc/error.hpp"

namespace pushcalc {

ShiftedBlockMatrix::ShiftedBlockMatrix(WedgeSignature sig, FreeEndo slope, std::map<BlockKey, RingElem> blocks)
    : sig_(std::move(sig)), slope_(std::move(slope)) {
  if (slope_.rank() != sig_.g()) throw SignatureMismatch("slope rank differs from signature");
  for (auto& [key, ring] : blocks) {
    if (!sig_.has_label(key.first) || !sig_.has_label(key.second)) {
      throw SignatureMismatch("block uses a label outside the signature");
    }
    if (!ring.is_zero()) blocks_.emplace(key, std::move(ring));
  }
}

RingElem ShiftedBlockMatrix::block(const SphereLabel& row, const SphereLabel& col) const {
  auto it = blocks_.find({row, col});
  return it == blocks_.end() ? RingElem() : it->second;
}

ShiftedBlockMatrix embed(const SelfMapClass& h) {
  std::map<ShiftedBlockMatrix::BlockKey, RingElem> blocks;
  for (const auto& [col, image] : h.sphere_part()) {
    for (const auto& [row, ring] : image.entries()) blocks.emplace(std::pair{row, col}, ring);
  }
  return ShiftedBlockMatrix(h.signature(), h.circle_part(), std::move(blocks));
}

SelfMapClass unembed(const ShiftedBlockMatrix& a) {
  std::map<SphereLabel, ModuleVec> spheres;
  for (const auto& [key, ring] : a.blocks()) spheres[key.second].add(key.first, ring);
  return SelfMapClass(a.signature(), a.slope(), std::move(spheres));
}

ShiftedBlockMatrix matrix_mul(const ShiftedBlockMatrix& a, const ShiftedBlockMatrix& b) {
  if (!(a.signature() == b.signature())) throw SignatureMismatch("matrix_mul: signatures differ");
  const auto& labels = a.signature().labels();
  std::map<ShiftedBlockMatrix::BlockKey, RingElem> blocks;
  for (const auto& row : labels) {
    for (const auto& col : labels) {
      RingElem acc;
      for (const auto& mid : labels) {
        RingElem left = a.block(row, mid);
        if (left.is_zero()) continue;
        RingElem right = b.block(mid, col);
        if (right.is_zero()) continue;
        acc += ring_mul(left, ring_endo_apply(a.slope(), right));
      }
      if (!acc.is_zero()) blocks.emplace(std::pair{row, col}, std::move(acc));
    }
  }
  return ShiftedBlockMatrix(a.signature(), endo_compose(a.slope(), b.slope()), std::move(blocks));
}

std::string format_block_matrix(const ShiftedBlockMatrix& a) {
  auto entry = [](const RingElem& r) -> std::string {
    if (r.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : r.terms()) {
      std::string unit = w.is_identity() ? "I" : "I^(" + format_word_compact(w) + ")";
      std::string piece = c == 1 ? unit : c == -1 ? "-" + unit : c.str() + unit;
      if (out.empty()) {
        out = piece;
      } else if (piece[0] == '-') {
        out += " - " + piece.substr(1);
      } else {
        out += " + " + piece;
      }
    }
    return out;
  };
  const auto& labels = a.signature().labels();
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 2;
  for (const auto& row : labels) {
    std::vector<std::string> line{format_label(row)};
    for (const auto& col : labels) line.push_back(entry(a.block(row, col)));
    for (const auto& s : line) width = std::max(width, s.size());
    cells.push_back(std::move(line));
  }
  std::ostringstream os;
  os << "slope: (";
  for (std::size_t i = 0; i < a.slope().images().size(); ++i) {
    os << (i ? ", " : "") << format_word_compact(a.slope().images()[i]);
  }
  os << ")\n";
  auto pad = [width](const std::string& s) { return s + std::string(width + 2 - s.size(), ' '); };
  os << pad("");
  for (const auto& col : labels) os << pad(format_label(col));
  os << '\n';
  for (const auto& line : cells) {
    for (const auto& s : line) os << pad(s);
    os << '\n';
  }
  return os.str();
}

std::string format_basis_key(const BasisKey& key) {
  return format_label(key.label) + ":" + format_word_compact(key.word);
}

TruncatedMatrix::TruncatedMatrix(int radius, std::map<BasisKey, Column> columns)
    : radius_(radius), columns_(std::move(columns)) {
  for (auto& [key, col] : columns_) std::erase_if(col, [](const auto& kv) { return kv.second == 0; });
}

BigInt TruncatedMatrix::entry(const BasisKey& row, const BasisKey& col) const {
  auto c = columns_.find(col);
  if (c == columns_.end()) throw InvalidInput("column " + format_basis_key(col) + " outside truncation window");
  auto r = c->second.find(row);
  return r == c->second.end() ? BigInt(0) : r->second;
}

std::vector<BasisKey> TruncatedMatrix::row_keys() const {
  std::set<BasisKey> rows;
  for (const auto& [key, col] : columns_) {
    for (const auto& [row, value] : col) rows.insert(row);
  }
  return {rows.begin(), rows.end()};
}

std::size_t TruncatedMatrix::row_reach() const {
  std::size_t reach = 0;
  for (const auto& [key, col] : columns_) {
    for (const auto& [row, value] : col) reach = std::max(reach, row.word.size());
  }
  return reach;
}

std::string TruncatedMatrix::to_tsv() const {
  std::set<BasisKey> rows;
  for (const auto& [key, col] : columns_) {
    rows.insert(key);
    for (const auto& [row, value] : col) rows.insert(row);
  }
  std::ostringstream os;
  os << "row\\col";
  for (const auto& [key, col] : columns_) os << '\t' << format_basis_key(key);
  os << '\n';
  for (const auto& row : rows) {
    os << format_basis_key(row);
    for (const auto& [key, col] : columns_) {
      auto it = col.find(row);
      os << '\t' << (it == col.end() ? BigInt(0) : it->second);
    }
    os << '\n';
  }
  return os.str();
}

void TruncatedMatrix::set_entry(const BasisKey& row, const BasisKey& col, const BigInt& value) {
  auto& column = columns_.at(col);
  if (value == 0) {
    column.erase(row);
  } else {
    column[row] = value;
  }
}

namespace {

TruncatedMatrix::Column materialize_column(const ShiftedBlockMatrix& a, const BasisKey& col) {
  TruncatedMatrix::Column out;
  const FreeWord shift = endo_apply(a.slope(), col.word);
  for (const auto& [key, ring] : a.blocks()) {
    if (key.second != col.label) continue;
    for (const auto& [v, c] : ring.terms()) {
      BigInt& slot = out[BasisKey{key.first, concat(v, shift)}];
      slot += c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TruncatedMatrix materialize(const ShiftedBlockMatrix& a, int radius) {
  if (radius < 0) throw InvalidInput("radius must be >= 0");
  std::vector<BasisKey> keys;
  for (const auto& w : enumerate_words(a.signature().g(), static_cast<std::size_t>(radius))) {
    for (const auto& label : a.signature().labels()) keys.push_back({label, w});
  }
  TruncatedMatrix t = materialize(a, keys);
  return TruncatedMatrix(radius, t.columns());
}

TruncatedMatrix materialize(const ShiftedBlockMatrix& a, const std::vector<BasisKey>& columns) {
  std::map<BasisKey, TruncatedMatrix::Column> cols;
  for (const auto& key : columns) {
    if (!a.signature().has_label(key.label)) throw SignatureMismatch("column label outside the signature");
    cols.emplace(key, materialize_column(a, key));
  }
  return TruncatedMatrix(-1, std::move(cols));
}

std::size_t row_bound(const ShiftedBlockMatrix& a, int radius) {
  std::size_t longest = 0;
  for (const auto& [key, ring] : a.blocks()) longest = std::max(longest, max_word_length(ring));
  return longest + static_cast<std::size_t>(std::max(radius, 0)) * a.slope().max_image_length();
}

TruncatedMatrix truncated_product(const TruncatedMatrix& left, const TruncatedMatrix& right) {
  std::map<BasisKey, TruncatedMatrix::Column> out;
  for (const auto& [key, col] : right.columns()) {
    TruncatedMatrix::Column acc;
    for (const auto& [mid, y] : col) {
      auto it = left.columns().find(mid);
      if (it == left.columns().end()) {
        throw SizeMismatch("left factor lacks column " + format_basis_key(mid) + "; materialize it at radius >= " +
                           std::to_string(right.row_reach()));
      }
      for (const auto& [row, x] : it->second) acc[row] += x * y;
    }
    out.emplace(key, std::move(acc));
  }
  return TruncatedMatrix(right.radius(), std::move(out));
}

bool is_diagonally_constant(const TruncatedMatrix& t, const FreeEndo& slope) {
  for (const auto& [key, col] : t.columns()) {
    auto base_it = t.columns().find(BasisKey{key.label, FreeWord()});
    if (base_it == t.columns().end()) return false;
    const auto& base = base_it->second;
    const FreeWord shift = endo_apply(slope, key.word);
    const FreeWord unshift = invert(shift);
    if (col.size() != base.size()) return false;
    for (const auto& [row, value] : col) {
      auto it = base.find(BasisKey{row.label, concat(row.word, unshift)});
      if (it == base.end() || it->second != value) return false;
    }
    for (const auto& [row, value] : base) {
      auto it = col.find(BasisKey{row.label, concat(row.word, shift)});
      if (it == col.end() || it->second != value) return false;
    }
  }
  return true;
}

}  // namespace pushcalc
