#include "pushcalc/wedge_monoid.hpp"

#include <algorithm>
#include <sstream>

#include "pushcalc/error.hpp"

namespace pushcalc {

WedgeSignature::WedgeSignature(int g, std::vector<SphereLabel> labels, int d)
    : g_(g), labels_(std::move(labels)), d_(d) {
  if (g_ < 0) throw InvalidInput("circle count must be >= 0");
  if (d_ < 3) throw InvalidInput("sphere dimension requires d >= 3, got d = " + std::to_string(d_));
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw InvalidInput("duplicate sphere label");
  }
}

bool WedgeSignature::has_label(const SphereLabel& label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

std::size_t WedgeSignature::label_index(const SphereLabel& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) throw InvalidInput("label " + format_label(label) + " not in signature");
  return static_cast<std::size_t>(it - labels_.begin());
}

SelfMapClass::SelfMapClass(WedgeSignature sig, FreeEndo circles, std::map<SphereLabel, ModuleVec> spheres)
    : sig_(std::move(sig)), circles_(std::move(circles)), spheres_(std::move(spheres)) {
  if (circles_.rank() != sig_.g()) {
    throw SignatureMismatch("circle part has rank " + std::to_string(circles_.rank()) + ", signature has g = " +
                            std::to_string(sig_.g()));
  }
  for (const auto& w : circles_.images()) {
    if (w.max_gen() > sig_.g()) throw SignatureMismatch("circle image " + format_word(w) + " exceeds rank");
  }
  for (const auto& [label, vec] : spheres_) {
    if (!sig_.has_label(label)) throw SignatureMismatch("image given for unknown sphere " + format_label(label));
    for (const auto& [target, ring] : vec.entries()) {
      if (!sig_.has_label(target)) {
        throw SignatureMismatch("sphere image uses unknown label " + format_label(target));
      }
      for (const auto& [w, c] : ring.terms()) {
        if (w.max_gen() > sig_.g()) throw SignatureMismatch("coefficient word " + format_word(w) + " exceeds rank");
      }
    }
  }
  for (const auto& label : sig_.labels()) spheres_.try_emplace(label);
}

const ModuleVec& SelfMapClass::sphere_image(const SphereLabel& label) const {
  auto it = spheres_.find(label);
  if (it == spheres_.end()) throw InvalidInput("label " + format_label(label) + " not in signature");
  return it->second;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()), data_(rows_ * cols_) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
    std::size_t c = 0;
    for (long long x : row) (*this)(r, c++) = x;
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw SizeMismatch("matrix shapes do not compose");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

SelfMapClass identity(const WedgeSignature& sig) {
  std::map<SphereLabel, ModuleVec> spheres;
  for (const auto& label : sig.labels()) spheres.emplace(label, ModuleVec::unit(label));
  return SelfMapClass(sig, FreeEndo::identity(sig.g()), std::move(spheres));
}

SelfMapClass compose(const SelfMapClass& outer, const SelfMapClass& inner) {
  if (!(outer.signature() == inner.signature())) throw SignatureMismatch("compose: signatures differ");
  const FreeEndo& phi = outer.circle_part();
  std::map<SphereLabel, ModuleVec> spheres;
  for (const auto& [b, image] : inner.sphere_part()) {
    ModuleVec acc;
    for (const auto& [label, ring] : image.entries()) {
      const ModuleVec& target = outer.sphere_image(label);
      for (const auto& [u, c] : ring.terms()) {
        acc += module_scale(c, module_translate_right(target, endo_apply(phi, u)));
      }
    }
    spheres.emplace(b, std::move(acc));
  }
  return SelfMapClass(outer.signature(), endo_compose(phi, inner.circle_part()), std::move(spheres));
}

IntMatrix top_homology_matrix(const SelfMapClass& h) {
  const auto& labels = h.signature().labels();
  IntMatrix m(labels.size(), labels.size());
  for (std::size_t col = 0; col < labels.size(); ++col) {
    for (const auto& [label, ring] : h.sphere_image(labels[col]).entries()) {
      m(h.signature().label_index(label), col) = augment(ring);
    }
  }
  return m;
}

bool verify_inverse(const SelfMapClass& h1, const SelfMapClass& h2) {
  if (!(h1.signature() == h2.signature())) return false;
  const SelfMapClass id = identity(h1.signature());
  return compose(h1, h2) == id && compose(h2, h1) == id;
}

std::string format_tuple(const SelfMapClass& h) {
  std::string out = "(";
  bool first = true;
  auto emit = [&](const std::string& s) {
    if (!first) out += ", ";
    out += s;
    first = false;
  };
  for (const auto& w : h.circle_part().images()) emit(format_word_compact(w));
  for (const auto& label : h.signature().labels()) emit(format_module(h.sphere_image(label)));
  return out + ")";
}

}  // namespace pushcalc
