#include "pushcalc/generators.hpp"

#include <algorithm>
#include <numeric>

namespace pushcalc {

std::vector<Letter> random_letters(Sampler& rng, int rank, std::size_t max_length) {
  std::vector<Letter> out(static_cast<std::size_t>(rng.uniform(0, static_cast<int>(max_length))), Letter(1, 1));
  for (auto& l : out) l = rng.letter(rank);
  return out;
}

RingElem random_ring(Sampler& rng, int rank, int max_terms, std::size_t max_length, int max_coefficient) {
  RingElem out;
  int terms = rng.uniform(0, max_terms);
  for (int i = 0; i < terms; ++i) {
    int c = rng.uniform(1, max_coefficient) * (rng.coin() ? 1 : -1);
    out.add_term(rng.word(rank, max_length), c);
  }
  return out;
}

ModuleVec random_module(Sampler& rng, const WedgeSignature& sig, int max_terms, std::size_t max_length) {
  ModuleVec out;
  int terms = rng.uniform(0, max_terms);
  const auto& labels = sig.labels();
  for (int i = 0; i < terms; ++i) {
    const auto& label = labels[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(labels.size()) - 1))];
    out.add(label, RingElem(rng.word(sig.g(), max_length), rng.uniform(1, 2) * (rng.coin() ? 1 : -1)));
  }
  return out;
}

SelfMapClass random_self_map(Sampler& rng, const WedgeSignature& sig, std::size_t circle_length, int max_terms,
                             std::size_t max_length) {
  std::vector<FreeWord> circles;
  for (int i = 0; i < sig.g(); ++i) circles.push_back(rng.word(sig.g(), circle_length));
  std::map<SphereLabel, ModuleVec> spheres;
  for (const auto& label : sig.labels()) spheres.emplace(label, random_module(rng, sig, max_terms, max_length));
  return SelfMapClass(sig, FreeEndo(std::move(circles)), std::move(spheres));
}

WedgeSignature random_signature(Sampler& rng, int max_g, int max_punctures) {
  int g = rng.uniform(0, max_g);
  std::vector<SphereLabel> labels;
  for (int i = 0; i <= g; ++i) labels.push_back(SphereLabel::tau(i));
  int k = rng.uniform(0, max_punctures);
  for (int i = 1; i <= k; ++i) labels.push_back(SphereLabel::p(i));
  return WedgeSignature(g, std::move(labels), 3);
}

BraidElement random_braid(Sampler& rng, int rank, int k, std::size_t max_length) {
  std::vector<FreeWord> words;
  for (int i = 0; i < k; ++i) words.push_back(rng.word(rank, max_length));
  return BraidElement(std::move(words), rng.permutation(k));
}

ManifoldModel random_orbit_model(Sampler& rng, int max_g, bool allow_nonorientable) {
  int g = rng.uniform(0, max_g);
  std::vector<int> character(static_cast<std::size_t>(g), 1);
  if (allow_nonorientable) {
    for (auto& c : character) c = rng.coin() ? 1 : -1;
  }
  return ManifoldModel(g, 3 + rng.uniform(0, 2), std::move(character),
                       std::vector<std::vector<Crossing>>(static_cast<std::size_t>(g)), 0, true);
}

TargetModel random_target(Sampler& rng, int max_classes, int g, int max_f_classes, bool with_reflection) {
  int base = with_reflection ? std::max(1, max_classes / 2) : max_classes;
  int n = rng.uniform(1, base);
  int total = with_reflection ? 2 * n : n;
  int pi1 = rng.uniform(0, 2);
  std::vector<std::string> ids;
  for (int i = 0; i < total; ++i) ids.push_back("x" + std::to_string(i));
  auto lift = [&](const Permutation& p) {
    if (!with_reflection) return p;
    std::vector<int> images(static_cast<std::size_t>(total));
    for (int i = 0; i < n; ++i) {
      images[static_cast<std::size_t>(i)] = p(i);
      images[static_cast<std::size_t>(i + n)] = p(i) + n;
    }
    return Permutation(std::move(images));
  };
  std::vector<Permutation> action;
  for (int i = 0; i < pi1; ++i) {
    // Bias toward small cycles so that mixed orbit structures are common.
    Permutation p = rng.coin() ? rng.permutation(n) : Permutation::identity(n);
    if (n >= 2 && rng.coin()) p = Permutation::transposition(n, rng.uniform(0, n - 1), rng.uniform(0, n - 1)) * p;
    action.push_back(lift(p));
  }
  Permutation reflection = Permutation::identity(total);
  if (with_reflection) {
    std::vector<int> images(static_cast<std::size_t>(total));
    for (int i = 0; i < n; ++i) {
      images[static_cast<std::size_t>(i)] = i + n;
      images[static_cast<std::size_t>(i + n)] = i;
    }
    reflection = Permutation(std::move(images));
  }
  // Orbits of the full group generated by the action and the reflection.
  std::vector<int> parent(static_cast<std::size_t>(total));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto join = [&](const Permutation& p) {
    for (int i = 0; i < total; ++i) parent[static_cast<std::size_t>(find(i))] = find(p(i));
  };
  for (const auto& p : action) join(p);
  join(reflection);
  std::vector<int> charge;
  std::vector<int> keep(static_cast<std::size_t>(total), -1);
  for (int i = 0; i < total; ++i) {
    int r = find(i);
    if (keep[static_cast<std::size_t>(r)] < 0) keep[static_cast<std::size_t>(r)] = rng.uniform(0, 3) != 0 ? 1 : 0;
    if (keep[static_cast<std::size_t>(r)] == 1) charge.push_back(i);
  }
  std::vector<std::vector<FreeWord>> fs;
  int f_count = rng.uniform(1, max_f_classes);
  for (int f = 0; f < f_count; ++f) {
    std::vector<FreeWord> words;
    for (int i = 0; i < g; ++i) words.push_back(rng.word(pi1, 2));
    fs.push_back(std::move(words));
  }
  return TargetModel(std::move(ids), std::move(action), std::move(reflection), std::move(charge), std::move(fs));
}

std::vector<FreeWord> shrink(const FreeWord& w) {
  std::vector<FreeWord> out;
  if (w.is_identity()) return out;
  out.emplace_back();
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<Letter> raw(w.letters().begin(), w.letters().end());
    raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(FreeWord::reduce(raw));
  }
  return out;
}

std::vector<std::vector<Letter>> shrink(const std::vector<Letter>& letters) {
  std::vector<std::vector<Letter>> out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    auto copy = letters;
    copy.erase(copy.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(std::move(copy));
  }
  return out;
}

std::vector<RingElem> shrink(const RingElem& a) {
  std::vector<RingElem> out;
  for (const auto& [w, c] : a.terms()) {
    RingElem dropped = a;
    dropped.add_term(w, -c);
    out.push_back(std::move(dropped));
    for (const auto& smaller : shrink(w)) {
      RingElem moved = a;
      moved.add_term(w, -c);
      moved.add_term(smaller, c);
      out.push_back(std::move(moved));
    }
    if (abs(c) > 1) {
      RingElem unit = a;
      unit.add_term(w, c > 0 ? BigInt(1) - c : BigInt(-1) - c);
      out.push_back(std::move(unit));
    }
  }
  return out;
}

std::vector<SelfMapClass> shrink(const SelfMapClass& h) {
  std::vector<SelfMapClass> out;
  const auto& images = h.circle_part().images();
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (const auto& smaller : shrink(images[i])) {
      auto circles = images;
      circles[i] = smaller;
      out.emplace_back(h.signature(), FreeEndo(std::move(circles)), h.sphere_part());
    }
  }
  for (const auto& [label, vec] : h.sphere_part()) {
    for (const auto& [target, ring] : vec.entries()) {
      for (const auto& smaller : shrink(ring)) {
        auto spheres = h.sphere_part();
        ModuleVec replaced;
        for (const auto& [t, r] : vec.entries()) replaced.add(t, t == target ? smaller : r);
        spheres[label] = replaced;
        out.emplace_back(h.signature(), h.circle_part(), std::move(spheres));
      }
    }
  }
  return out;
}

std::vector<BraidElement> shrink(const BraidElement& b) {
  std::vector<BraidElement> out;
  if (!b.perm.is_identity()) out.emplace_back(b.words, Permutation::identity(b.k()));
  for (std::size_t i = 0; i < b.words.size(); ++i) {
    for (const auto& smaller : shrink(b.words[i])) {
      auto words = b.words;
      words[i] = smaller;
      out.emplace_back(std::move(words), b.perm);
    }
  }
  return out;
}

std::string show(const FreeWord& w) { return format_word(w); }

std::string show(const std::vector<Letter>& letters) {
  std::string out = "raw[";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    out += (i ? " " : "") + std::string(letters[i].sign() > 0 ? "a" : "A") + std::to_string(letters[i].gen());
  }
  return out + "]";
}

std::string show(const RingElem& a) { return format_ring(a); }
std::string show(const SelfMapClass& h) { return format_tuple(h); }
std::string show(const BraidElement& b) { return format_braid(b); }
std::string show(int x) { return std::to_string(x); }

}  // namespace pushcalc
