#include "pushcalc/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <tuple>
#include <utility>

#include "pushcalc/error.hpp"
#include "pushcalc/generators.hpp"
#include "pushcalc/matrix_embedding.hpp"
#include "pushcalc/mapping_orbits.hpp"
#include "pushcalc/point_push.hpp"

namespace pushcalc {

// Printers and (empty) shrinkers for inputs that are kept as generated.
std::vector<FreeEndo> shrink(const FreeEndo&) { return {}; }
std::vector<Permutation> shrink(const Permutation&) { return {}; }
std::vector<ManifoldModel> shrink(const ManifoldModel&) { return {}; }
std::vector<TargetModel> shrink(const TargetModel&) { return {}; }
std::vector<MapState> shrink(const MapState&) { return {}; }

std::string show(const FreeEndo& phi) {
  std::string out = "endo(";
  for (std::size_t i = 0; i < phi.images().size(); ++i) out += (i ? ", " : "") + format_word(phi.images()[i]);
  return out + ")";
}
std::string show(const Permutation& p) { return format_cycles(p); }
std::string show(const ManifoldModel& m) {
  std::string out = "model(g=" + std::to_string(m.g()) + ", character=[";
  for (std::size_t i = 0; i < m.character().size(); ++i) out += (i ? "," : "") + std::to_string(m.character()[i]);
  return out + "])";
}
std::string show(const TargetModel& t) { return target_to_json(t).dump(); }
std::string show(const MapState& s) {
  std::string out = "state(f" + std::to_string(s.f) + ";";
  for (int c : s.g_classes) out += " " + std::to_string(c);
  return out + ")";
}

namespace {

constexpr int kMaxShrinkSteps = 400;

std::uint64_t mix_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a, then a splitmix finalizer
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::uint64_t z = seed + h + 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct Outcome {
  bool ok;
  std::string why;
};

template <class Prop, class Tuple>
Outcome evaluate(const Prop& prop, const Tuple& input) {
  try {
    if (std::apply(prop, input)) return {true, {}};
    return {false, "property does not hold"};
  } catch (const std::exception& e) {
    return {false, std::string("threw: ") + e.what()};
  }
}

template <class Tuple, std::size_t... I>
std::vector<Tuple> shrink_tuple(const Tuple& t, std::index_sequence<I...>) {
  std::vector<Tuple> out;
  auto one = [&](auto index) {
    constexpr std::size_t J = decltype(index)::value;
    for (auto& smaller : shrink(std::get<J>(t))) {
      Tuple copy = t;
      std::get<J>(copy) = std::move(smaller);
      out.push_back(std::move(copy));
    }
  };
  (one(std::integral_constant<std::size_t, I>{}), ...);
  return out;
}

template <class Tuple, std::size_t... I>
std::string show_tuple(const Tuple& t, std::index_sequence<I...>) {
  std::string out;
  ((out += (I ? " ; " : "") + show(std::get<I>(t))), ...);
  return out;
}

/// Runs `prop` on `cases` generated inputs; on the first failure, greedily
/// shrinks the input while it keeps failing.
template <class Gen, class Prop>
PropertyResult check(const std::string& name, const VerifyOptions& opt, Gen gen, Prop prop) {
  using Tuple = decltype(gen(std::declval<Sampler&>()));
  constexpr auto indices = std::make_index_sequence<std::tuple_size_v<Tuple>>{};
  PropertyResult r;
  r.name = name;
  Sampler rng(mix_seed(opt.seed, name));
  for (int i = 0; i < opt.cases; ++i) {
    Tuple input = gen(rng);
    ++r.cases_run;
    Outcome outcome = evaluate(prop, input);
    if (outcome.ok) continue;
    bool progress = true;
    while (progress && r.shrink_steps < kMaxShrinkSteps) {
      progress = false;
      for (auto& candidate : shrink_tuple(input, indices)) {
        Outcome c = evaluate(prop, candidate);
        if (!c.ok) {
          input = std::move(candidate);
          outcome = std::move(c);
          ++r.shrink_steps;
          progress = true;
          break;
        }
      }
    }
    r.passed = false;
    r.counterexample = show_tuple(input, indices) + "  [" + outcome.why + "]";
    break;
  }
  return r;
}

FreeEndo random_endo(Sampler& rng, int rank, std::size_t max_length) {
  std::vector<FreeWord> images;
  for (int i = 0; i < rank; ++i) images.push_back(rng.word(rank, max_length));
  return FreeEndo(std::move(images));
}

// Deliberately broken operations for --inject-fault.

FreeWord invert_unreversed(const FreeWord& u) {
  std::vector<Letter> out;
  for (Letter l : u.letters()) out.push_back(l.inverse());
  return FreeWord::reduce(out);
}

RingElem mul_dropping_last(const RingElem& a, const RingElem& b) {
  if (b.terms().empty()) return ring_mul(a, b);
  RingElem trimmed = b;
  auto last = std::prev(b.terms().end());
  trimmed.add_term(last->first, -last->second);
  return ring_mul(a, trimmed);
}

SelfMapClass compose_abs_coefficients(const SelfMapClass& outer, const SelfMapClass& inner) {
  const FreeEndo& phi = outer.circle_part();
  std::map<SphereLabel, ModuleVec> spheres;
  for (const auto& [b, image] : inner.sphere_part()) {
    ModuleVec acc;
    for (const auto& [label, ring] : image.entries()) {
      for (const auto& [u, c] : ring.terms()) {
        acc += module_scale(abs(c), module_translate_right(outer.sphere_image(label), endo_apply(phi, u)));
      }
    }
    spheres.emplace(b, std::move(acc));
  }
  return SelfMapClass(outer.signature(), endo_compose(phi, inner.circle_part()), std::move(spheres));
}

/// The other sidedness: translates the outer image on the left.
SelfMapClass compose_left_translation(const SelfMapClass& outer, const SelfMapClass& inner) {
  const FreeEndo& phi = outer.circle_part();
  std::map<SphereLabel, ModuleVec> spheres;
  for (const auto& [b, image] : inner.sphere_part()) {
    ModuleVec acc;
    for (const auto& [label, ring] : image.entries()) {
      for (const auto& [u, c] : ring.terms()) {
        acc += module_scale(c, module_translate(endo_apply(phi, u), outer.sphere_image(label)));
      }
    }
    spheres.emplace(b, std::move(acc));
  }
  return SelfMapClass(outer.signature(), endo_compose(phi, inner.circle_part()), std::move(spheres));
}

using ComposeFn = std::function<SelfMapClass(const SelfMapClass&, const SelfMapClass&)>;

ComposeFn library_compose() {
  return [](const SelfMapClass& a, const SelfMapClass& b) { return compose(a, b); };
}

bool inverse_pair(const ComposeFn& fn, const SelfMapClass& a, const SelfMapClass& b) {
  const SelfMapClass id = identity(a.signature());
  return fn(a, b) == id && fn(b, a) == id;
}

SelfMapClass push_word_with(const ComposeFn& fn, const PuncturedSignature& sig, const FreeWord& w, int slot) {
  SelfMapClass out = identity(sig.wedge());
  for (Letter l : w.letters()) out = fn(out, push_letter(sig, l, slot));
  return out;
}

SelfMapClass push_braid_with(const ComposeFn& fn, const PuncturedSignature& sig, const BraidElement& b) {
  SelfMapClass out = identity(sig.wedge());
  for (int i = 1; i <= sig.k; ++i) out = fn(out, push_word_with(fn, sig, b.words[static_cast<std::size_t>(i - 1)], i));
  return fn(out, push_sym(sig, b.perm));
}

/// The action with the slot index taken through σ instead of σ⁻¹.
MapState act_sigma_indexed(const ManifoldModel& model, const TargetModel& target, const BraidElement& gamma,
                           const MapState& s) {
  const auto gens = target.induced(s.f, model.g());
  MapState out{s.f, std::vector<int>(s.g_classes.size())};
  for (int i = 0; i < gamma.k(); ++i) {
    Permutation F = Permutation::identity(target.class_count());
    for (Letter l : gamma.words[static_cast<std::size_t>(i)].letters()) {
      const Permutation& p = gens[static_cast<std::size_t>(l.gen() - 1)];
      F = F * (l.sign() > 0 ? p : p.inverse());
    }
    if (char_sign(model.character(), gamma.words[static_cast<std::size_t>(i)]) < 0) F = target.reflection() * F;
    out.g_classes[static_cast<std::size_t>(i)] = F(s.g_classes[static_cast<std::size_t>(gamma.perm(i))]);
  }
  return out;
}

// ---------------------------------------------------------------------------

SuiteReport group_suite(const VerifyOptions& opt) {
  SuiteReport rep;
  auto inv = opt.inject_fault ? std::function<FreeWord(const FreeWord&)>(invert_unreversed)
                              : std::function<FreeWord(const FreeWord&)>([](const FreeWord& u) { return invert(u); });
  auto words = [](int n) {
    return [n](Sampler& rng) {
      int g = rng.uniform(1, 4);
      std::vector<FreeWord> ws;
      for (int i = 0; i < n; ++i) ws.push_back(rng.word(g, 20));
      return ws;
    };
  };
  rep.properties.push_back(check(
      "reduce is idempotent", opt,
      [](Sampler& rng) { return std::make_tuple(random_letters(rng, rng.uniform(1, 4), 24)); },
      [](const std::vector<Letter>& raw) {
        FreeWord w = FreeWord::reduce(raw);
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          if (w[i + 1] == w[i].inverse()) return false;
        }
        return FreeWord::reduce(w.letters()) == w;
      }));
  rep.properties.push_back(check(
      "concat is associative", opt,
      [&](Sampler& rng) {
        auto ws = words(3)(rng);
        return std::make_tuple(ws[0], ws[1], ws[2]);
      },
      [](const FreeWord& u, const FreeWord& v, const FreeWord& w) { return (u * v) * w == u * (v * w); }));
  rep.properties.push_back(check(
      "identity is two-sided", opt, [&](Sampler& rng) { return std::make_tuple(words(1)(rng)[0]); },
      [](const FreeWord& u) { return FreeWord() * u == u && u * FreeWord() == u; }));
  rep.properties.push_back(check(
      "inverses are two-sided", opt, [&](Sampler& rng) { return std::make_tuple(words(1)(rng)[0]); },
      [&](const FreeWord& u) { return (u * inv(u)).is_identity() && (inv(u) * u).is_identity(); }));
  rep.properties.push_back(check(
      "letter_profile round trip", opt,
      [](Sampler& rng) {
        int g = rng.uniform(1, 4);
        return std::make_tuple(g, rng.word(g, 20));
      },
      [](int g, const FreeWord& u) {
        std::vector<std::optional<Letter>> slots(u.size());
        for (int i = 1; i <= std::max(g, u.max_gen()); ++i) {
          for (const auto& occ : letter_profile(u, i)) {
            std::size_t pos = occ.sign > 0 ? occ.prefix.size() : occ.prefix.size() - 1;
            if (pos >= slots.size() || slots[pos]) return false;
            slots[pos] = Letter(i, occ.sign);
          }
        }
        std::vector<Letter> rebuilt;
        for (const auto& s : slots) {
          if (!s) return false;
          rebuilt.push_back(*s);
        }
        return FreeWord::reduce(rebuilt) == u;
      }));
  rep.properties.push_back(check(
      "char_sign is multiplicative", opt,
      [](Sampler& rng) {
        int g = rng.uniform(1, 4);
        int mask = rng.uniform(0, (1 << g) - 1);
        return std::make_tuple(mask, rng.word(g, 20), rng.word(g, 20));
      },
      [](int mask, const FreeWord& u, const FreeWord& v) {
        std::vector<int> character;
        for (int i = 0; i < 4; ++i) character.push_back((mask >> i) & 1 ? -1 : 1);
        return char_sign(character, u * v) == char_sign(character, u) * char_sign(character, v);
      }));
  rep.properties.push_back(check(
      "endomorphisms compose", opt,
      [](Sampler& rng) {
        int g = rng.uniform(1, 4);
        return std::make_tuple(random_endo(rng, g, 3), random_endo(rng, g, 3), rng.word(g, 8));
      },
      [](const FreeEndo& phi, const FreeEndo& psi, const FreeWord& u) {
        return endo_apply(endo_compose(phi, psi), u) == endo_apply(phi, endo_apply(psi, u));
      }));
  return rep;
}

SuiteReport ring_suite(const VerifyOptions& opt) {
  SuiteReport rep;
  using MulFn = std::function<RingElem(const RingElem&, const RingElem&)>;
  MulFn mul = opt.inject_fault ? MulFn(mul_dropping_last) : MulFn([](const RingElem& a, const RingElem& b) { return ring_mul(a, b); });
  auto triple = [](Sampler& rng) {
    int g = rng.uniform(1, 3);
    return std::make_tuple(random_ring(rng, g, 6, 6), random_ring(rng, g, 6, 6), random_ring(rng, g, 6, 6));
  };
  rep.properties.push_back(check("addition is an abelian group", opt, triple,
                                 [](const RingElem& a, const RingElem& b, const RingElem& c) {
                                   return a + b == b + a && (a + b) + c == a + (b + c) && a + RingElem::zero() == a &&
                                          (a + (-a)).is_zero();
                                 }));
  rep.properties.push_back(check("multiplication is associative", opt, triple,
                                 [&](const RingElem& a, const RingElem& b, const RingElem& c) {
                                   return mul(mul(a, b), c) == mul(a, mul(b, c));
                                 }));
  rep.properties.push_back(check("multiplication distributes", opt, triple,
                                 [&](const RingElem& a, const RingElem& b, const RingElem& c) {
                                   return mul(a, b + c) == mul(a, b) + mul(a, c) && mul(a + b, c) == mul(a, c) + mul(b, c);
                                 }));
  rep.properties.push_back(check(
      "one is a two-sided unit", opt,
      [](Sampler& rng) { return std::make_tuple(random_ring(rng, rng.uniform(1, 3), 6, 6)); },
      [&](const RingElem& a) { return mul(RingElem::one(), a) == a && mul(a, RingElem::one()) == a; }));
  rep.properties.push_back(check(
      "translations compose", opt,
      [](Sampler& rng) {
        int g = rng.uniform(1, 3);
        return std::make_tuple(rng.word(g, 6), rng.word(g, 6), random_ring(rng, g, 6, 6));
      },
      [](const FreeWord& u, const FreeWord& v, const RingElem& a) {
        return translate(u, translate(v, a)) == translate(u * v, a);
      }));
  rep.properties.push_back(check(
      "endomorphisms are multiplicative", opt,
      [](Sampler& rng) {
        int g = rng.uniform(1, 3);
        return std::make_tuple(random_endo(rng, g, 3), random_ring(rng, g, 6, 6), random_ring(rng, g, 6, 6));
      },
      [&](const FreeEndo& phi, const RingElem& a, const RingElem& b) {
        return ring_endo_apply(phi, mul(a, b)) == mul(ring_endo_apply(phi, a), ring_endo_apply(phi, b));
      }));
  rep.properties.push_back(check("augmentation is a ring homomorphism", opt, triple,
                                 [&](const RingElem& a, const RingElem& b, const RingElem&) {
                                   return augment(a + b) == augment(a) + augment(b) &&
                                          augment(mul(a, b)) == augment(a) * augment(b) &&
                                          augment(RingElem::one()) == 1;
                                 }));
  return rep;
}

SuiteReport monoid_suite(const VerifyOptions& opt) {
  SuiteReport rep;
  ComposeFn fn = opt.inject_fault ? ComposeFn(compose_abs_coefficients) : library_compose();
  auto triple = [](Sampler& rng) {
    WedgeSignature sig = random_signature(rng, 2, 2);
    return std::make_tuple(random_self_map(rng, sig, 3, 3, 4), random_self_map(rng, sig, 3, 3, 4),
                           random_self_map(rng, sig, 3, 3, 4));
  };
  rep.properties.push_back(check("compose is associative", opt, triple,
                                 [&](const SelfMapClass& a, const SelfMapClass& b, const SelfMapClass& c) {
                                   return fn(a, fn(b, c)) == fn(fn(a, b), c);
                                 }));
  rep.properties.push_back(check(
      "identity is two-sided", opt,
      [](Sampler& rng) { return std::make_tuple(random_self_map(rng, random_signature(rng, 2, 2), 3, 3, 4)); },
      [&](const SelfMapClass& h) {
        const auto id = identity(h.signature());
        return fn(id, h) == h && fn(h, id) == h;
      }));
  rep.properties.push_back(check("circle parts compose as endomorphisms", opt, triple,
                                 [&](const SelfMapClass& a, const SelfMapClass& b, const SelfMapClass&) {
                                   return fn(a, b).circle_part() == endo_compose(a.circle_part(), b.circle_part());
                                 }));
  rep.properties.push_back(check("top homology is functorial", opt, triple,
                                 [&](const SelfMapClass& a, const SelfMapClass& b, const SelfMapClass&) {
                                   return top_homology_matrix(fn(a, b)) == top_homology_matrix(a) * top_homology_matrix(b);
                                 }));
  rep.properties.push_back(check(
      "conjugation preserves invertibility", opt,
      [](Sampler& rng) {
        int g = rng.uniform(1, 2);
        int k = rng.uniform(1, 2);
        return std::make_tuple(g, random_braid(rng, g, k, 3), random_braid(rng, g, k, 3));
      },
      [&](int g, const BraidElement& h, const BraidElement& x) {
        PuncturedSignature sig(ManifoldModel::standard(g), h.k());
        auto H = push_braid(sig, h);
        auto Hi = push_braid(sig, braid_inverse(h));
        auto X = push_braid(sig, x);
        auto Xi = push_braid(sig, braid_inverse(x));
        if (!inverse_pair(fn, H, Hi) || !inverse_pair(fn, X, Xi)) return false;
        return inverse_pair(fn, fn(H, fn(X, Hi)), fn(H, fn(Xi, Hi)));
      }));
  return rep;
}

SuiteReport embed_suite(const VerifyOptions& opt) {
  SuiteReport rep;
  ComposeFn fn = opt.inject_fault ? ComposeFn(compose_left_translation) : library_compose();
  auto pair = [](Sampler& rng) {
    WedgeSignature sig = random_signature(rng, 2, 2);
    return std::make_tuple(random_self_map(rng, sig, 3, 3, 4), random_self_map(rng, sig, 3, 3, 4));
  };
  rep.properties.push_back(check("embed is a homomorphism", opt, pair, [&](const SelfMapClass& a, const SelfMapClass& b) {
    return embed(fn(a, b)) == matrix_mul(embed(a), embed(b));
  }));
  rep.properties.push_back(check("embed is injective", opt, pair, [&](const SelfMapClass& a, const SelfMapClass& b) {
    return unembed(embed(a)) == a && ((embed(a) == embed(b)) == (a == b));
  }));

  struct Window {
    int max_radius = 0;
    std::size_t max_left_radius = 0;
    std::size_t max_columns = 0;
    std::size_t max_rows = 0;
  } window;
  rep.properties.push_back(check(
      "truncated product matches matrix_mul", opt,
      [](Sampler& rng) {
        WedgeSignature sig = random_signature(rng, 2, 1);
        return std::make_tuple(rng.uniform(0, 2), random_self_map(rng, sig, 2, 2, 2), random_self_map(rng, sig, 2, 2, 2));
      },
      [&](int radius, const SelfMapClass& a, const SelfMapClass& b) {
        const auto A = embed(a);
        const auto B = embed(b);
        const TruncatedMatrix right = materialize(B, radius);
        // The left factor must cover every row the right factor reaches.
        const std::size_t left_radius = right.row_reach();
        if (left_radius > row_bound(B, radius)) return false;
        const TruncatedMatrix left = materialize(A, static_cast<int>(left_radius));
        const TruncatedMatrix product = truncated_product(left, right);
        window.max_radius = std::max(window.max_radius, radius);
        window.max_left_radius = std::max(window.max_left_radius, left_radius);
        window.max_columns = std::max(window.max_columns, left.columns().size());
        window.max_rows = std::max(window.max_rows, product.row_keys().size());
        return product.radius() == radius && product == materialize(matrix_mul(A, B), radius);
      }));
  rep.properties.back().log.push_back(
      "truncated-matmul window: right radius <= " + std::to_string(window.max_radius) + ", left radius <= " +
      std::to_string(window.max_left_radius) + ", left columns <= " + std::to_string(window.max_columns) +
      ", product rows <= " + std::to_string(window.max_rows));
  rep.properties.push_back(check(
      "materialized blocks are diagonally constant", opt,
      [](Sampler& rng) {
        return std::make_tuple(rng.uniform(0, 2), random_self_map(rng, random_signature(rng, 2, 1), 2, 3, 3));
      },
      [](int radius, const SelfMapClass& a) {
        const auto A = embed(a);
        return is_diagonally_constant(materialize(A, radius), A.slope());
      }));
  rep.properties.push_back(check(
      "materialized columns are finite and bounded", opt,
      [](Sampler& rng) {
        return std::make_tuple(rng.uniform(0, 2), random_self_map(rng, random_signature(rng, 2, 1), 2, 3, 3));
      },
      [](int radius, const SelfMapClass& a) {
        const auto A = embed(a);
        const TruncatedMatrix t = materialize(A, radius);
        for (const auto& [key, column] : t.columns()) {
          std::size_t bound = 0;
          for (const auto& row : A.signature().labels()) bound += A.block(row, key.label).size();
          std::size_t nonzero = std::count_if(column.begin(), column.end(), [](const auto& e) { return e.second != 0; });
          if (nonzero > bound) return false;
        }
        return true;
      }));
  return rep;
}

SuiteReport push_suite(const VerifyOptions& opt) {
  SuiteReport rep;
  ComposeFn fn = opt.inject_fault ? ComposeFn(compose_left_translation) : library_compose();
  auto braid_pair = [](std::size_t len) {
    return [len](Sampler& rng) {
      int g = rng.uniform(1, 3);
      int k = rng.uniform(1, 3);
      return std::make_tuple(g, random_braid(rng, g, k, len), random_braid(rng, g, k, len));
    };
  };
  auto slot_word = [](std::size_t len) {
    return [len](Sampler& rng) {
      int g = rng.uniform(1, 3);
      int k = rng.uniform(1, 2);
      return std::make_tuple(g, k, rng.uniform(1, k), rng.word(g, len));
    };
  };
  rep.properties.push_back(check("push_braid is a homomorphism", opt, braid_pair(4),
                                 [&](int g, const BraidElement& a, const BraidElement& b) {
                                   PuncturedSignature sig(ManifoldModel::standard(g), a.k());
                                   return push_braid_with(fn, sig, braid_mul(a, b)) ==
                                          fn(push_braid_with(fn, sig, a), push_braid_with(fn, sig, b));
                                 }));
  rep.properties.push_back(check("closed form equals composed form", opt, slot_word(12),
                                 [&](int g, int k, int slot, const FreeWord& w) {
                                   PuncturedSignature sig(ManifoldModel::standard(g), k);
                                   return push_word_closed(sig, w, slot) == push_word_with(fn, sig, w, slot);
                                 }));
  rep.properties.push_back(check(
      "fox derivative cocycle", opt,
      [](Sampler& rng) {
        int g = rng.uniform(1, 3);
        return std::make_tuple(rng.uniform(1, g), rng.word(g, 12), rng.word(g, 12));
      },
      [](int i, const FreeWord& u, const FreeWord& v) {
        return fox_derivative(u * v, i) == fox_derivative(u, i) + translate(u, fox_derivative(v, i));
      }));
  rep.properties.push_back(check("word pushes invert", opt, slot_word(12), [&](int g, int k, int slot, const FreeWord& w) {
    PuncturedSignature sig(ManifoldModel::standard(g), k);
    return inverse_pair(fn, push_word_with(fn, sig, w, slot), push_word_with(fn, sig, invert(w), slot));
  }));
  rep.properties.push_back(check("recover_braid round trip", opt, braid_pair(8),
                                 [&](int g, const BraidElement& a, const BraidElement&) {
                                   PuncturedSignature sig(ManifoldModel::standard(g), a.k());
                                   auto got = recover_braid(sig, push_braid_with(fn, sig, a));
                                   return std::holds_alternative<BraidElement>(got) && std::get<BraidElement>(got) == a;
                                 }));
  rep.properties.push_back(check("embedding of a push is the letterwise product", opt, slot_word(8),
                                 [&](int g, int k, int slot, const FreeWord& w) {
                                   PuncturedSignature sig(ManifoldModel::standard(g), k);
                                   ShiftedBlockMatrix product = embed(identity(sig.wedge()));
                                   for (Letter l : w.letters()) product = matrix_mul(product, embed(push_letter(sig, l, slot)));
                                   return embed(push_word_with(fn, sig, w, slot)) == product;
                                 }));
  rep.properties.push_back(check(
      "permutation pushes compose", opt,
      [](Sampler& rng) {
        int g = rng.uniform(1, 3);
        int k = rng.uniform(1, 4);
        return std::make_tuple(g, rng.permutation(k), rng.permutation(k));
      },
      [&](int g, const Permutation& s, const Permutation& r) {
        PuncturedSignature sig(ManifoldModel::standard(g), s.size());
        return push_sym(sig, s * r) == fn(push_sym(sig, s), push_sym(sig, r));
      }));
  return rep;
}

SuiteReport orbits_suite(const VerifyOptions& opt) {
  SuiteReport rep;
  using ActFn = std::function<MapState(const ManifoldModel&, const TargetModel&, const BraidElement&, const MapState&)>;
  ActFn act_fn = opt.inject_fault
                     ? ActFn(act_sigma_indexed)
                     : ActFn([](const ManifoldModel& m, const TargetModel& t, const BraidElement& b, const MapState& s) {
                         return act(m, t, b, s);
                       });
  auto action_case = [](Sampler& rng) {
    ManifoldModel model = random_orbit_model(rng, 2, true);
    TargetModel target = random_target(rng, 6, model.g(), 3, !model.is_orientable() || rng.coin());
    int k = target.charge().empty() ? 0 : rng.uniform(0, 3);
    MapState s{rng.uniform(0, static_cast<int>(target.f_classes().size()) - 1), {}};
    for (int i = 0; i < k; ++i) {
      s.g_classes.push_back(target.charge()[static_cast<std::size_t>(
          rng.uniform(0, static_cast<int>(target.charge().size()) - 1))]);
    }
    return std::make_tuple(model, target, random_braid(rng, model.g(), k, 3), random_braid(rng, model.g(), k, 3), s);
  };
  rep.properties.push_back(check("act is a left action", opt, action_case,
                                 [&](const ManifoldModel& m, const TargetModel& t, const BraidElement& a,
                                     const BraidElement& b, const MapState& s) {
                                   return act_fn(m, t, braid_mul(a, b), s) == act_fn(m, t, a, act_fn(m, t, b, s));
                                 }));
  rep.properties.push_back(check("act preserves the charge", opt, action_case,
                                 [&](const ManifoldModel& m, const TargetModel& t, const BraidElement& a,
                                     const BraidElement&, const MapState& s) {
                                   MapState out = act_fn(m, t, a, s);
                                   return out.f == s.f && std::all_of(out.g_classes.begin(), out.g_classes.end(),
                                                                      [&](int c) { return t.in_charge(c); });
                                 }));
  rep.properties.push_back(check(
      "component formula matches brute force", opt,
      [](Sampler& rng) {
        ManifoldModel model = random_orbit_model(rng, 2, false);
        TargetModel target = random_target(rng, 6, model.g(), 3, false);
        return std::make_tuple(model, target, rng.uniform(0, 3));
      },
      [](const ManifoldModel& m, const TargetModel& t, int k) {
        return components_formula(m, t, k) == components_bruteforce(m, t, k);
      }));
  return rep;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"group", "ring", "monoid", "embed", "push", "orbits"};
  return names;
}

std::vector<SuiteReport> run_verify(const std::string& suite, const VerifyOptions& options) {
  if (options.cases < 0) throw InvalidInput("--cases must be >= 0");
  static const std::map<std::string, SuiteReport (*)(const VerifyOptions&)> table{
      {"group", group_suite}, {"ring", ring_suite},  {"monoid", monoid_suite},
      {"embed", embed_suite}, {"push", push_suite}, {"orbits", orbits_suite}};
  std::vector<std::string> which;
  if (suite == "all") {
    which = suite_names();
  } else if (table.count(suite)) {
    which.push_back(suite);
  } else {
    throw InvalidInput("unknown suite \"" + suite + "\"");
  }
  std::vector<SuiteReport> out;
  for (const auto& name : which) {
    SuiteReport rep = table.at(name)(options);
    rep.suite = name;
    rep.seed = options.seed;
    rep.cases = options.cases;
    rep.fault_injected = options.inject_fault;
    out.push_back(std::move(rep));
  }
  return out;
}

Json suite_report_to_json(const SuiteReport& report) {
  Json out = Json::object();
  out["suite"] = report.suite;
  out["seed"] = report.seed;
  out["cases"] = report.cases;
  out["fault_injected"] = report.fault_injected;
  out["passed"] = report.passed();
  Json props = Json::array();
  for (const auto& p : report.properties) {
    Json j = Json::object();
    j["name"] = p.name;
    j["cases_run"] = p.cases_run;
    j["passed"] = p.passed;
    if (!p.passed) {
      j["counterexample"] = p.counterexample;
      j["shrink_steps"] = p.shrink_steps;
    }
    if (!p.log.empty()) j["log"] = p.log;
    props.push_back(std::move(j));
  }
  out["properties"] = std::move(props);
  return out;
}

std::string format_suite_report(const SuiteReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << " (seed " << report.seed << ", " << report.cases << " cases"
     << (report.fault_injected ? ", fault injected" : "") << "): " << (report.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& p : report.properties) {
    os << "  " << (p.passed ? "PASS" : "FAIL") << "  " << p.name << " (" << p.cases_run << " cases)\n";
    for (const auto& line : p.log) os << "        " << line << '\n';
    if (!p.passed) {
      os << "        counterexample after " << p.shrink_steps << " shrink steps: " << p.counterexample << '\n';
    }
  }
  return os.str();
}

}  // namespace pushcalc
