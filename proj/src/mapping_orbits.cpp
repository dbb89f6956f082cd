#include "pushcalc/mapping_orbits.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "pushcalc/error.hpp"

namespace pushcalc {

TargetModel::TargetModel(std::vector<std::string> class_ids, std::vector<Permutation> action, Permutation reflection,
                         std::vector<int> charge, std::vector<std::vector<FreeWord>> f_classes)
    : class_ids_(std::move(class_ids)),
      action_(std::move(action)),
      reflection_(std::move(reflection)),
      charge_(std::move(charge)),
      f_classes_(std::move(f_classes)) {
  const int n = class_count();
  for (std::size_t i = 0; i < class_ids_.size(); ++i) {
    if (std::find(class_ids_.begin() + static_cast<std::ptrdiff_t>(i) + 1, class_ids_.end(), class_ids_[i]) !=
        class_ids_.end()) {
      throw InvalidInput("duplicate class id " + class_ids_[i]);
    }
  }
  for (const auto& p : action_) {
    if (p.size() != n) throw InvalidInput("action permutation has the wrong degree");
  }
  if (reflection_.size() != n) throw InvalidInput("reflection has the wrong degree");
  if (!(reflection_ * reflection_).is_identity()) throw InvalidInput("reflection must be an involution");
  for (const auto& p : action_) {
    if (!(p * reflection_ == reflection_ * p)) {
      throw InvalidInput("reflection must commute with the pi1 action");
    }
  }
  std::sort(charge_.begin(), charge_.end());
  charge_.erase(std::unique(charge_.begin(), charge_.end()), charge_.end());
  for (int c : charge_) {
    if (c < 0 || c >= n) throw InvalidInput("charge refers to an unknown class");
  }
  for (const auto& p : action_) {
    for (int c : charge_) {
      if (!in_charge(p(c))) throw InvalidInput("charge is not a union of pi1 orbits");
    }
  }
  for (const auto& f : f_classes_) {
    for (const auto& w : f) {
      if (w.max_gen() > pi1_gens()) throw InvalidInput("f-class word " + format_word(w) + " uses unknown generator");
    }
  }
}

bool TargetModel::in_charge(int cls) const { return std::binary_search(charge_.begin(), charge_.end(), cls); }

Permutation TargetModel::act_word(const FreeWord& w) const {
  Permutation out = Permutation::identity(class_count());
  for (Letter l : w.letters()) {
    const Permutation& p = action_.at(static_cast<std::size_t>(l.gen() - 1));
    out = out * (l.sign() > 0 ? p : p.inverse());
  }
  return out;
}

std::vector<Permutation> TargetModel::induced(int f_index, int g) const {
  const auto& f = f_classes_.at(static_cast<std::size_t>(f_index));
  if (static_cast<int>(f.size()) != g) {
    throw SizeMismatch("f-class lists " + std::to_string(f.size()) + " images but the manifold has g = " +
                       std::to_string(g));
  }
  std::vector<Permutation> out;
  for (const auto& w : f) out.push_back(act_word(w));
  return out;
}

int TargetModel::index_of(const std::string& id) const {
  auto it = std::find(class_ids_.begin(), class_ids_.end(), id);
  if (it == class_ids_.end()) throw InvalidInput("unknown class id " + id);
  return static_cast<int>(it - class_ids_.begin());
}

namespace {

void check_hypothesis(const ManifoldModel& model, HypothesisMode mode) {
  if (mode == HypothesisMode::FormulaOnly || model.satisfies_component_hypothesis()) return;
  throw HypothesisViolation(
      "the action formula needs M simply connected or of handle dimension <= d-2; declare the latter "
      "(--low-handle-dim) or opt into --formula-only");
}

Permutation induced_word(const ManifoldModel& model, const TargetModel& target, const std::vector<Permutation>& gens,
                         const FreeWord& u) {
  Permutation out = Permutation::identity(target.class_count());
  for (Letter l : u.letters()) {
    const Permutation& p = gens.at(static_cast<std::size_t>(l.gen() - 1));
    out = out * (l.sign() > 0 ? p : p.inverse());
  }
  if (char_sign(model.character(), u) < 0) out = target.reflection() * out;
  return out;
}

void check_state(const TargetModel& target, const MapState& s) {
  if (s.f < 0 || s.f >= static_cast<int>(target.f_classes().size())) throw InvalidInput("state f-class out of range");
  for (int c : s.g_classes) {
    if (!target.in_charge(c)) throw InvalidInput("state class outside the charge");
  }
}

}  // namespace

MapState act(const ManifoldModel& model, const TargetModel& target, const BraidElement& gamma, const MapState& s,
             HypothesisMode mode) {
  check_hypothesis(model, mode);
  check_state(target, s);
  if (gamma.k() != static_cast<int>(s.g_classes.size())) throw SizeMismatch("braid and state differ in k");
  const auto gens = target.induced(s.f, model.g());
  const Permutation sigma_inv = gamma.perm.inverse();
  MapState out{s.f, std::vector<int>(s.g_classes.size())};
  for (int i = 0; i < gamma.k(); ++i) {
    Permutation F = induced_word(model, target, gens, gamma.words[static_cast<std::size_t>(i)]);
    out.g_classes[static_cast<std::size_t>(i)] = F(s.g_classes[static_cast<std::size_t>(sigma_inv(i))]);
  }
  return out;
}

std::vector<std::vector<int>> charge_orbits(const TargetModel& target, int f_index, int g) {
  const auto gens = target.induced(f_index, g);
  std::vector<int> parent(static_cast<std::size_t>(target.class_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& p : gens) {
    for (int c : target.charge()) parent[static_cast<std::size_t>(find(c))] = find(p(c));
  }
  std::map<int, std::vector<int>> groups;
  for (int c : target.charge()) groups[find(c)].push_back(c);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

BigInt binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;
  }
  return out;
}

BigInt components_formula(const ManifoldModel& model, const TargetModel& target, int k, HypothesisMode mode) {
  check_hypothesis(model, mode);
  if (!model.is_orientable()) throw HypothesisViolation("the component count formula needs an orientable model");
  if (k < 0) throw InvalidInput("k must be >= 0");
  BigInt total = 0;
  for (int f = 0; f < static_cast<int>(target.f_classes().size()); ++f) {
    std::uint64_t orbits = charge_orbits(target, f, model.g()).size();
    if (orbits + static_cast<std::uint64_t>(k) == 0) {
      total += 1;  // SP^0 of the empty set is a point
    } else {
      total += binomial(orbits + static_cast<std::uint64_t>(k) - 1, static_cast<std::uint64_t>(k));
    }
  }
  return total;
}

std::uint64_t default_max_states() {
  if (const char* env = std::getenv("PUSHCALC_MAX_STATES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 1'000'000;
}

BigInt components_bruteforce(const ManifoldModel& model, const TargetModel& target, int k, std::uint64_t max_states,
                             HypothesisMode mode) {
  check_hypothesis(model, mode);
  if (k < 0) throw InvalidInput("k must be >= 0");
  const auto& charge = target.charge();
  const std::uint64_t fs = target.f_classes().size();
  // State count |F|·|c̃|^k, saturating past the guard.
  std::uint64_t per_f = 1;
  for (int i = 0; i < k && per_f <= max_states; ++i) per_f *= charge.size();
  if (per_f > max_states || (fs != 0 && per_f * fs > max_states)) {
    throw TooLarge("brute force needs " + std::to_string(fs) + " x " + std::to_string(charge.size()) + "^" +
                   std::to_string(k) + " states, above the guard " + std::to_string(max_states) +
                   "; raise PUSHCALC_MAX_STATES or use the formula");
  }

  // Encode g_classes as a base-|c̃| number over charge positions.
  const std::uint64_t base = charge.size();
  auto encode = [&](const std::vector<int>& classes) {
    std::uint64_t code = 0;
    for (int i = k - 1; i >= 0; --i) {
      auto pos = std::lower_bound(charge.begin(), charge.end(), classes[static_cast<std::size_t>(i)]) - charge.begin();
      code = code * base + static_cast<std::uint64_t>(pos);
    }
    return code;
  };
  auto decode = [&](std::uint64_t code) {
    std::vector<int> classes(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      classes[static_cast<std::size_t>(i)] = charge[static_cast<std::size_t>(code % base)];
      code /= base;
    }
    return classes;
  };

  std::vector<BraidElement> generators;
  for (int slot = 1; slot <= k; ++slot) {
    for (int j = 1; j <= model.g(); ++j) generators.push_back(BraidElement::loop(k, slot, FreeWord::generator(j)));
  }
  for (int i = 0; i + 1 < k; ++i) {
    generators.emplace_back(std::vector<FreeWord>(static_cast<std::size_t>(k)), Permutation::transposition(k, i, i + 1));
  }

  BigInt components = 0;
  for (int f = 0; f < static_cast<int>(fs); ++f) {
    std::vector<std::uint64_t> parent(per_f);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::uint64_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::uint64_t code = 0; code < per_f; ++code) {
      MapState s{f, decode(code)};
      for (const auto& gen : generators) {
        MapState t = act(model, target, gen, s, HypothesisMode::FormulaOnly);
        parent[find(code)] = find(encode(t.g_classes));
      }
    }
    for (std::uint64_t code = 0; code < per_f; ++code) {
      if (find(code) == code) components += 1;
    }
  }
  return components;
}

}  // namespace pushcalc
