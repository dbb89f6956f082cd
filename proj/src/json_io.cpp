#include "pushcalc/json_io.hpp"

#include <limits>

#include "pushcalc/error.hpp"

namespace pushcalc {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing JSON field \"") + key + "\"");
  return j.at(key);
}

std::string id_string(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InvalidInput("class ids must be strings or integers");
}

}  // namespace

Json bigint_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return Json(x.convert_to<long long>());
  }
  return Json(x.str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      return BigInt(s);
    } catch (const std::exception&) {
      throw InvalidInput("bad integer string \"" + s + "\"");
    }
  }
  throw InvalidInput("expected an integer coefficient");
}

Json ring_to_json(const RingElem& a) {
  Json out = Json::array();
  for (const auto& [w, c] : a.terms()) out.push_back(Json::array({bigint_to_json(c), format_word(w)}));
  return out;
}

RingElem ring_from_json(const Json& j, int rank) {
  if (!j.is_array()) throw InvalidInput("ring element must be an array of [coefficient, word] pairs");
  RingElem out;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[1].is_string()) {
      throw InvalidInput("ring term must be [coefficient, word-string]");
    }
    out.add_term(parse_word(term[1].get<std::string>(), rank), bigint_from_json(term[0]));
  }
  return out;
}

Json module_to_json(const ModuleVec& v) {
  Json out = Json::object();
  for (const auto& [label, ring] : v.entries()) out[format_label(label)] = ring_to_json(ring);
  return out;
}

ModuleVec module_from_json(const Json& j, int rank) {
  if (!j.is_object()) throw InvalidInput("module vector must be an object keyed by sphere label");
  ModuleVec out;
  for (const auto& [key, value] : j.items()) out.add(parse_label(key), ring_from_json(value, rank));
  return out;
}

Json self_map_to_json(const SelfMapClass& h) {
  Json out = Json::object();
  out["g"] = h.signature().g();
  out["d"] = h.signature().d();
  Json labels = Json::array();
  for (const auto& l : h.signature().labels()) labels.push_back(format_label(l));
  out["labels"] = labels;
  Json circles = Json::array();
  for (const auto& w : h.circle_part().images()) circles.push_back(format_word(w));
  out["circles"] = circles;
  Json spheres = Json::object();
  for (const auto& [label, vec] : h.sphere_part()) spheres[format_label(label)] = module_to_json(vec);
  out["spheres"] = spheres;
  return out;
}

SelfMapClass self_map_from_json(const Json& j) {
  const int g = require(j, "g").get<int>();
  const int d = j.contains("d") ? j.at("d").get<int>() : 3;
  std::vector<SphereLabel> labels;
  for (const auto& l : require(j, "labels")) labels.push_back(parse_label(l.get<std::string>()));
  std::vector<FreeWord> circles;
  for (const auto& w : require(j, "circles")) circles.push_back(parse_word(w.get<std::string>(), g));
  std::map<SphereLabel, ModuleVec> spheres;
  for (const auto& [key, value] : require(j, "spheres").items()) spheres.emplace(parse_label(key), module_from_json(value, g));
  return SelfMapClass(WedgeSignature(g, std::move(labels), d), FreeEndo(std::move(circles)), std::move(spheres));
}

Json block_matrix_to_json(const ShiftedBlockMatrix& a) {
  Json out = Json::object();
  Json slope = Json::array();
  for (const auto& w : a.slope().images()) slope.push_back(format_word(w));
  out["slope"] = slope;
  Json blocks = Json::array();
  for (const auto& [key, ring] : a.blocks()) {
    blocks.push_back({{"row", format_label(key.first)}, {"col", format_label(key.second)}, {"column", ring_to_json(ring)}});
  }
  out["blocks"] = blocks;
  return out;
}

Json target_to_json(const TargetModel& t) {
  Json out = Json::object();
  out["pi1_gens"] = t.pi1_gens();
  out["classes"] = t.class_ids();
  Json action = Json::object();
  auto as_ids = [&](const Permutation& p) {
    Json arr = Json::array();
    for (int x : p.images()) arr.push_back(t.class_ids()[static_cast<std::size_t>(x)]);
    return arr;
  };
  for (int i = 0; i < t.pi1_gens(); ++i) action["a" + std::to_string(i + 1)] = as_ids(t.action()[static_cast<std::size_t>(i)]);
  out["action"] = action;
  out["reflection"] = as_ids(t.reflection());
  Json charge = Json::array();
  for (int c : t.charge()) charge.push_back(t.class_ids()[static_cast<std::size_t>(c)]);
  out["charge"] = charge;
  Json fs = Json::array();
  for (const auto& f : t.f_classes()) {
    Json words = Json::array();
    for (const auto& w : f) words.push_back(format_word(w));
    fs.push_back(words);
  }
  out["f_classes"] = fs;
  return out;
}

TargetModel target_from_json(const Json& j) {
  const int h = require(j, "pi1_gens").get<int>();
  if (h < 0) throw InvalidInput("pi1_gens must be >= 0");
  std::vector<std::string> ids;
  for (const auto& c : require(j, "classes")) ids.push_back(id_string(c));
  auto index_of = [&](const Json& id) {
    auto s = id_string(id);
    auto it = std::find(ids.begin(), ids.end(), s);
    if (it == ids.end()) throw InvalidInput("unknown class id " + s);
    return static_cast<int>(it - ids.begin());
  };
  auto perm_from = [&](const Json& arr, const std::string& what) {
    if (!arr.is_array() || arr.size() != ids.size()) {
      throw InvalidInput(what + " must list one image per class");
    }
    std::vector<int> images;
    for (const auto& x : arr) images.push_back(index_of(x));
    try {
      return Permutation(std::move(images));
    } catch (const InvalidInput&) {
      throw InvalidInput(what + " is not a bijection");
    }
  };
  std::vector<Permutation> action;
  const Json empty = Json::object();
  const Json& action_json = j.contains("action") ? j.at("action") : empty;
  for (int i = 1; i <= h; ++i) {
    std::string key = "a" + std::to_string(i);
    action.push_back(action_json.contains(key) ? perm_from(action_json.at(key), "action of " + key)
                                               : Permutation::identity(static_cast<int>(ids.size())));
  }
  for (const auto& [key, value] : action_json.items()) {
    FreeWord w = parse_word(key);
    if (w.size() != 1 || w[0].sign() < 0 || w[0].gen() > h) throw InvalidInput("action key " + key + " is not a generator a1..a" + std::to_string(h));
  }
  Permutation reflection = j.contains("reflection") ? perm_from(j.at("reflection"), "reflection")
                                                    : Permutation::identity(static_cast<int>(ids.size()));
  std::vector<int> charge;
  if (j.contains("charge")) {
    for (const auto& c : j.at("charge")) charge.push_back(index_of(c));
  } else {
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) charge.push_back(i);
  }
  std::vector<std::vector<FreeWord>> fs;
  for (const auto& f : require(j, "f_classes")) {
    std::vector<FreeWord> words;
    for (const auto& w : f) words.push_back(parse_word(w.get<std::string>(), h));
    fs.push_back(std::move(words));
  }
  return TargetModel(std::move(ids), std::move(action), std::move(reflection), std::move(charge), std::move(fs));
}

Json kernel_report_to_json(const KernelReport& r) {
  Json out = Json::object();
  out["checked"] = r.checked;
  out["exhaustive"] = r.exhaustive;
  out["identity_in_kernel"] = r.identity_in_kernel;
  Json kernel = Json::array();
  for (const auto& b : r.nontrivial_kernel) kernel.push_back(format_braid(b));
  out["nontrivial_kernel"] = kernel;
  out["passed"] = r.kernel_trivial();
  return out;
}

}  // namespace pushcalc
