// pushcalc: command-line front end for the point-pushing calculus.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "pushcalc/error.hpp"
#include "pushcalc/json_io.hpp"
#include "pushcalc/mapping_orbits.hpp"
#include "pushcalc/matrix_embedding.hpp"
#include "pushcalc/point_push.hpp"
#include "pushcalc/verify.hpp"

using namespace pushcalc;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void print_class(const SelfMapClass& h, bool matrix, bool homology) {
  std::cout << format_tuple(h) << '\n';
  if (matrix) std::cout << format_block_matrix(embed(h));
  if (homology) std::cout << "H_" << h.signature().d() - 1 << ": " << format_matrix(top_homology_matrix(h)) << '\n';
}

void add_json_extras(Json& out, const SelfMapClass& h, bool matrix, bool homology) {
  out["class"] = self_map_to_json(h);
  out["tuple"] = format_tuple(h);
  if (matrix) out["block_matrix"] = block_matrix_to_json(embed(h));
  if (homology) {
    const IntMatrix m = top_homology_matrix(h);
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(bigint_to_json(m(r, c)));
      rows.push_back(row);
    }
    out["homology"] = rows;
  }
}

struct ManifoldFlags {
  int g = 1;
  int d = 3;
  int k = 1;
};

void add_manifold_flags(CLI::App* cmd, ManifoldFlags& f) {
  cmd->add_option("-g,--genus", f.g, "rank of pi1(M) = F_g")->check(CLI::NonNegativeNumber)->capture_default_str();
  cmd->add_option("-d,--dim", f.d, "manifold dimension d >= 3")->check(CLI::Range(3, 1000))->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point-pushing calculus on punctured manifolds M with pi1(M) free"};
  app.require_subcommand(1);

  bool json = false;
  bool matrix = false;
  bool homology = false;

  // push-word
  ManifoldFlags pw;
  int pw_slot = 1;
  std::string pw_word;
  bool pw_closed = false;
  auto* push_word_cmd = app.add_subcommand("push-word", "push of a loop word in one puncture slot");
  add_manifold_flags(push_word_cmd, pw);
  push_word_cmd->add_option("-k,--punctures", pw.k, "number of punctures")->check(CLI::NonNegativeNumber)->capture_default_str();
  push_word_cmd->add_option("--slot", pw_slot, "puncture slot (1-based)")->capture_default_str();
  push_word_cmd->add_option("word", pw_word, "word, e.g. \"a1 a2 A1\"")->required();
  push_word_cmd->add_flag("--closed-form", pw_closed, "use the closed form and cross-check it against composition");
  push_word_cmd->add_flag("--json", json, "JSON output");
  push_word_cmd->add_flag("--matrix", matrix, "also print the block-matrix form");
  push_word_cmd->add_flag("--homology", homology, "also print the action on top homology");

  // push-braid
  ManifoldFlags pb;
  std::optional<int> pb_k;
  std::string pb_braid;
  auto* push_braid_cmd = app.add_subcommand("push-braid", "push of a braid element [w1 | ... | wk ; perm]");
  add_manifold_flags(push_braid_cmd, pb);
  push_braid_cmd->add_option("-k,--punctures", pb_k, "number of punctures (default: from the braid)");
  push_braid_cmd->add_option("braid", pb_braid, "braid, e.g. \"[a1 A2 | e ; (1 2)]\"")->required();
  push_braid_cmd->add_flag("--json", json, "JSON output");
  push_braid_cmd->add_flag("--matrix", matrix, "also print the block-matrix form");
  push_braid_cmd->add_flag("--homology", homology, "also print the action on top homology");

  // compose
  std::string outer_path, inner_path;
  auto* compose_cmd = app.add_subcommand("compose", "outer o inner for two self-map JSON files");
  compose_cmd->add_option("outer", outer_path, "self-map JSON applied second")->required();
  compose_cmd->add_option("inner", inner_path, "self-map JSON applied first")->required();
  compose_cmd->add_flag("--json", json, "JSON output");
  compose_cmd->add_flag("--matrix", matrix, "also print the block-matrix form");
  compose_cmd->add_flag("--homology", homology, "also print the action on top homology");

  // embed
  std::string embed_path;
  std::optional<int> embed_radius;
  auto* embed_cmd = app.add_subcommand("embed", "block-matrix form of a self-map JSON file");
  embed_cmd->add_option("file", embed_path, "self-map JSON")->required();
  embed_cmd->add_option("--radius", embed_radius, "materialize columns u.b with |u| <= radius as TSV")
      ->check(CLI::NonNegativeNumber);
  embed_cmd->add_flag("--json", json, "JSON output");

  // recover
  std::string recover_path;
  auto* recover_cmd = app.add_subcommand("recover", "braid pushing to a self-map JSON file (exit 3 if none)");
  recover_cmd->add_option("file", recover_path, "self-map JSON on the punctured wedge t1..tg, p1..pk")->required();
  recover_cmd->add_flag("--json", json, "JSON output");

  // kernel
  ManifoldFlags kf;
  std::size_t max_len = 4;
  std::size_t max_braids = 100000;
  std::uint64_t kernel_seed = kDefaultSeed;
  auto* kernel_cmd = app.add_subcommand("kernel", "search for braids pushing to the identity");
  add_manifold_flags(kernel_cmd, kf);
  kernel_cmd->add_option("-k,--punctures", kf.k, "number of punctures")->check(CLI::NonNegativeNumber)->capture_default_str();
  kernel_cmd->add_option("--max-len", max_len, "longest slot word")->capture_default_str();
  kernel_cmd->add_option("--max-braids", max_braids, "exhaustive up to this many braids, sampled beyond")
      ->capture_default_str();
  kernel_cmd->add_option("--seed", kernel_seed, "sampling seed")->capture_default_str();
  kernel_cmd->add_flag("--json", json, "JSON output");

  // components
  std::string target_path;
  std::optional<int> comp_g;
  int comp_d = 3;
  int comp_k = 1;
  bool brute_force = false;
  bool low_handle_dim = false;
  bool formula_only = false;
  auto* components_cmd = app.add_subcommand("components", "count path components of configuration mapping spaces");
  components_cmd->add_option("--target", target_path, "target model JSON")->required();
  components_cmd->add_option("-g,--genus", comp_g, "rank of pi1(M) (default: from the f-classes)");
  components_cmd->add_option("-d,--dim", comp_d, "manifold dimension d >= 3")->check(CLI::Range(3, 1000))->capture_default_str();
  components_cmd->add_option("-k,--punctures", comp_k, "number of points")->check(CLI::NonNegativeNumber)->capture_default_str();
  components_cmd->add_flag("--brute-force", brute_force, "also count by orbit enumeration");
  components_cmd->add_flag("--low-handle-dim", low_handle_dim, "declare that M has handles of index <= d-2 only");
  components_cmd->add_flag("--formula-only", formula_only, "apply the formula without the handle hypothesis");
  components_cmd->add_flag("--json", json, "JSON output");

  // verify
  std::string suite = "all";
  VerifyOptions vopt;
  vopt.seed = kDefaultSeed;
  auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify_cmd->add_option("--suite", suite, "suite to run")->check(CLI::IsMember(suites))->capture_default_str();
  verify_cmd->add_option("--seed", vopt.seed, "seed")->capture_default_str();
  verify_cmd->add_option("--cases", vopt.cases, "cases per property")->check(CLI::NonNegativeNumber)->capture_default_str();
  verify_cmd->add_flag("--inject-fault", vopt.inject_fault, "swap in broken operations (negative control)");
  verify_cmd->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: UsageError: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*push_word_cmd) {
      PuncturedSignature sig(ManifoldModel::standard(pw.g, pw.d), pw.k);
      const FreeWord w = parse_word(pw_word, pw.g);
      const SelfMapClass composed = push_word(sig, w, pw_slot);
      std::optional<bool> agrees;
      SelfMapClass shown = composed;
      if (pw_closed) {
        shown = push_word_closed(sig, w, pw_slot);
        agrees = shown == composed;
      }
      if (json) {
        Json out = {{"command", "push-word"}, {"g", pw.g}, {"d", pw.d}, {"k", pw.k}, {"slot", pw_slot},
                    {"word", format_word(w)}};
        add_json_extras(out, shown, matrix, homology);
        if (agrees) out["closed_form_agrees"] = *agrees;
        std::cout << out.dump(2) << '\n';
      } else {
        print_class(shown, matrix, homology);
        if (agrees) std::cout << "closed-form agrees: " << (*agrees ? "yes" : "no") << '\n';
      }
      return agrees.value_or(true) ? 0 : 1;
    }

    if (*push_braid_cmd) {
      const BraidElement b = parse_braid(pb_braid, pb.g);
      if (pb_k && *pb_k != b.k()) {
        throw SizeMismatch("braid has " + std::to_string(b.k()) + " slots but -k is " + std::to_string(*pb_k));
      }
      PuncturedSignature sig(ManifoldModel::standard(pb.g, pb.d), b.k());
      const SelfMapClass h = push_braid(sig, b);
      if (json) {
        Json out = {{"command", "push-braid"}, {"g", pb.g}, {"d", pb.d}, {"k", b.k()}, {"braid", format_braid(b)}};
        add_json_extras(out, h, matrix, homology);
        std::cout << out.dump(2) << '\n';
      } else {
        print_class(h, matrix, homology);
      }
      return 0;
    }

    if (*compose_cmd) {
      const SelfMapClass h = compose(self_map_from_json(read_json_file(outer_path)),
                                     self_map_from_json(read_json_file(inner_path)));
      if (json) {
        Json out = {{"command", "compose"}};
        add_json_extras(out, h, matrix, homology);
        std::cout << out.dump(2) << '\n';
      } else {
        print_class(h, matrix, homology);
      }
      return 0;
    }

    if (*embed_cmd) {
      const ShiftedBlockMatrix a = embed(self_map_from_json(read_json_file(embed_path)));
      if (embed_radius) {
        const TruncatedMatrix t = materialize(a, *embed_radius);
        if (json) {
          Json out = {{"command", "embed"}, {"radius", t.radius()}, {"tsv", t.to_tsv()}};
          std::cout << out.dump(2) << '\n';
        } else {
          std::cout << t.to_tsv();
        }
      } else if (json) {
        std::cout << block_matrix_to_json(a).dump(2) << '\n';
      } else {
        std::cout << format_block_matrix(a);
      }
      return 0;
    }

    if (*recover_cmd) {
      const SelfMapClass h = self_map_from_json(read_json_file(recover_path));
      int k = 0;
      for (const auto& label : h.signature().labels()) k += label.kind == SphereLabel::Kind::P ? 1 : 0;
      PuncturedSignature sig(ManifoldModel::standard(h.signature().g(), h.signature().d()), k);
      const auto result = recover_braid(sig, h);
      const auto* braid = std::get_if<BraidElement>(&result);
      if (json) {
        Json out = {{"command", "recover"}, {"in_image", braid != nullptr}};
        if (braid) out["braid"] = format_braid(*braid);
        else out["reason"] = std::get<NotInImage>(result).reason;
        std::cout << out.dump(2) << '\n';
      } else if (braid) {
        std::cout << format_braid(*braid) << '\n';
      } else {
        std::cout << "not in image: " << std::get<NotInImage>(result).reason << '\n';
      }
      return braid ? 0 : 3;
    }

    if (*kernel_cmd) {
      PuncturedSignature sig(ManifoldModel::standard(kf.g, kf.d), kf.k);
      const KernelReport r = kernel_report(sig, max_len, max_braids, kernel_seed);
      if (json) {
        Json out = {{"command", "kernel"}, {"g", kf.g}, {"k", kf.k}, {"max_len", max_len}};
        const Json report = kernel_report_to_json(r);
        for (const auto& [key, value] : report.items()) out[key] = value;
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << "checked " << r.checked << " braids (" << (r.exhaustive ? "exhaustive" : "sampled")
                  << ", slot words of length <= " << max_len << ")\n";
        std::cout << "identity in kernel: " << (r.identity_in_kernel ? "yes" : "no") << '\n';
        std::cout << "nontrivial kernel elements: " << r.nontrivial_kernel.size() << '\n';
        for (const auto& b : r.nontrivial_kernel) std::cout << "  " << format_braid(b) << '\n';
        std::cout << (r.kernel_trivial() ? "kernel trivial" : "kernel NOT trivial") << '\n';
      }
      return r.kernel_trivial() ? 0 : 1;
    }

    if (*components_cmd) {
      const TargetModel target = target_from_json(read_json_file(target_path));
      int g = comp_g.value_or(target.f_classes().empty() ? 0 : static_cast<int>(target.f_classes()[0].size()));
      if (g < 0) throw InvalidInput("-g must be >= 0");
      const ManifoldModel model = ManifoldModel::standard(g, comp_d).with_low_handle_dim(low_handle_dim);
      const HypothesisMode mode = formula_only ? HypothesisMode::FormulaOnly : HypothesisMode::Require;
      const BigInt formula = components_formula(model, target, comp_k, mode);
      std::optional<BigInt> brute;
      if (brute_force) brute = components_bruteforce(model, target, comp_k, default_max_states(), mode);
      if (json) {
        Json out = {{"command", "components"}, {"g", g}, {"k", comp_k}, {"formula", bigint_to_json(formula)}};
        if (brute) {
          out["brute_force"] = bigint_to_json(*brute);
          out["agree"] = *brute == formula;
        }
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << "formula: " << formula;
        if (brute) std::cout << ", brute-force: " << *brute << ", " << (*brute == formula ? "agree" : "DISAGREE");
        std::cout << '\n';
      }
      return !brute || *brute == formula ? 0 : 1;
    }

    if (*verify_cmd) {
      const auto reports = run_verify(suite, vopt);
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.passed();
      if (json) {
        Json out = {{"command", "verify"}, {"passed", ok}};
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(suite_report_to_json(r));
        out["suites"] = arr;
        std::cout << out.dump(2) << '\n';
      } else {
        for (const auto& r : reports) std::cout << format_suite_report(r);
        std::cout << (ok ? "verify: PASS" : "verify: FAIL") << '\n';
      }
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: InvalidInput: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
