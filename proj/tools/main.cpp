// Command-line surface: validate fusion rings, modular data, branchings and
// extensions, generate affine data, and compute mirror extensions.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 bad
// input or usage.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <json.hpp>

#include "mirrorcat/affine.hpp"
#include "mirrorcat/errors.hpp"
#include "mirrorcat/io.hpp"
#include "mirrorcat/mirror.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;
using namespace mirrorcat;

namespace {

struct Options {
  double tol = 1e-9;
  std::string format = "text";
  bool quiet = false;

  Tolerances tolerances() const {
    Tolerances t;
    t.check = tol;
    return t;
  }
};

void emit(const Options& opt, const CheckReport& rep, Json extra = Json::object()) {
  if (opt.quiet) return;
  if (opt.format == "machine") {
    Json j = Json::parse(render_report_machine(rep));
    for (auto& [k, v] : extra.items()) j[k] = v;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << render_report_text(rep);
    for (auto& [k, v] : extra.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

void say(const Options& opt, const std::string& text_line, const Json& machine) {
  if (opt.quiet) return;
  if (opt.format == "machine")
    std::cout << machine.dump(2) << "\n";
  else
    std::cout << text_line << "\n";
}

Bundle load_kind(const std::string& path, BundleKind want, const Tolerances& tol) {
  Bundle b = load_bundle(path, tol);
  if (b.kind != want)
    throw SchemaError(path + ": expected a " + to_string(want) + " bundle, found " + to_string(b.kind));
  return b;
}

int report_exit(const CheckReport& rep) { return rep.overall() ? 0 : 1; }

int cmd_check_ring(const Options& opt, const std::string& file) {
  Bundle b = load_kind(file, BundleKind::ring, opt.tolerances());
  CheckReport rep = validate_ring(*b.ring, opt.tolerances());
  emit(opt, rep);
  return report_exit(rep);
}

int cmd_check_modular(const Options& opt, const std::string& file) {
  Bundle b = load_kind(file, BundleKind::modular, opt.tolerances());
  CheckReport rep = validate_modular(*b.modular, opt.tolerances());
  if (rep.overall()) quantum_dims(*b.modular, opt.tolerances(), &rep);  // consistency warning channel
  emit(opt, rep);
  return report_exit(rep);
}

int cmd_verlinde(const Options& opt, const std::string& file, const std::string& out) {
  Bundle b = load_kind(file, BundleKind::modular, opt.tolerances());
  FusionRing ring = verlinde_fusion(*b.modular, opt.tolerances());
  Meta meta = b.meta;
  meta["provenance"] = "verlinde fusion of " + fs::path(file).filename().string();
  save_ring_bundle(out, ring, meta);
  say(opt, "ring with " + std::to_string(ring.size()) + " labels and " + std::to_string(ring.tensor().size()) +
               " nonzero structure constants written to " + out,
      Json{{"labels", ring.size()}, {"nonzero", ring.tensor().size()}, {"output", out}});
  return 0;
}

int cmd_gen_affine(const Options& opt, const std::string& algebra, int rank, int level, const std::string& out) {
  ModularData md;
  std::string provenance;
  if (algebra == "sl2") {
    md = sl2_modular(level, opt.tolerances());
    provenance = "gen-affine --algebra sl2 --level " + std::to_string(level);
  } else if (algebra == "sln") {
    if (rank < 2) throw InvalidRank("--rank is required for --algebra sln");
    md = sln_modular(rank, level, opt.tolerances());
    provenance = "gen-affine --algebra sln --rank " + std::to_string(rank) + " --level " + std::to_string(level);
  } else {
    throw InvalidInput("unknown algebra '" + algebra + "', expected sl2 or sln");
  }
  save_modular_bundle(out, md, {{"provenance", provenance}});
  say(opt, "modular data with " + std::to_string(md.size()) + " labels written to " + out,
      Json{{"labels", md.size()}, {"output", out}});
  return 0;
}

int cmd_check_branching(const Options& opt, const std::string& file) {
  Bundle b = load_kind(file, BundleKind::branching, opt.tolerances());
  CheckReport rep = validate_branching(b.branching->z, opt.tolerances());
  Json extra = Json::object();
  if (b.branching->z.validated) {
    Json tau = Json::array();
    for (const auto& [i, j] : b.branching->z.tau)
      tau.push_back(Json::array({b.branching->z.cat1->md.labels[i], b.branching->z.cat2->md.labels[j]}));
    extra["tau"] = std::move(tau);
  }
  if (!b.branching->z.hypotheses.double_commutant)
    rep.add("branching.double_commutant_declared", CheckStatus::warn,
            "input declares the double-commutant hypothesis false");
  emit(opt, rep, std::move(extra));
  return report_exit(rep);
}

int cmd_search(const Options& opt, const std::string& cat1_file, const std::string& cat2_file, int max_support,
               std::int64_t budget) {
  Tolerances tol = opt.tolerances();
  Bundle b1 = load_kind(cat1_file, BundleKind::modular, tol);
  Bundle b2 = load_kind(cat2_file, BundleKind::modular, tol);
  auto c1 = ValidatedCategory::make(std::move(*b1.modular), tol);
  auto c2 = ValidatedCategory::make(std::move(*b2.modular), tol);
  std::vector<BranchingMatrix> found = search_branchings(c1, c2, max_support, tol, budget);

  if (!opt.quiet) {
    if (opt.format == "machine") {
      Json arr = Json::array();
      for (const BranchingMatrix& z : found) {
        Json pairs = Json::array();
        for (const auto& [key, mult] : z.entries)
          pairs.push_back(Json::array({key.first, key.second, mult}));
        arr.push_back(Json{{"pairs", std::move(pairs)}});
      }
      std::cout << Json{{"found", found.size()}, {"branchings", std::move(arr)}}.dump(2) << "\n";
    } else {
      std::cout << "found " << found.size() << " branching(s)\n";
      for (size_t n = 0; n < found.size(); ++n) {
        std::cout << "  [" << n << "]";
        for (const auto& [key, mult] : found[n].entries) {
          (void)mult;
          std::cout << " (" << c1->md.labels[key.first] << "," << c2->md.labels[key.second] << ")";
        }
        std::cout << "\n";
      }
    }
  }
  return 0;
}

// The extension file must reference the category sitting on its declared
// side of the branching.
void check_extension_reference(const LoadedBranching& z, const LoadedExtension& ext) {
  const fs::path& want = ext.ext.side == 1 ? z.cat1_resolved : z.cat2_resolved;
  if (ext.category_resolved != want)
    throw ResolutionError("extension references category '" + ext.category_resolved.string() +
                          "' but side " + std::to_string(ext.ext.side) + " of the branching is '" +
                          want.string() + "'");
}

int cmd_check_extension(const Options& opt, const std::string& z_file, const std::string& ext_file) {
  Tolerances tol = opt.tolerances();
  Bundle zb = load_kind(z_file, BundleKind::branching, tol);
  CheckReport z_rep = validate_branching(zb.branching->z, tol);
  if (!z_rep.overall()) {
    emit(opt, z_rep);
    return 1;
  }
  Bundle eb = load_kind(ext_file, BundleKind::extension, tol);
  check_extension_reference(*zb.branching, *eb.extension);
  CheckReport rep = check_extension(zb.branching->z, eb.extension->ext, tol);
  emit(opt, rep);
  return report_exit(rep);
}

int cmd_mirror(const Options& opt, const std::string& z_file, const std::string& ext_file, const std::string& out) {
  Tolerances tol = opt.tolerances();
  Bundle zb = load_kind(z_file, BundleKind::branching, tol);
  CheckReport z_rep = validate_branching(zb.branching->z, tol);
  if (!z_rep.overall()) {
    emit(opt, z_rep);
    return 1;
  }
  Bundle eb = load_kind(ext_file, BundleKind::extension, tol);
  if (eb.extension->ext.side != 1)
    throw InvalidInput(ext_file + ": mirror expects an extension on side 1 of the branching");
  check_extension_reference(*zb.branching, *eb.extension);

  const BranchingMatrix& z = zb.branching->z;
  CheckReport pre = check_extension(z, eb.extension->ext, tol);
  if (!pre.overall()) {
    emit(opt, pre);
    return 1;
  }
  MirrorResult r = mirror_extend(z, eb.extension->ext, tol);

  CheckReport rep = pre;
  rep.merge(r.report);
  std::map<std::string, Mult> named;
  for (const auto& [j, mult] : r.m_prime) named[z.cat2->md.labels[j]] = mult;
  Json m_prime = Json::object();
  for (const auto& [name, mult] : named) m_prime[name] = mult;
  emit(opt, rep, Json{{"m_prime", std::move(m_prime)}});

  if (!out.empty() && rep.overall()) {
    std::string cat_ref = zb.branching->cat2_path;
    fs::path out_dir = fs::path(out).parent_path();
    if (out_dir.empty()) out_dir = ".";
    std::error_code ec;
    fs::path rel = fs::relative(zb.branching->cat2_resolved, fs::weakly_canonical(out_dir), ec);
    if (!ec && !rel.empty()) cat_ref = rel.string();
    save_extension_bundle(out, cat_ref, 2, named, r.simple,
                          {{"provenance", "mirror of " + fs::path(ext_file).filename().string() + " through " +
                                              fs::path(z_file).filename().string()}});
  }
  return report_exit(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusion-ring and modular-data toolkit for coset branchings and mirror extensions"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--tol", opt.tol, "tolerance for real-valued checks")->capture_default_str();
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  app.add_flag("--quiet", opt.quiet, "suppress normal output");

  std::string file, file2, out;
  int rank = 0, level = 1, max_support = -1;
  std::int64_t budget = 1'000'000;
  std::string algebra;
  std::function<int()> action;

  auto* ring_cmd = app.add_subcommand("check-ring", "validate a fusion ring bundle");
  ring_cmd->fallthrough();
  ring_cmd->add_option("file", file, "ring bundle")->required();
  ring_cmd->callback([&] { action = [&] { return cmd_check_ring(opt, file); }; });

  auto* modular_cmd = app.add_subcommand("check-modular", "validate a modular data bundle");
  modular_cmd->fallthrough();
  modular_cmd->add_option("file", file, "modular bundle")->required();
  modular_cmd->callback([&] { action = [&] { return cmd_check_modular(opt, file); }; });

  auto* verlinde_cmd = app.add_subcommand("verlinde", "derive the fusion ring of modular data");
  verlinde_cmd->fallthrough();
  verlinde_cmd->add_option("file", file, "modular bundle")->required();
  verlinde_cmd->add_option("-o,--output", out, "ring bundle to write")->required();
  verlinde_cmd->callback([&] { action = [&] { return cmd_verlinde(opt, file, out); }; });

  auto* gen_cmd = app.add_subcommand("gen-affine", "generate affine WZW modular data");
  gen_cmd->fallthrough();
  gen_cmd->add_option("--algebra", algebra, "sl2 or sln")->required();
  gen_cmd->add_option("--rank", rank, "rank parameter n for sln");
  gen_cmd->add_option("--level", level, "level k")->required();
  gen_cmd->add_option("-o,--output", out, "modular bundle to write")->required();
  gen_cmd->callback([&] { action = [&] { return cmd_gen_affine(opt, algebra, rank, level, out); }; });

  auto* branching_cmd = app.add_subcommand("check-branching", "validate a branching bundle");
  branching_cmd->fallthrough();
  branching_cmd->add_option("file", file, "branching bundle")->required();
  branching_cmd->callback([&] { action = [&] { return cmd_check_branching(opt, file); }; });

  auto* search_cmd = app.add_subcommand("search-branchings", "enumerate valid branchings of two categories");
  search_cmd->fallthrough();
  search_cmd->add_option("cat1", file, "modular bundle, side 1")->required();
  search_cmd->add_option("cat2", file2, "modular bundle, side 2")->required();
  search_cmd->add_option("--max-support", max_support, "cap on support pairs including the vacuum");
  search_cmd->add_option("--budget", budget, "cap on enumeration nodes")->capture_default_str();
  search_cmd->callback([&] { action = [&] { return cmd_search(opt, file, file2, max_support, budget); }; });

  auto* ext_cmd = app.add_subcommand("check-extension", "check an extension spec against a branching");
  ext_cmd->fallthrough();
  ext_cmd->add_option("branching", file, "branching bundle")->required();
  ext_cmd->add_option("extension", file2, "extension bundle")->required();
  ext_cmd->callback([&] { action = [&] { return cmd_check_extension(opt, file, file2); }; });

  auto* mirror_cmd = app.add_subcommand("mirror", "compute the mirror extension of a side-1 extension");
  mirror_cmd->fallthrough();
  mirror_cmd->add_option("branching", file, "branching bundle")->required();
  mirror_cmd->add_option("extension", file2, "extension bundle, side 1")->required();
  mirror_cmd->add_option("-o,--output", out, "extension bundle to write for side 2");
  mirror_cmd->callback([&] { action = [&] { return cmd_mirror(opt, file, file2, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::input ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
