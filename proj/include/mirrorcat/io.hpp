#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "mirrorcat/mirror.hpp"

namespace mirrorcat {

enum class BundleKind { ring, modular, branching, extension };

std::string to_string(BundleKind k);

using Meta = std::map<std::string, std::string>;

// A branching as loaded from disk: both categories are resolved relative to
// the bundle's directory, loaded and validated.
struct LoadedBranching {
  BranchingMatrix z;
  std::string cat1_path;  // as written in the file
  std::string cat2_path;
  std::filesystem::path cat1_resolved;
  std::filesystem::path cat2_resolved;
};

struct LoadedExtension {
  ExtensionSpec ext;
  std::shared_ptr<const ValidatedCategory> category;
  std::string category_path;
  std::filesystem::path category_resolved;
};

struct Bundle {
  BundleKind kind = BundleKind::modular;
  Meta meta;
  std::optional<FusionRing> ring;
  std::optional<ModularData> modular;
  std::optional<LoadedBranching> branching;
  std::optional<LoadedExtension> extension;
};

// Parses and schema-checks a bundle file. Rationals are parsed exactly from
// their text form; ring duals are recomputed from the tensor and modular
// duals later from S^2, never read from the file. Referenced category files
// are resolved relative to the bundle's directory, loaded, and validated.
Bundle load_bundle(const std::filesystem::path& path, const Tolerances& tol = {});

void save_modular_bundle(const std::filesystem::path& path, const ModularData& md, const Meta& meta = {});
void save_ring_bundle(const std::filesystem::path& path, const FusionRing& ring, const Meta& meta = {});
// `pairs` are (i, j, multiplicity) rows; category paths are written verbatim.
void save_branching_bundle(const std::filesystem::path& path, const std::string& cat1_path,
                           const std::string& cat2_path, const std::map<std::pair<int, int>, Mult>& pairs,
                           const Hypotheses& hyp, const Meta& meta = {});
// `m` is keyed by label display name.
void save_extension_bundle(const std::filesystem::path& path, const std::string& category_path, int side,
                           const std::map<std::string, Mult>& m, bool simple, const Meta& meta = {});

// Hand-entered modular data of the Ising category (labels 1, eps, sigma).
ModularData builtin_ising();

// One line per check: STATUS, id, detail.
std::string render_report_text(const CheckReport& rep);
// Stable machine rendering (used by --format machine).
std::string render_report_machine(const CheckReport& rep);

}  // namespace mirrorcat
