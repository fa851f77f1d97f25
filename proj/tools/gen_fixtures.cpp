// Regenerates the shipped bundles under data/. Run from the repository root:
//   build/tools/gen-fixtures [output-dir]
// Every generated file is validated before it is written; the level-rank
// branching is frozen from the search output, not written by hand.

#include <filesystem>
#include <iostream>

#include "mirrorcat/affine.hpp"
#include "mirrorcat/errors.hpp"
#include "mirrorcat/io.hpp"
#include "mirrorcat/mirror.hpp"

namespace fs = std::filesystem;
using namespace mirrorcat;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("fixture generation failed: " + what);
}

}  // namespace

int main(int argc, char** argv) {
  fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::path("data");
  fs::create_directories(dir);

  try {
    for (int k = 1; k <= 10; ++k) {
      ModularData md = sl2_modular(k);
      require(validate_modular(md).overall(), "sl2 level " + std::to_string(k));
      save_modular_bundle(dir / ("sl2_level" + std::to_string(k) + ".json"), md,
                          {{"provenance", "gen-affine --algebra sl2 --level " + std::to_string(k)}});
    }

    {
      ModularData md = sln_modular(4, 2);
      require(validate_modular(md).overall(), "sl4 level 2");
      save_modular_bundle(dir / "sl4_level2.json", md,
                          {{"provenance", "gen-affine --algebra sln --rank 4 --level 2"}});
    }

    {
      ModularData md = builtin_ising();
      require(validate_modular(md).overall(), "ising");
      save_modular_bundle(dir / "ising.json", md,
                          {{"provenance", "hand-entered Ising modular data; c = 1/2, h = (0, 1/2, 1/16)"}});
    }

    // coset branching sl2(2) x Ising: the search returns the vacuum and one
    // nontrivial branching; freeze the nontrivial one
    {
      auto c1 = ValidatedCategory::make(sl2_modular(2));
      auto c2 = ValidatedCategory::make(builtin_ising());
      std::vector<BranchingMatrix> found = search_branchings(c1, c2, 4);
      require(found.size() == 2, "coset search over (sl2 level 2, ising)");
      const BranchingMatrix& z = found.back();
      require(z.entries.count({2, 1}) == 1, "coset support (l2, eps)");
      save_branching_bundle(dir / "gko_ising_branching.json", "sl2_level2.json", "ising.json", z.entries,
                            z.hypotheses,
                            {{"provenance", "search-branchings sl2_level2.json ising.json; unique branching "
                                            "beyond the vacuum, support (l0,1) (l2,eps)"}});
    }

    // conformal embedding of sl2(2) x sl2(2) into the level-1 sl4 category
    {
      auto c = ValidatedCategory::make(sl2_modular(2));
      std::vector<BranchingMatrix> found = search_branchings(c, c, 4);
      require(found.size() == 2, "search over (sl2 level 2, sl2 level 2)");
      const BranchingMatrix& z = found.back();
      require(z.entries.count({2, 2}) == 1, "embedding support (l2, l2)");
      save_branching_bundle(dir / "sl4level1_branching.json", "sl2_level2.json", "sl2_level2.json", z.entries,
                            z.hypotheses,
                            {{"provenance", "search-branchings sl2_level2.json sl2_level2.json; conformal "
                                            "embedding into the level-1 sl4 category, support (l0,l0) (l2,l2)"}});
    }

    // level-rank branching sl2(4) x sl4(2) inside the level-1 sl8 category:
    // freeze the largest support the search validates
    {
      auto c1 = ValidatedCategory::make(sl2_modular(4));
      auto c2 = ValidatedCategory::make(sln_modular(4, 2));
      std::vector<BranchingMatrix> found = search_branchings(c1, c2, 8);
      require(!found.empty(), "level-rank search");
      const BranchingMatrix& z = found.back();
      require(z.entries.size() == 3, "level-rank support size");
      save_branching_bundle(dir / "levelrank_2_4.json", "sl2_level4.json", "sl4_level2.json", z.entries,
                            z.hypotheses,
                            {{"provenance", "search-branchings sl2_level4.json sl4_level2.json; largest valid "
                                            "support, frozen from the search output"}});
    }

    save_extension_bundle(dir / "trivial_ext.json", "sl2_level2.json", 1, {{"l0", 1}}, true,
                          {{"provenance", "trivial extension of the sl2 level-2 side"}});
    save_extension_bundle(dir / "ext_with_l2.json", "sl2_level2.json", 1, {{"l0", 1}, {"l2", 1}}, true,
                          {{"provenance", "invalid on purpose: l2 has weight 1/2, not integral"}});
    save_extension_bundle(dir / "ext_l0_l4.json", "sl2_level4.json", 1, {{"l0", 1}, {"l4", 1}}, true,
                          {{"provenance", "simple-current extension of the sl2 level-4 side; h(l4) = 1"}});
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  std::cout << "fixtures written to " << dir << "\n";
  return 0;
}
