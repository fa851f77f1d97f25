#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "mirrorcat/affine.hpp"
#include "mirrorcat/branching.hpp"
#include "mirrorcat/errors.hpp"
#include "mirrorcat/io.hpp"

using namespace mirrorcat;

namespace {

std::shared_ptr<const ValidatedCategory> trivial_category() {
  ModularData md;
  md.labels = {"1"};
  md.S = {{Complex{1, 0}}};
  md.h = {Rational(0)};
  md.c = Rational(0);
  return ValidatedCategory::make(std::move(md));
}

BranchingMatrix coset_ising_branching() {
  BranchingMatrix z;
  z.cat1 = ValidatedCategory::make(sl2_modular(2));
  z.cat2 = ValidatedCategory::make(builtin_ising());
  z.entries[{0, 0}] = 1;
  z.entries[{2, 1}] = 1;  // (l2, eps)
  return z;
}

}  // namespace

TEST_CASE("the sl2(2)/Ising coset branching passes every check") {
  BranchingMatrix z = coset_ising_branching();
  CheckReport rep = validate_branching(z);
  for (const auto& e : rep.entries()) {
    INFO(e.id, ": ", e.detail);
    CHECK(e.status == CheckStatus::pass);
  }
  CHECK(rep.overall());
  CHECK(z.validated);
  CHECK(z.tau == std::vector<std::pair<int, int>>{{0, 0}, {2, 1}});
  CHECK(z.tau_of(2) == 1);
}

TEST_CASE("a half-integer weight pair fails the weight check") {
  BranchingMatrix z = coset_ising_branching();
  z.entries.erase({2, 1});
  z.entries[{1, 2}] = 1;  // (l1, sigma): 3/16 + 1/16 = 1/4
  CheckReport rep = validate_branching(z);
  CHECK_FALSE(rep.overall());
  CHECK(rep.failed("branching.weight_integrality"));
  CHECK(rep.passed("branching.unit_pairing"));
  CHECK(rep.passed("branching.multiplicity_one"));
  CHECK(rep.passed("branching.support_bijection"));
  CHECK(rep.passed("branching.dual_symmetry"));
  CHECK_FALSE(z.validated);
}

TEST_CASE("the vacuum-only branching is valid for any pair of categories") {
  BranchingMatrix z;
  z.cat1 = ValidatedCategory::make(sl2_modular(3));
  z.cat2 = ValidatedCategory::make(builtin_ising());
  z.entries[{0, 0}] = 1;
  CheckReport rep = validate_branching(z);
  CHECK(rep.overall());
  CHECK(z.tau == std::vector<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("validation rejects unknown labels") {
  BranchingMatrix z = coset_ising_branching();
  z.entries[{9, 0}] = 1;
  CHECK_THROWS_AS(validate_branching(z), UnknownLabel);
}

TEST_CASE("search over (sl2(2), Ising) finds exactly the trivial and coset branchings") {
  auto c1 = ValidatedCategory::make(sl2_modular(2));
  auto c2 = ValidatedCategory::make(builtin_ising());
  std::vector<BranchingMatrix> found = search_branchings(c1, c2, 4);
  REQUIRE(found.size() == 2);
  CHECK(found[0].tau == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(found[1].tau == std::vector<std::pair<int, int>>{{0, 0}, {2, 1}});
  for (const BranchingMatrix& z : found) CHECK(z.validated);
}

TEST_CASE("search over (sl2(1), sl2(1)) finds only the vacuum branching") {
  auto c = ValidatedCategory::make(sl2_modular(1));
  std::vector<BranchingMatrix> found = search_branchings(c, c, 4);
  REQUIRE(found.size() == 1);
  CHECK(found[0].tau == std::vector<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("search over two trivial categories") {
  auto c = trivial_category();
  std::vector<BranchingMatrix> found = search_branchings(c, c, 4);
  REQUIRE(found.size() == 1);
  CHECK(found[0].entries.size() == 1);
}

TEST_CASE("search results re-validate check by check") {
  auto c1 = ValidatedCategory::make(sl2_modular(2));
  std::vector<BranchingMatrix> found = search_branchings(c1, c1, 4);
  REQUIRE(found.size() == 2);  // vacuum and {(l0,l0),(l2,l2)}
  CHECK(found[1].tau == std::vector<std::pair<int, int>>{{0, 0}, {2, 2}});
  for (BranchingMatrix& z : found) {
    CheckReport rep = validate_branching(z);
    for (const auto& e : rep.entries()) CHECK(e.status == CheckStatus::pass);
  }
}

TEST_CASE("search budget is enforced") {
  auto c = ValidatedCategory::make(sl2_modular(4));
  CHECK_THROWS_AS(search_branchings(c, c, 5, Tolerances{}, 2), BudgetExceeded);
}

TEST_CASE("transposed-dualized branching passes whenever the original does") {
  BranchingMatrix z = coset_ising_branching();
  REQUIRE(validate_branching(z).overall());
  BranchingMatrix flipped = transpose_dualize(z);
  CHECK(validate_branching(flipped).overall());
  CHECK(flipped.tau == std::vector<std::pair<int, int>>{{0, 0}, {1, 2}});
}

TEST_CASE("free_module_hom") {
  SUBCASE("unit-only algebra gives the identity pairing") {
    auto cat = ValidatedCategory::make(sl2_modular(2));
    std::map<int, Mult> unit_only{{0, 1}};
    for (int u = 0; u < 3; ++u)
      for (int v = 0; v < 3; ++v) CHECK(free_module_hom(*cat, unit_only, u, v) == (u == v ? 1 : 0));
  }
  SUBCASE("coset algebra in the product category") {
    auto prod = ValidatedCategory::make(deligne_modular(sl2_modular(2), builtin_ising()));
    // labels (a, x) at index 3a + x; algebra = (l0,1) + (l2,eps)
    std::map<int, Mult> algebra{{0, 1}, {2 * 3 + 1, 1}};
    int l1sigma = 1 * 3 + 2;
    CHECK(free_module_hom(*prod, algebra, l1sigma, l1sigma) == 2);
    int l0one = 0, l2eps = 2 * 3 + 1;
    CHECK(free_module_hom(*prod, algebra, l0one, l2eps) == 1);
    CHECK(free_module_hom(*prod, algebra, l2eps, l0one) == 1);
  }
  SUBCASE("input validation") {
    auto cat = ValidatedCategory::make(sl2_modular(2));
    CHECK_THROWS_AS(free_module_hom(*cat, {{1, 1}}, 0, 0), InvalidInput);   // no unit
    CHECK_THROWS_AS(free_module_hom(*cat, {{0, 1}}, 5, 0), UnknownLabel);
  }
}

TEST_CASE("mutated branchings fail exactly the targeted check") {
  SUBCASE("unit pairing: missing vacuum pair") {
    BranchingMatrix z = coset_ising_branching();
    z.entries.erase({0, 0});
    CheckReport rep = validate_branching(z);
    CHECK(rep.failed("branching.unit_pairing"));
    for (const auto& e : rep.entries())
      if (e.id != "branching.unit_pairing") CHECK(e.status == CheckStatus::pass);
  }
  SUBCASE("multiplicity: doubled entry") {
    BranchingMatrix z = coset_ising_branching();
    z.entries[{2, 1}] = 2;
    CheckReport rep = validate_branching(z);
    CHECK(rep.failed("branching.multiplicity_one"));
    CHECK(rep.passed("branching.unit_pairing"));
    CHECK(rep.passed("branching.support_bijection"));
  }
  SUBCASE("bijection: a row with two pairs skips the tau-dependent checks") {
    BranchingMatrix z = coset_ising_branching();
    z.entries[{2, 2}] = 1;
    CheckReport rep = validate_branching(z);
    CHECK(rep.failed("branching.support_bijection"));
    CHECK(rep.passed("branching.unit_pairing"));
    CHECK(rep.skipped("branching.weight_integrality"));
    CHECK(rep.skipped("branching.fusion_rule_match"));
  }
}
