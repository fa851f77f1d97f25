#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "mirrorcat/affine.hpp"
#include "mirrorcat/errors.hpp"
#include "mirrorcat/fusion_ring.hpp"

using namespace mirrorcat;
using testhelp::cyclic_ring;
using testhelp::make_ring;
using testhelp::sl2_qdim;
using testhelp::trivial_ring;

TEST_CASE("infer_duals on self-dual, pointed and trivial rings") {
  for (int k = 1; k <= 6; ++k) {
    FusionRing r = sl2_fusion_oracle(k);
    std::vector<int> dual = infer_duals(r.tensor(), r.unit(), r.size());
    for (int a = 0; a < r.size(); ++a) CHECK(dual[a] == a);
  }
  FusionRing z3 = cyclic_ring(3);
  CHECK(z3.dual(0) == 0);
  CHECK(z3.dual(1) == 2);
  CHECK(z3.dual(2) == 1);
  CHECK(trivial_ring().dual(0) == 0);
}

TEST_CASE("infer_duals failure modes") {
  // no partner into the unit
  FusionTensor no_partner;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      no_partner[{0, b, b}] = 1;
      no_partner[{a, 0, a}] = 1;
    }
  CHECK_THROWS_AS(infer_duals(no_partner, 0, 2), DualityError);

  // two partners
  FusionTensor two = sl2_fusion_oracle(2).tensor();
  two[{1, 2, 0}] = 1;
  two[{2, 1, 0}] = 1;
  CHECK_THROWS_AS(infer_duals(two, 0, 3), DualityError);

  // multiplicity > 1 into the unit
  FusionTensor mult = sl2_fusion_oracle(2).tensor();
  mult[{1, 1, 0}] = 2;
  CHECK_THROWS_AS(infer_duals(mult, 0, 3), DualityError);
}

TEST_CASE("validate_ring passes on oracle rings") {
  for (int k = 1; k <= 5; ++k) {
    CheckReport rep = validate_ring(sl2_fusion_oracle(k));
    CHECK(rep.overall());
  }
  CHECK(validate_ring(trivial_ring()).overall());
  CHECK(validate_ring(cyclic_ring(3)).overall());
}

TEST_CASE("validate_ring catches a forced associativity violation") {
  // dropping l2 from l1 ⊗ l1 leaves a non-associative product:
  // (l1 l1) l2 has a unit component that l1 (l1 l2) lacks
  FusionRing base = sl2_fusion_oracle(2);
  FusionTensor t = base.tensor();
  t.erase({1, 1, 2});
  FusionRing broken(base.labels(), base.unit(), base.duals(), std::move(t));
  CheckReport rep = validate_ring(broken);
  CHECK_FALSE(rep.overall());
  CHECK(rep.failed("ring.associativity"));
}

TEST_CASE("adding l1 to l1 ⊗ l1 in the level-2 ring yields another valid ring") {
  // the near-group ring on {1, x, eps} with x^2 = 1 + x + eps is associative,
  // so this mutation must (correctly) pass every axiom
  FusionRing base = sl2_fusion_oracle(2);
  FusionTensor t = base.tensor();
  t[{1, 1, 1}] = 1;
  FusionRing repS3(base.labels(), base.unit(), base.duals(), std::move(t));
  CHECK(validate_ring(repS3).overall());
  CHECK(fpdim_object(repS3, 1) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("each ring axiom is caught by a one-entry mutation") {
  FusionRing sl2_2 = sl2_fusion_oracle(2);

  SUBCASE("unit axiom") {
    FusionTensor t = sl2_2.tensor();
    t[{0, 1, 2}] = 1;
    FusionRing r(sl2_2.labels(), 0, sl2_2.duals(), std::move(t));
    CHECK(validate_ring(r).failed("ring.unit_axiom"));
  }
  SUBCASE("dual involution") {
    FusionRing r(sl2_2.labels(), 0, {0, 0, 2}, sl2_2.tensor());
    CHECK(validate_ring(r).failed("ring.dual_involution"));
  }
  SUBCASE("duality pairing multiplicity") {
    FusionTensor t = sl2_2.tensor();
    t[{2, 2, 0}] = 2;
    FusionRing r(sl2_2.labels(), 0, sl2_2.duals(), std::move(t));
    CHECK(validate_ring(r).failed("ring.duality_pairing"));
  }
  SUBCASE("duality pairing wrong partner") {
    FusionRing r(sl2_2.labels(), 0, {0, 2, 1}, sl2_2.tensor());
    CHECK(validate_ring(r).failed("ring.duality_pairing"));
  }
  SUBCASE("commutativity") {
    FusionTensor t = sl2_2.tensor();
    t[{1, 2, 1}] = 2;  // leaves (2,1,1) at 1
    FusionRing r(sl2_2.labels(), 0, sl2_2.duals(), std::move(t));
    CHECK(validate_ring(r).failed("ring.commutativity"));
  }
  SUBCASE("dual symmetry") {
    FusionRing z3 = cyclic_ring(3);
    FusionTensor t = z3.tensor();
    t[{1, 1, 2}] = 2;  // symmetric in (a,b), so only the dual relation breaks
    FusionRing r(z3.labels(), 0, z3.duals(), std::move(t));
    CHECK(validate_ring(r).failed("ring.dual_symmetry"));
  }
  SUBCASE("Frobenius reciprocity") {
    FusionRing z3 = cyclic_ring(3);
    FusionTensor t = z3.tensor();
    t[{1, 2, 1}] = 1;
    t[{2, 1, 1}] = 1;
    FusionRing r(z3.labels(), 0, z3.duals(), std::move(t));
    CHECK(validate_ring(r).failed("ring.frobenius_reciprocity"));
  }
}

TEST_CASE("fuse returns nonzero terms in label order") {
  FusionRing r = sl2_fusion_oracle(2);
  CHECK(r.fuse(1, 1) == std::vector<FusedTerm>{{0, 1}, {2, 1}});
  CHECK(r.fuse(2, 2) == std::vector<FusedTerm>{{0, 1}});
  for (int a = 0; a < r.size(); ++a) CHECK(r.fuse(r.unit(), a) == std::vector<FusedTerm>{{a, 1}});
  CHECK_THROWS_AS(r.fuse(0, 99), UnknownLabel);
}

TEST_CASE("fpdim_object matches the closed form") {
  CHECK(fpdim_object(trivial_ring(), 0) == doctest::Approx(1.0).epsilon(1e-12));
  for (int k = 1; k <= 8; ++k) {
    FusionRing r = sl2_fusion_oracle(k);
    CHECK(fpdim_object(r, r.unit()) == doctest::Approx(1.0).epsilon(1e-12));
    for (int l = 0; l <= k; ++l) CHECK(std::abs(fpdim_object(r, l) - sl2_qdim(k, l)) < 1e-9);
  }
  // frozen reference points
  CHECK(std::abs(fpdim_object(sl2_fusion_oracle(2), 1) - 1.4142135623730951) < 1e-9);
  CHECK(std::abs(fpdim_object(sl2_fusion_oracle(3), 1) - 1.6180339887498949) < 1e-9);
}

TEST_CASE("fpdim on pointed rings (periodic fusion matrices)") {
  FusionRing z3 = cyclic_ring(3);
  for (int a = 0; a < 3; ++a) CHECK(fpdim_object(z3, a) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("fpdim homomorphism and dual invariance") {
  for (int k : {1, 2, 3, 4, 5}) {
    FusionRing r = sl2_fusion_oracle(k);
    std::vector<double> d(r.size());
    for (int a = 0; a < r.size(); ++a) d[a] = fpdim_object(r, a);
    for (int a = 0; a < r.size(); ++a) {
      CHECK(std::abs(d[a] - d[r.dual(a)]) < 1e-9);
      for (int b = 0; b < r.size(); ++b) {
        double rhs = 0;
        for (const auto& t : r.fuse(a, b)) rhs += static_cast<double>(t.mult) * d[t.label];
        CHECK(std::abs(d[a] * d[b] - rhs) < 1e-9);
      }
    }
  }
}

TEST_CASE("fpdim_category") {
  CHECK(fpdim_category(trivial_ring()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(fpdim_category(sl2_fusion_oracle(2)) - 4.0) < 1e-9);
  CHECK(std::abs(fpdim_category(sl2_fusion_oracle(1)) - 2.0) < 1e-9);
  // subset restriction
  FusionRing r = sl2_fusion_oracle(2);
  CHECK(std::abs(fpdim_category(r, std::vector<int>{0, 2}) - 2.0) < 1e-9);
  CHECK_THROWS_AS(fpdim_category(r, std::vector<int>{7}), UnknownLabel);
}

TEST_CASE("subring_closure") {
  FusionRing r = sl2_fusion_oracle(2);
  CHECK(subring_closure(r, {2}) == std::vector<int>{0, 2});
  CHECK(subring_closure(r, {1}) == std::vector<int>{0, 1, 2});
  CHECK(subring_closure(r, {}) == std::vector<int>{0});

  SUBCASE("idempotent and monotone") {
    for (int k : {2, 3, 4, 5}) {
      FusionRing ring = sl2_fusion_oracle(k);
      for (int seed = 0; seed <= k; ++seed) {
        std::vector<int> once = subring_closure(ring, {seed});
        CHECK(subring_closure(ring, once) == once);
        std::vector<int> bigger = subring_closure(ring, {seed, k});
        CHECK(std::includes(bigger.begin(), bigger.end(), once.begin(), once.end()));
      }
    }
  }
}

TEST_CASE("deligne_product") {
  SUBCASE("trivial factor gives a relabeled copy") {
    FusionRing r = sl2_fusion_oracle(3);
    FusionRing p = deligne_product(trivial_ring(), r);
    CHECK(p.size() == r.size());
    CHECK(p.unit() == r.unit());
    CHECK(p.duals() == r.duals());
    CHECK(p.tensor() == r.tensor());
  }
  SUBCASE("two pointed factors give the product group") {
    FusionRing z2 = sl2_fusion_oracle(1);
    FusionRing p = deligne_product(z2, z2);
    CHECK(p.size() == 4);
    CHECK(validate_ring(p).overall());
    for (int a = 0; a < 4; ++a) {
      CHECK(p.fuse(a, a) == std::vector<FusedTerm>{{0, 1}});  // every element an involution
      CHECK(std::abs(fpdim_object(p, a) - 1.0) < 1e-9);
    }
  }
  SUBCASE("object dimensions multiply") {
    FusionRing r = sl2_fusion_oracle(2);
    FusionRing p = deligne_product(r, r);
    int pair11 = 1 * r.size() + 1;
    CHECK(std::abs(fpdim_object(p, pair11) - 2.0) < 1e-9);
  }
  SUBCASE("category dimension multiplies") {
    for (auto [k1, k2] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 3}, {3, 4}}) {
      FusionRing r1 = sl2_fusion_oracle(k1), r2 = sl2_fusion_oracle(k2);
      double lhs = fpdim_category(deligne_product(r1, r2));
      CHECK(std::abs(lhs - fpdim_category(r1) * fpdim_category(r2)) < 1e-9);
    }
  }
}
