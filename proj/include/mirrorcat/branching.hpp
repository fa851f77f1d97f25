#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "mirrorcat/category.hpp"

namespace mirrorcat {

// Hypotheses that have no finite test at this level; declared in input files
// and carried through unchanged.
struct Hypotheses {
  bool double_commutant = true;
  bool simple_self_dual_u = true;
};

// Decomposition multiplicities Z_{i,j} of an extension of cat1 x cat2,
// together with the support bijection tau once validation has succeeded.
// tau always contains the (unit, unit) pair.
struct BranchingMatrix {
  std::shared_ptr<const ValidatedCategory> cat1;
  std::shared_ptr<const ValidatedCategory> cat2;
  std::map<std::pair<int, int>, Mult> entries;
  Hypotheses hypotheses;

  bool validated = false;
  std::vector<std::pair<int, int>> tau;  // set by validate_branching on success

  Mult z(int i, int j) const;
  // Side supports including the units, sorted.
  std::vector<int> support1() const;
  std::vector<int> support2() const;
  // tau image of i; throws InvalidInput when i is not in the domain.
  int tau_of(int i) const;
};

// Runs the branching conditions in order:
//   unit_pairing, multiplicity_one, support_bijection, dual_symmetry,
//   weight_integrality, fusion_closure, fusion_rule_match,
//   dimension_balance, global_dimension.
// Later checks that presuppose structure established by an earlier one are
// reported as skipped when that prerequisite failed (weight_integrality needs
// the bijection; fusion_rule_match needs bijection + dual symmetry + closure;
// dimension_balance is derived from the fusion match, global_dimension from
// the balance). Sets `tau` and `validated` when everything passes.
CheckReport validate_branching(BranchingMatrix& z, const Tolerances& tol = {});

// Enumerates candidate supports over pairs with exactly integral weight sums
// and matching dimensions, closed under duals, and keeps those passing
// validate_branching. Deterministic output: sorted by support size, then by
// the pair list. `max_support` caps the number of support pairs including
// (unit, unit). Throws BudgetExceeded when the enumeration visits more than
// `budget` partial assignments.
std::vector<BranchingMatrix> search_branchings(std::shared_ptr<const ValidatedCategory> cat1,
                                               std::shared_ptr<const ValidatedCategory> cat2,
                                               int max_support = -1, const Tolerances& tol = {},
                                               std::int64_t budget = 1'000'000);

// dim Hom_A(A x u, A x v) at ring level for the algebra object with
// multiplicities `algebra`: sum_a n_a N_{a,v}^u. Requires n_unit >= 1.
Mult free_module_hom(const ValidatedCategory& cat, const std::map<int, Mult>& algebra, int u, int v);

// The branching with the two sides swapped and both dualized:
// Z~_{j,i} = Z_{i', j'}. Comes back unvalidated.
BranchingMatrix transpose_dualize(const BranchingMatrix& z);

}  // namespace mirrorcat
