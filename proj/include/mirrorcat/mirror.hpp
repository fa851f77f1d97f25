#pragma once

#include "mirrorcat/branching.hpp"

namespace mirrorcat {

// Extension V ⊕ ⊕_i m_i M^i of one side of a branching, described by the
// multiplicity vector m over that side's labels. `side` is 1 or 2.
struct ExtensionSpec {
  int side = 1;
  std::map<int, Mult> m;
  bool simple = true;  // declared by the user; no ring-level test
};

// Mirror image of an extension: multiplicities over the other side's labels.
struct MirrorResult {
  std::map<int, Mult> m_prime;
  std::vector<std::pair<int, int>> tau_used;
  CheckReport report;
  bool simple = true;
};

// Checks an extension spec against a validated branching:
//   unit_multiplicity, support_in_branching, weight_integrality,
//   dual_closure, dimension_bound, and fusion closure of the extension
//   support (warning only).
CheckReport check_extension(const BranchingMatrix& z, const ExtensionSpec& ext, const Tolerances& tol = {});

// Transports a side-1 extension through tau and duals: m'_{dual(tau(i))} =
// m_i. Requires check_extension to pass (hard failures throw
// PreconditionError; warnings do not block). The result report records the
// weight integrality of every constituent (exact), preservation of the total
// dimension, and that the mirrored spec itself passes check_extension.
MirrorResult mirror_extend(const BranchingMatrix& z, const ExtensionSpec& ext, const Tolerances& tol = {});

// True when mirroring back through the transposed-dualized branching
// reproduces the multiplicity vector exactly.
bool mirror_involution(const BranchingMatrix& z, const ExtensionSpec& ext, const Tolerances& tol = {});

}  // namespace mirrorcat
