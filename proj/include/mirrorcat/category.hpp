#pragma once

#include <memory>

#include "mirrorcat/modular_data.hpp"

namespace mirrorcat {

// Modular data together with everything derived from it once: the validation
// report, the Verlinde ring (which carries the S^2 duals) and per-label
// Frobenius-Perron dimensions. Immutable in normal use; shared between the
// branchings that reference it.
struct ValidatedCategory {
  ModularData md;
  CheckReport modular_report;
  FusionRing ring;
  std::vector<double> fpdim;

  int size() const { return md.size(); }
  int unit() const { return md.unit; }
  int dual(int a) const { return ring.dual(a); }

  // Validates and derives; throws CategoryInvalid when validate_modular
  // fails, naming the first failed check.
  static std::shared_ptr<const ValidatedCategory> make(ModularData md, const Tolerances& tol = {});
};

}  // namespace mirrorcat
