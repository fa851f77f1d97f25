#pragma once

#include "mirrorcat/fusion_ring.hpp"
#include "mirrorcat/modular_data.hpp"

namespace mirrorcat {

// Modular data of the level-k sl2 WZW category. Labels l0..lk in doubled-spin
// convention; S and the exact weights/central charge come from the standard
// closed forms. Throws InvalidLevel for k < 1.
ModularData sl2_modular(int k, const Tolerances& tol = {});

// Modular data of the level-k sl_n WZW category, 2 <= n <= 8. Labels are
// Dynkin-label tuples enumerated lexicographically with the vacuum first.
// The S-matrix is the alternating Weyl-group sum over permutations, with
// exact integer phase bookkeeping and entries below tol.snap flushed to 0.
ModularData sln_modular(int n, int k, const Tolerances& tol = {});

// Independent fusion oracle for sl2 level k: the truncated Clebsch-Gordan
// rule, built without any S-matrix.
FusionRing sl2_fusion_oracle(int k);

}  // namespace mirrorcat
