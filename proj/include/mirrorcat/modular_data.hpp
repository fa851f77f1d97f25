#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mirrorcat/fusion_ring.hpp"
#include "mirrorcat/rational.hpp"
#include "mirrorcat/report.hpp"
#include "mirrorcat/tolerances.hpp"

namespace mirrorcat {

using Complex = std::complex<double>;

// Numerical S-matrix plus exact conformal weights and central charge. The
// twists theta_a = e^{2 pi i h_a} are derived from h on demand, never the
// other way round. Label 0 is the unit unless stated otherwise.
struct ModularData {
  std::vector<std::string> labels;
  int unit = 0;
  std::vector<std::vector<Complex>> S;
  std::vector<Rational> h;
  Rational c;

  int size() const { return static_cast<int>(labels.size()); }
  void check_label(int a) const;  // throws UnknownLabel
};

// Entries: symmetry, unitarity, positivity of the unit row, S^2 permutation,
// vacuum weight, Verlinde integrality. Throws ShapeError when S is not square
// or sizes disagree.
CheckReport validate_modular(const ModularData& md, const Tolerances& tol = {});

// Charge-conjugation permutation read off S^2. Throws InvalidInput when S^2
// is not a permutation matrix within tolerance, when it is not an involution,
// or when it moves the unit.
std::vector<int> dual_permutation(const ModularData& md, const Tolerances& tol = {});

// Fusion ring via N_{ab}^c = sum_x S_ax S_bx conj(S_cx) / S_{unit,x}, every
// value rounded to the nearest integer. Throws IntegralityError when some
// value is farther than tol.verlinde from a nonnegative integer.
FusionRing verlinde_fusion(const ModularData& md, const Tolerances& tol = {});

// d_a = S_{unit,a} / S_{unit,unit}. With `warnings` given, cross-checks the
// values against the Frobenius-Perron dimensions of the Verlinde ring and
// records any mismatch as a warning entry.
std::vector<double> quantum_dims(const ModularData& md, const Tolerances& tol = {},
                                 CheckReport* warnings = nullptr);

// Product data on pair labels: S entrywise Kronecker, weights and central
// charges added exactly.
ModularData deligne_modular(const ModularData& md1, const ModularData& md2);

struct TwistIntegrality {
  bool all_integral = true;
  std::vector<int> offenders;
};

// Exact test h_a in Z for every label in `subset`; no tolerance involved.
TwistIntegrality twist_integral(const ModularData& md, const std::vector<int>& subset);

}  // namespace mirrorcat
