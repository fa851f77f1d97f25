#pragma once

namespace mirrorcat {

// One knob per numeric regime. `check` guards every real-valued invariant
// comparison, `verlinde` is the rounding window for fusion coefficients,
// `snap` flushes generator dust in S-matrices to exact zero.
struct Tolerances {
  double check = 1e-9;
  double verlinde = 1e-6;
  double snap = 1e-13;
  double power_iter = 1e-12;
  int power_iter_cap = 10000;
};

}  // namespace mirrorcat
