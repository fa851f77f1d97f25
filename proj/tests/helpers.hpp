#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "mirrorcat/fusion_ring.hpp"

namespace testhelp {

// Closed-form quantum dimension for the level-k sl2 category; the reference
// for everything the power iteration computes on those rings.
inline double sl2_qdim(int k, int l) {
  const double kappa = k + 2;
  return std::sin((l + 1) * std::numbers::pi / kappa) / std::sin(std::numbers::pi / kappa);
}

inline mirrorcat::FusionRing make_ring(std::vector<std::string> labels, int unit,
                                       std::vector<std::array<int, 4>> quads) {
  mirrorcat::FusionTensor tensor;
  for (const auto& q : quads) tensor[{q[0], q[1], q[2]}] = q[3];
  std::vector<int> dual = mirrorcat::infer_duals(tensor, unit, static_cast<int>(labels.size()));
  return mirrorcat::FusionRing(std::move(labels), unit, std::move(dual), std::move(tensor));
}

// Group ring of Z/n: a ⊗ b = a+b mod n.
inline mirrorcat::FusionRing cyclic_ring(int n) {
  std::vector<std::string> labels;
  std::vector<std::array<int, 4>> quads;
  for (int a = 0; a < n; ++a) {
    labels.push_back("g" + std::to_string(a));
    for (int b = 0; b < n; ++b) quads.push_back({a, b, (a + b) % n, 1});
  }
  return make_ring(std::move(labels), 0, std::move(quads));
}

inline mirrorcat::FusionRing trivial_ring() { return make_ring({"1"}, 0, {{0, 0, 0, 1}}); }

}  // namespace testhelp
