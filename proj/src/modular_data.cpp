#include "mirrorcat/modular_data.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mirrorcat/errors.hpp"

namespace mirrorcat {

namespace {

void check_shape(const ModularData& md) {
  const size_t n = md.labels.size();
  if (n == 0) throw ShapeError("modular data with no labels");
  if (md.unit < 0 || md.unit >= static_cast<int>(n)) throw ShapeError("unit index out of range");
  if (md.S.size() != n) throw ShapeError("S has " + std::to_string(md.S.size()) + " rows, expected " + std::to_string(n));
  for (const auto& row : md.S)
    if (row.size() != n) throw ShapeError("S is not square");
  if (md.h.size() != n) throw ShapeError("h has " + std::to_string(md.h.size()) + " entries, expected " + std::to_string(n));
}

std::vector<std::vector<Complex>> s_squared(const ModularData& md) {
  const int n = md.size();
  std::vector<std::vector<Complex>> p(n, std::vector<Complex>(n, Complex{0, 0}));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) {
      Complex sax = md.S[a][x];
      if (sax == Complex{0, 0}) continue;
      for (int b = 0; b < n; ++b) p[a][b] += sax * md.S[x][b];
    }
  return p;
}

// Reads the permutation out of a 0/1-within-tolerance matrix; empty result
// with a message otherwise.
std::vector<int> permutation_of(const std::vector<std::vector<Complex>>& p, double tol, std::string* why) {
  const int n = static_cast<int>(p.size());
  std::vector<int> perm(n, -1);
  std::vector<bool> hit(n, false);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      double d1 = std::abs(p[a][b] - Complex{1, 0});
      double d0 = std::abs(p[a][b]);
      if (d1 < tol) {
        if (perm[a] != -1) {
          *why = "row " + std::to_string(a) + " has two unit entries";
          return {};
        }
        perm[a] = b;
      } else if (d0 >= tol) {
        std::ostringstream os;
        os << "entry (" << a << "," << b << ") = " << p[a][b] << " is neither 0 nor 1";
        *why = os.str();
        return {};
      }
    }
    if (perm[a] == -1) {
      *why = "row " + std::to_string(a) + " has no unit entry";
      return {};
    }
    if (hit[perm[a]]) {
      *why = "column " + std::to_string(perm[a]) + " hit twice";
      return {};
    }
    hit[perm[a]] = true;
  }
  return perm;
}

struct VerlindeScan {
  FusionTensor tensor;
  double worst_residual = 0.0;
  std::array<int, 3> worst_triple{0, 0, 0};
  bool negative = false;
};

VerlindeScan verlinde_scan(const ModularData& md) {
  const int n = md.size();
  VerlindeScan out;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Complex acc{0, 0};
        for (int x = 0; x < n; ++x) acc += md.S[a][x] * md.S[b][x] * std::conj(md.S[c][x]) / md.S[md.unit][x];
        double rounded = std::round(acc.real());
        double residual = std::abs(acc - Complex{rounded, 0});
        if (residual > out.worst_residual) {
          out.worst_residual = residual;
          out.worst_triple = {a, b, c};
        }
        if (rounded < 0.0) {
          out.negative = true;
          out.worst_triple = {a, b, c};
        }
        auto mult = static_cast<Mult>(rounded);
        if (mult != 0) {
          out.tensor[{a, b, c}] = mult;
          if (a != b) out.tensor[{b, a, c}] = mult;
        }
      }
  return out;
}

}  // namespace

void ModularData::check_label(int a) const {
  if (a < 0 || a >= size()) throw UnknownLabel("label index " + std::to_string(a) + " out of range");
}

CheckReport validate_modular(const ModularData& md, const Tolerances& tol) {
  check_shape(md);
  const int n = md.size();
  CheckReport rep;

  {
    double worst = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) worst = std::max(worst, std::abs(md.S[a][b] - md.S[b][a]));
    rep.add("modular.symmetry", worst < tol.check, "max |S - S^T| residual " + std::to_string(worst));
  }

  {
    double worst = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Complex acc{0, 0};
        for (int x = 0; x < n; ++x) acc += md.S[a][x] * std::conj(md.S[b][x]);
        acc -= (a == b) ? Complex{1, 0} : Complex{0, 0};
        worst = std::max(worst, std::abs(acc));
      }
    rep.add("modular.unitarity", worst < tol.check, "max |S S^dagger - I| residual " + std::to_string(worst));
  }

  {
    std::string bad;
    for (int a = 0; a < n; ++a) {
      const Complex& s = md.S[md.unit][a];
      if (!(s.real() > tol.check) || std::abs(s.imag()) >= tol.check) {
        std::ostringstream os;
        os << "S[unit][" << md.labels[a] << "] = " << s << " is not positive real";
        bad = os.str();
        break;
      }
    }
    rep.add("modular.unit_row_positive", bad.empty(), bad);
  }

  {
    std::string why;
    std::vector<int> perm = permutation_of(s_squared(md), tol.check, &why);
    if (perm.empty()) {
      rep.add("modular.s_squared_permutation", false, "S^2 is not a permutation matrix: " + why);
    } else if (perm[md.unit] != md.unit) {
      rep.add("modular.s_squared_permutation", false, "S^2 permutation moves the unit");
    } else {
      bool involution = true;
      for (int a = 0; a < n; ++a) involution = involution && perm[perm[a]] == a;
      rep.add("modular.s_squared_permutation", involution, "S^2 permutation is not an involution");
    }
  }

  rep.add("modular.vacuum_weight", md.h[md.unit] == Rational(0),
          "h[unit] = " + md.h[md.unit].str() + ", expected 0");

  {
    VerlindeScan scan = verlinde_scan(md);
    std::ostringstream os;
    os << "worst residual " << scan.worst_residual << " at (" << scan.worst_triple[0] << ","
       << scan.worst_triple[1] << "," << scan.worst_triple[2] << ")";
    if (scan.negative) os << "; negative coefficient";
    rep.add("modular.verlinde_integrality", !scan.negative && scan.worst_residual < tol.verlinde, os.str());
  }

  return rep;
}

std::vector<int> dual_permutation(const ModularData& md, const Tolerances& tol) {
  check_shape(md);
  std::string why;
  std::vector<int> perm = permutation_of(s_squared(md), tol.check, &why);
  if (perm.empty()) throw InvalidInput("S^2 is not a permutation matrix: " + why);
  if (perm[md.unit] != md.unit) throw InvalidInput("S^2 permutation moves the unit");
  for (int a = 0; a < md.size(); ++a)
    if (perm[perm[a]] != a) throw InvalidInput("S^2 permutation is not an involution");
  return perm;
}

FusionRing verlinde_fusion(const ModularData& md, const Tolerances& tol) {
  check_shape(md);
  std::vector<int> dual = dual_permutation(md, tol);
  VerlindeScan scan = verlinde_scan(md);
  if (scan.negative || scan.worst_residual > tol.verlinde) {
    std::ostringstream os;
    os << "Verlinde coefficient at (" << md.labels[scan.worst_triple[0]] << "," << md.labels[scan.worst_triple[1]]
       << "," << md.labels[scan.worst_triple[2]] << ") ";
    if (scan.negative)
      os << "is negative";
    else
      os << "misses an integer by " << scan.worst_residual;
    os << "; input is not genuine modular data";
    throw IntegralityError(os.str(), scan.worst_triple, scan.worst_residual);
  }
  return FusionRing(md.labels, md.unit, std::move(dual), std::move(scan.tensor));
}

std::vector<double> quantum_dims(const ModularData& md, const Tolerances& tol, CheckReport* warnings) {
  check_shape(md);
  const int n = md.size();
  std::vector<double> dims(n);
  for (int a = 0; a < n; ++a) dims[a] = (md.S[md.unit][a] / md.S[md.unit][md.unit]).real();
  if (warnings != nullptr) {
    FusionRing ring = verlinde_fusion(md, tol);
    double worst = 0.0;
    int worst_label = md.unit;
    for (int a = 0; a < n; ++a) {
      double diff = std::abs(dims[a] - fpdim_object(ring, a, tol));
      if (diff > worst) {
        worst = diff;
        worst_label = a;
      }
    }
    if (worst >= tol.check)
      warnings->add("modular.dim_consistency", CheckStatus::warn,
                    "S-matrix dimension and Frobenius-Perron dimension differ by " + std::to_string(worst) +
                        " at " + md.labels[worst_label]);
    else
      warnings->add("modular.dim_consistency", CheckStatus::pass, "");
  }
  return dims;
}

ModularData deligne_modular(const ModularData& md1, const ModularData& md2) {
  check_shape(md1);
  check_shape(md2);
  const int n1 = md1.size(), n2 = md2.size();
  ModularData out;
  out.labels.reserve(static_cast<size_t>(n1) * n2);
  out.h.reserve(static_cast<size_t>(n1) * n2);
  for (int a = 0; a < n1; ++a)
    for (int x = 0; x < n2; ++x) {
      out.labels.push_back("(" + md1.labels[a] + "," + md2.labels[x] + ")");
      out.h.push_back(md1.h[a] + md2.h[x]);
    }
  out.unit = md1.unit * n2 + md2.unit;
  out.c = md1.c + md2.c;
  out.S.assign(static_cast<size_t>(n1) * n2, std::vector<Complex>(static_cast<size_t>(n1) * n2));
  for (int a = 0; a < n1; ++a)
    for (int x = 0; x < n2; ++x)
      for (int b = 0; b < n1; ++b)
        for (int y = 0; y < n2; ++y) out.S[a * n2 + x][b * n2 + y] = md1.S[a][b] * md2.S[x][y];
  return out;
}

TwistIntegrality twist_integral(const ModularData& md, const std::vector<int>& subset) {
  TwistIntegrality out;
  for (int a : subset) {
    md.check_label(a);
    if (!md.h[a].is_integer()) {
      out.all_integral = false;
      out.offenders.push_back(a);
    }
  }
  return out;
}

}  // namespace mirrorcat
