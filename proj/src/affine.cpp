#include "mirrorcat/affine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>

#include "mirrorcat/errors.hpp"

namespace mirrorcat {

namespace {

double snap(double x, double eps) { return std::abs(x) < eps ? 0.0 : x; }

// All dominant weights (lambda_1..lambda_{n-1}) with sum <= k, lexicographic,
// vacuum first.
std::vector<std::vector<int>> dominant_weights(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n - 1, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(0, k);
  return out;
}

// Partition coordinates l_i = sum_{j >= i} lambda_j, length n with l_n = 0.
std::vector<long long> partition_coords(const std::vector<int>& lambda, int n) {
  std::vector<long long> l(n, 0);
  for (int i = n - 2; i >= 0; --i) l[i] = l[i + 1] + lambda[i];
  return l;
}

std::string weight_name(const std::vector<int>& lambda) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (i) os << ",";
    os << lambda[i];
  }
  os << ")";
  return os.str();
}

// Inner product on the sl_n weight space via R^n representatives:
// (x, y) = sum x_i y_i - (sum x)(sum y)/n.
Rational weight_inner(const std::vector<long long>& x, const std::vector<long long>& y, int n) {
  long long dot = 0, sx = 0, sy = 0;
  for (int i = 0; i < n; ++i) {
    dot += x[i] * y[i];
    sx += x[i];
    sy += y[i];
  }
  return Rational(dot * n - sx * sy, n);
}

struct PermTable {
  std::vector<std::vector<int>> perms;
  std::vector<int> sign;
};

PermTable all_permutations(int n) {
  PermTable t;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    t.perms.push_back(p);
    t.sign.push_back(inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(p.begin(), p.end()));
  return t;
}

}  // namespace

ModularData sl2_modular(int k, const Tolerances& tol) {
  if (k < 1) throw InvalidLevel("sl2 level must be >= 1, got " + std::to_string(k));
  const int n = k + 1;
  const int kappa = k + 2;
  ModularData md;
  md.unit = 0;
  md.c = Rational(3LL * k, kappa);
  for (int l = 0; l < n; ++l) {
    md.labels.push_back("l" + std::to_string(l));
    md.h.push_back(Rational(static_cast<long long>(l) * (l + 2), 4LL * kappa));
  }
  const double norm = std::sqrt(2.0 / kappa);
  md.S.assign(n, std::vector<Complex>(n));
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m) {
      long long arg = static_cast<long long>(l + 1) * (m + 1) % (2LL * kappa);
      double value = norm * std::sin(std::numbers::pi * static_cast<double>(arg) / kappa);
      md.S[l][m] = Complex{snap(value, tol.snap), 0.0};
    }
  return md;
}

ModularData sln_modular(int n, int k, const Tolerances& tol) {
  if (n < 2 || n > 8) throw InvalidRank("sl_n rank parameter must satisfy 2 <= n <= 8, got " + std::to_string(n));
  if (k < 1) throw InvalidLevel("level must be >= 1, got " + std::to_string(k));

  const long long kappa = k + n;
  const auto weights = dominant_weights(n, k);
  const int count = static_cast<int>(weights.size());

  ModularData md;
  md.unit = 0;
  md.c = Rational(static_cast<long long>(k) * (static_cast<long long>(n) * n - 1), kappa);

  std::vector<std::vector<long long>> shifted(count);  // l(lambda) + (n-1, ..., 0)
  std::vector<long long> shifted_sum(count);
  for (int i = 0; i < count; ++i) {
    md.labels.push_back(weight_name(weights[i]));
    std::vector<long long> l = partition_coords(weights[i], n);
    // h = (lambda, lambda + 2 rho) / (2 kappa), all exact
    std::vector<long long> y(n);
    for (int j = 0; j < n; ++j) y[j] = l[j] + 2LL * (n - 1 - j);
    md.h.push_back(weight_inner(l, y, n) / Rational(2 * kappa));
    for (int j = 0; j < n; ++j) l[j] += n - 1 - j;
    shifted_sum[i] = std::accumulate(l.begin(), l.end(), 0LL);
    shifted[i] = std::move(l);
  }

  // Phase lookup e^{-2 pi i r / kappa} for the alternating sum.
  std::vector<Complex> phase(kappa);
  for (long long r = 0; r < kappa; ++r) {
    double angle = -2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(kappa);
    phase[r] = Complex{std::cos(angle), std::sin(angle)};
  }

  const PermTable table = all_permutations(n);
  const double magnitude = 1.0 / std::sqrt(static_cast<double>(n) * std::pow(static_cast<double>(kappa), n - 1));

  md.S.assign(count, std::vector<Complex>(count));
  std::vector<long long> cross(static_cast<size_t>(n) * n);
  for (int i = 0; i < count; ++i)
    for (int j = i; j < count; ++j) {
      const auto& a = shifted[i];
      const auto& b = shifted[j];
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) cross[static_cast<size_t>(p) * n + q] = a[p] * b[q] % kappa;

      Complex det{0, 0};
      for (size_t w = 0; w < table.perms.size(); ++w) {
        long long m = 0;
        for (int p = 0; p < n; ++p) m += cross[static_cast<size_t>(p) * n + table.perms[w][p]];
        det += static_cast<double>(table.sign[w]) * phase[m % kappa];
      }

      // global phase: quarter turns from i^{n(n-1)/2} plus the trace
      // correction (sum a)(sum b)/(n kappa), both exact in turns
      Rational turns = (Rational(static_cast<long long>(n) * (n - 1), 8) +
                        Rational(shifted_sum[i] * shifted_sum[j], static_cast<long long>(n) * kappa))
                           .mod_one();
      double angle = 2.0 * std::numbers::pi * turns.to_double();
      Complex value = det * Complex{std::cos(angle), std::sin(angle)} * magnitude;
      value = Complex{snap(value.real(), tol.snap), snap(value.imag(), tol.snap)};
      md.S[i][j] = value;
      md.S[j][i] = value;
    }
  return md;
}

FusionRing sl2_fusion_oracle(int k) {
  if (k < 1) throw InvalidLevel("sl2 level must be >= 1, got " + std::to_string(k));
  const int n = k + 1;
  std::vector<std::string> labels;
  for (int l = 0; l < n; ++l) labels.push_back("l" + std::to_string(l));
  std::vector<int> dual(n);
  std::iota(dual.begin(), dual.end(), 0);  // every object self-dual
  FusionTensor tensor;
  for (int l1 = 0; l1 < n; ++l1)
    for (int l2 = 0; l2 < n; ++l2) {
      int lo = std::abs(l1 - l2);
      int hi = std::min(l1 + l2, 2 * k - l1 - l2);
      for (int l3 = lo; l3 <= hi; l3 += 2) tensor[{l1, l2, l3}] = 1;
    }
  return FusionRing(std::move(labels), 0, std::move(dual), std::move(tensor));
}

}  // namespace mirrorcat
