#include "mirrorcat/fusion_ring.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "mirrorcat/errors.hpp"

namespace mirrorcat {

namespace {

std::string triple_str(const FusionRing& r, int a, int b, int c) {
  std::ostringstream os;
  os << "(" << r.label_name(a) << "," << r.label_name(b) << "," << r.label_name(c) << ")";
  return os.str();
}

}  // namespace

FusionRing::FusionRing(std::vector<std::string> labels, int unit, std::vector<int> dual, FusionTensor tensor)
    : labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)), tensor_(std::move(tensor)) {
  const int n = size();
  if (n == 0) throw InvalidInput("fusion ring with no labels");
  if (unit_ < 0 || unit_ >= n) throw InvalidInput("unit index out of range");
  if (static_cast<int>(dual_.size()) != n) throw InvalidInput("dual map size mismatch");
  for (int d : dual_)
    if (d < 0 || d >= n) throw InvalidInput("dual index out of range");
  for (const auto& [key, mult] : tensor_) {
    for (int idx : key)
      if (idx < 0 || idx >= n) throw InvalidInput("fusion tensor index out of range");
    if (mult < 0) throw InvalidInput("negative fusion multiplicity");
  }
  std::erase_if(tensor_, [](const auto& kv) { return kv.second == 0; });
}

const std::string& FusionRing::label_name(int a) const {
  check_label(a);
  return labels_[a];
}

int FusionRing::dual(int a) const {
  check_label(a);
  return dual_[a];
}

Mult FusionRing::N(int a, int b, int c) const {
  auto it = tensor_.find({a, b, c});
  return it == tensor_.end() ? 0 : it->second;
}

void FusionRing::check_label(int a) const {
  if (a < 0 || a >= size()) throw UnknownLabel("label index " + std::to_string(a) + " out of range");
}

std::vector<FusedTerm> FusionRing::fuse(int a, int b) const {
  check_label(a);
  check_label(b);
  std::vector<FusedTerm> out;
  auto lo = tensor_.lower_bound({a, b, 0});
  auto hi = tensor_.upper_bound({a, b, size()});
  for (auto it = lo; it != hi; ++it) out.push_back({(*it).first[2], (*it).second});
  return out;
}

std::vector<Mult> FusionRing::fusion_matrix(int a) const {
  check_label(a);
  const int n = size();
  std::vector<Mult> m(static_cast<size_t>(n) * n, 0);
  auto lo = tensor_.lower_bound({a, 0, 0});
  auto hi = tensor_.upper_bound({a, n, 0});
  for (auto it = lo; it != hi; ++it) m[static_cast<size_t>((*it).first[1]) * n + (*it).first[2]] = (*it).second;
  return m;
}

std::vector<int> infer_duals(const FusionTensor& tensor, int unit, int n_labels) {
  std::vector<int> dual(n_labels, -1);
  for (int a = 0; a < n_labels; ++a) {
    for (int b = 0; b < n_labels; ++b) {
      auto it = tensor.find({a, b, unit});
      if (it == tensor.end() || it->second == 0) continue;
      if (it->second > 1)
        throw DualityError("label " + std::to_string(a) + " pairs with " + std::to_string(b) +
                           " into the unit with multiplicity " + std::to_string(it->second));
      if (dual[a] != -1)
        throw DualityError("label " + std::to_string(a) + " has several duality partners (" +
                           std::to_string(dual[a]) + " and " + std::to_string(b) + ")");
      dual[a] = b;
    }
    if (dual[a] == -1) throw DualityError("label " + std::to_string(a) + " has no duality partner");
  }
  for (int a = 0; a < n_labels; ++a)
    if (dual[dual[a]] != a)
      throw DualityError("duality pairing is not an involution at label " + std::to_string(a));
  return dual;
}

CheckReport validate_ring(const FusionRing& ring, const Tolerances&) {
  const int n = ring.size();
  const int u = ring.unit();
  CheckReport rep;

  // unit acts as a two-sided identity
  {
    std::string bad;
    for (int a = 0; a < n && bad.empty(); ++a)
      for (int b = 0; b < n; ++b) {
        Mult want = (a == b) ? 1 : 0;
        if (ring.N(u, a, b) != want || ring.N(a, u, b) != want) {
          bad = "unit row/column wrong at " + triple_str(ring, a, a, b);
          break;
        }
      }
    rep.add("ring.unit_axiom", bad.empty(), bad);
  }

  // dual is an involution fixing the unit
  {
    std::string bad;
    if (ring.dual(u) != u) bad = "dual(unit) != unit";
    for (int a = 0; a < n && bad.empty(); ++a)
      if (ring.dual(ring.dual(a)) != a) bad = "dual not an involution at " + ring.label_name(a);
    rep.add("ring.dual_involution", bad.empty(), bad);
  }

  // N_{ab}^{unit} = 1 exactly when b is the dual of a
  {
    std::string bad;
    for (int a = 0; a < n && bad.empty(); ++a)
      for (int b = 0; b < n; ++b) {
        Mult want = (b == ring.dual(a)) ? 1 : 0;
        if (ring.N(a, b, u) != want) {
          bad = "pairing into unit wrong at " + triple_str(ring, a, b, u);
          break;
        }
      }
    rep.add("ring.duality_pairing", bad.empty(), bad);
  }

  // associativity: sum_e N_{ab}^e N_{ec}^d = sum_f N_{bc}^f N_{af}^d
  {
    std::string bad;
    std::vector<Mult> lhs(n), rhs(n);
    for (int a = 0; a < n && bad.empty(); ++a)
      for (int b = 0; b < n && bad.empty(); ++b) {
        auto ab = ring.fuse(a, b);
        for (int c = 0; c < n && bad.empty(); ++c) {
          std::fill(lhs.begin(), lhs.end(), 0);
          std::fill(rhs.begin(), rhs.end(), 0);
          for (const auto& [e, m1] : ab)
            for (const auto& [d, m2] : ring.fuse(e, c)) lhs[d] += m1 * m2;
          for (const auto& [f, m1] : ring.fuse(b, c))
            for (const auto& [d, m2] : ring.fuse(a, f)) rhs[d] += m1 * m2;
          for (int d = 0; d < n; ++d)
            if (lhs[d] != rhs[d]) {
              bad = "associativity fails at (" + ring.label_name(a) + "," + ring.label_name(b) + "," +
                    ring.label_name(c) + ") -> " + ring.label_name(d);
              break;
            }
        }
      }
    rep.add("ring.associativity", bad.empty(), bad);
  }

  // commutativity
  {
    std::string bad;
    for (const auto& [key, mult] : ring.tensor()) {
      if (ring.N(key[1], key[0], key[2]) != mult) {
        bad = "N differs from its transpose at " + triple_str(ring, key[0], key[1], key[2]);
        break;
      }
    }
    rep.add("ring.commutativity", bad.empty(), bad);
  }

  // invariance under taking duals of all three slots
  {
    std::string bad;
    for (const auto& [key, mult] : ring.tensor()) {
      if (ring.N(ring.dual(key[0]), ring.dual(key[1]), ring.dual(key[2])) != mult) {
        bad = "dual symmetry fails at " + triple_str(ring, key[0], key[1], key[2]);
        break;
      }
    }
    rep.add("ring.dual_symmetry", bad.empty(), bad);
  }

  // Frobenius reciprocity: N_{ab}^c = N_{a'c}^b = N_{cb'}^a
  {
    std::string bad;
    for (int a = 0; a < n && bad.empty(); ++a)
      for (int b = 0; b < n && bad.empty(); ++b)
        for (int c = 0; c < n; ++c) {
          Mult v = ring.N(a, b, c);
          if (ring.N(ring.dual(a), c, b) != v || ring.N(c, ring.dual(b), a) != v) {
            bad = "Frobenius reciprocity fails at " + triple_str(ring, a, b, c);
            break;
          }
        }
    rep.add("ring.frobenius_reciprocity", bad.empty(), bad);
  }

  return rep;
}

double fpdim_object(const FusionRing& ring, int a, const Tolerances& tol) {
  ring.check_label(a);
  const int n = ring.size();
  const std::vector<Mult> m = ring.fusion_matrix(a);

  auto matvec = [&](const std::vector<double>& v, std::vector<double>& w) {
    for (int b = 0; b < n; ++b) {
      double acc = 0;
      const Mult* row = m.data() + static_cast<size_t>(b) * n;
      for (int c = 0; c < n; ++c) acc += static_cast<double>(row[c]) * v[c];
      w[b] = acc;
    }
  };

  std::vector<double> v(n, 1.0), w(n, 0.0);
  double prev = -1.0;
  int stalled = 0;
  for (int iter = 0; iter < tol.power_iter_cap; ++iter) {
    matvec(v, w);
    double num = std::inner_product(w.begin(), w.end(), v.begin(), 0.0);
    double den = std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
    double rayleigh = num / den;
    // A stationary Rayleigh quotient alone is not enough: on periodic
    // matrices the iterates cycle through directions with identical
    // quotients. Demand that v is actually close to an eigenvector, and
    // hand persistently stalled iterations to the dense solver early.
    if (iter > 0 && std::abs(rayleigh - prev) < tol.power_iter) {
      double residual = 0.0;
      for (int b = 0; b < n; ++b) residual = std::max(residual, std::abs(w[b] - rayleigh * v[b]));
      double scale = std::max(1.0, std::abs(rayleigh)) *
                     std::max(1.0, *std::max_element(v.begin(), v.end(),
                                                     [](double x, double y) { return std::abs(x) < std::abs(y); }));
      if (residual < 10.0 * tol.power_iter * scale) return rayleigh;
      if (++stalled > 50) break;
    } else {
      stalled = 0;
    }
    prev = rayleigh;
    double norm = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
    if (norm == 0.0) break;  // nilpotent direction; let the dense solver decide
    for (int b = 0; b < n; ++b) v[b] = w[b] / norm;
  }

  // Periodic fusion matrices cycle instead of converging; the spectral
  // radius of the small dense matrix settles those.
  Eigen::MatrixXd dense(n, n);
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) dense(b, c) = static_cast<double>(m[static_cast<size_t>(b) * n + c]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(dense, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("eigenvalue computation failed for fusion matrix of " + ring.label_name(a));
  double radius = 0.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(solver.eigenvalues()[i]));
  return radius;
}

double fpdim_category(const FusionRing& ring, const std::optional<std::vector<int>>& subset,
                      const Tolerances& tol) {
  std::vector<int> labels;
  if (subset) {
    labels = *subset;
    for (int a : labels) ring.check_label(a);
  } else {
    labels.resize(ring.size());
    std::iota(labels.begin(), labels.end(), 0);
  }
  double total = 0.0;
  for (int a : labels) {
    double d = fpdim_object(ring, a, tol);
    total += d * d;
  }
  return total;
}

std::vector<int> subring_closure(const FusionRing& ring, const std::vector<int>& seeds) {
  std::set<int> closed;
  closed.insert(ring.unit());
  for (int s : seeds) {
    ring.check_label(s);
    closed.insert(s);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<int> next = closed;
    for (int a : closed) {
      if (next.insert(ring.dual(a)).second) grew = true;
      for (int b : closed)
        for (const auto& t : ring.fuse(a, b))
          if (next.insert(t.label).second) grew = true;
    }
    closed.swap(next);
  }
  return {closed.begin(), closed.end()};
}

FusionRing deligne_product(const FusionRing& r1, const FusionRing& r2) {
  const int n1 = r1.size(), n2 = r2.size();
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n1) * n2);
  for (int a = 0; a < n1; ++a)
    for (int x = 0; x < n2; ++x) labels.push_back("(" + r1.label_name(a) + "," + r2.label_name(x) + ")");

  std::vector<int> dual(static_cast<size_t>(n1) * n2);
  for (int a = 0; a < n1; ++a)
    for (int x = 0; x < n2; ++x) dual[static_cast<size_t>(a) * n2 + x] = r1.dual(a) * n2 + r2.dual(x);

  FusionTensor tensor;
  for (const auto& [k1, m1] : r1.tensor())
    for (const auto& [k2, m2] : r2.tensor())
      tensor[{k1[0] * n2 + k2[0], k1[1] * n2 + k2[1], k1[2] * n2 + k2[2]}] = m1 * m2;

  int unit = r1.unit() * n2 + r2.unit();
  return FusionRing(std::move(labels), unit, std::move(dual), std::move(tensor));
}

}  // namespace mirrorcat
