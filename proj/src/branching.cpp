#include "mirrorcat/branching.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "mirrorcat/errors.hpp"

namespace mirrorcat {

namespace {

std::string pair_name(const BranchingMatrix& z, int i, int j) {
  return "(" + z.cat1->md.labels[i] + "," + z.cat2->md.labels[j] + ")";
}

constexpr const char* kSkipNote = "prerequisite check failed";

}  // namespace

Mult BranchingMatrix::z(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::vector<int> BranchingMatrix::support1() const {
  std::set<int> s{cat1->unit()};
  for (const auto& [key, mult] : entries)
    if (mult != 0) s.insert(key.first);
  return {s.begin(), s.end()};
}

std::vector<int> BranchingMatrix::support2() const {
  std::set<int> s{cat2->unit()};
  for (const auto& [key, mult] : entries)
    if (mult != 0) s.insert(key.second);
  return {s.begin(), s.end()};
}

int BranchingMatrix::tau_of(int i) const {
  for (const auto& [a, b] : tau)
    if (a == i) return b;
  throw InvalidInput("label " + std::to_string(i) + " is not in the domain of tau");
}

CheckReport validate_branching(BranchingMatrix& z, const Tolerances& tol) {
  if (!z.cat1 || !z.cat2) throw InvalidInput("branching without categories");
  const ValidatedCategory& c1 = *z.cat1;
  const ValidatedCategory& c2 = *z.cat2;
  const int u1 = c1.unit(), u2 = c2.unit();
  for (const auto& [key, mult] : z.entries) {
    c1.md.check_label(key.first);
    c2.md.check_label(key.second);
    if (mult < 0) throw InvalidInput("negative branching multiplicity at " + pair_name(z, key.first, key.second));
  }

  CheckReport rep;
  z.validated = false;
  z.tau.clear();

  // nonzero cells, unit pair excluded
  std::vector<std::pair<int, int>> cells;
  for (const auto& [key, mult] : z.entries)
    if (mult != 0 && key != std::pair<int, int>{u1, u2}) cells.push_back(key);

  // unit_pairing: Z_{unit,unit} = 1 and no other entry in the unit row/column
  {
    std::string bad;
    if (z.z(u1, u2) != 1) bad = "vacuum pair has multiplicity " + std::to_string(z.z(u1, u2)) + ", expected 1";
    for (const auto& [i, j] : cells) {
      if (i == u1 || j == u2) {
        bad = "unit row/column contains " + pair_name(z, i, j);
        break;
      }
    }
    rep.add("branching.unit_pairing", bad.empty(), bad);
  }

  // multiplicity_one: every nonzero entry equals 1
  {
    std::string bad;
    for (const auto& [key, mult] : z.entries)
      if (mult > 1) {
        bad = pair_name(z, key.first, key.second) + " has multiplicity " + std::to_string(mult);
        break;
      }
    rep.add("branching.multiplicity_one", bad.empty(), bad);
  }

  // support_bijection: at most one support pair per row and per column
  std::vector<std::pair<int, int>> tau{{u1, u2}};
  bool bijective = true;
  {
    std::string bad;
    std::set<int> rows{u1}, cols{u2};
    for (const auto& [i, j] : cells) {
      if (!rows.insert(i).second) {
        bad = "row " + c1.md.labels[i] + " holds two support pairs";
        bijective = false;
        break;
      }
      if (!cols.insert(j).second) {
        bad = "column " + c2.md.labels[j] + " holds two support pairs";
        bijective = false;
        break;
      }
      tau.emplace_back(i, j);
    }
    std::sort(tau.begin(), tau.end());
    rep.add("branching.support_bijection", bijective, bad);
  }

  // dual_symmetry: Z_{i,j} = Z_{i',j'}
  bool dual_ok = true;
  {
    std::string bad;
    for (const auto& [key, mult] : z.entries) {
      if (z.z(c1.dual(key.first), c2.dual(key.second)) != mult) {
        bad = pair_name(z, key.first, key.second) + " and its dual image disagree";
        dual_ok = false;
        break;
      }
    }
    rep.add("branching.dual_symmetry", dual_ok, bad);
  }

  // weight_integrality: h_i + h_{tau(i)} a nonnegative integer, exactly
  if (bijective) {
    std::string bad;
    for (const auto& [i, j] : tau) {
      const Rational& hi = c1.md.h[i];
      const Rational& hj = c2.md.h[j];
      Rational sum = hi + hj;
      if (!hi.is_nonnegative() || !hj.is_nonnegative() || !sum.is_integer()) {
        bad = pair_name(z, i, j) + " has weight sum " + hi.str() + " + " + hj.str() + " = " + sum.str();
        break;
      }
    }
    rep.add("branching.weight_integrality", bad.empty(), bad);
  } else {
    rep.add("branching.weight_integrality", CheckStatus::skip, kSkipNote);
  }

  // fusion_closure: both side supports closed under fusion
  const std::vector<int> side1 = z.support1();
  const std::vector<int> side2 = z.support2();
  bool closed_ok = true;
  {
    std::string bad;
    std::vector<int> closure1 = subring_closure(c1.ring, side1);
    if (closure1 != side1) {
      closed_ok = false;
      std::vector<int> extra;
      std::set_difference(closure1.begin(), closure1.end(), side1.begin(), side1.end(), std::back_inserter(extra));
      bad = "side-1 support not closed; fusion reaches " + c1.md.labels[extra.front()];
    } else {
      std::vector<int> closure2 = subring_closure(c2.ring, side2);
      if (closure2 != side2) {
        closed_ok = false;
        std::vector<int> extra;
        std::set_difference(closure2.begin(), closure2.end(), side2.begin(), side2.end(), std::back_inserter(extra));
        bad = "side-2 support not closed; fusion reaches " + c2.md.labels[extra.front()];
      }
    }
    rep.add("branching.fusion_closure", closed_ok, bad);
  }

  // fusion_rule_match: tau transports the structure constants on all support
  // triples, both in the dualized and the plain form. Needs the bijection,
  // dual compatibility of tau, and closed supports to be meaningful.
  bool fusion_match_ok = bijective && dual_ok && closed_ok;
  if (bijective && dual_ok && closed_ok) {
    std::string bad;
    auto tau_of = [&](int i) {
      for (const auto& [a, b] : tau)
        if (a == i) return b;
      return -1;
    };
    for (int i1 : side1) {
      for (int i2 : side1) {
        for (int i3 : side1) {
          Mult lhs = c1.ring.N(i1, i2, i3);
          int j1 = tau_of(i1), j2 = tau_of(i2), j3 = tau_of(i3);
          Mult dualized = c2.ring.N(c2.dual(j1), c2.dual(j2), c2.dual(j3));
          Mult plain = c2.ring.N(j1, j2, j3);
          if (lhs != dualized || lhs != plain) {
            std::ostringstream os;
            os << "structure constants differ at (" << c1.md.labels[i1] << "," << c1.md.labels[i2] << ","
               << c1.md.labels[i3] << "): " << lhs << " vs " << dualized << " (dualized) / " << plain;
            bad = os.str();
            fusion_match_ok = false;
            break;
          }
        }
        if (!bad.empty()) break;
      }
      if (!bad.empty()) break;
    }
    rep.add("branching.fusion_rule_match", fusion_match_ok, bad);
  } else {
    rep.add("branching.fusion_rule_match", CheckStatus::skip, kSkipNote);
  }

  // dimension_balance: FPdim M^i = FPdim N^{tau(i)} per pair, and the two
  // support-category dimensions agree with the algebra dimension
  // sum_i FPdim M^i FPdim N^{tau(i)}. Derived from the fusion match, so only
  // evaluated once that holds.
  bool balance_ok = fusion_match_ok;
  double dim1 = 0.0, dim2 = 0.0, algebra_dim = 0.0;
  if (fusion_match_ok) {
    std::string bad;
    for (const auto& [i, j] : tau) {
      double diff = std::abs(c1.fpdim[i] - c2.fpdim[j]);
      if (diff >= tol.check && bad.empty()) {
        std::ostringstream os;
        os << pair_name(z, i, j) << " dimensions differ by " << diff;
        bad = os.str();
        balance_ok = false;
      }
      algebra_dim += c1.fpdim[i] * c2.fpdim[j];
    }
    for (int i : side1) dim1 += c1.fpdim[i] * c1.fpdim[i];
    for (int j : side2) dim2 += c2.fpdim[j] * c2.fpdim[j];
    if (bad.empty() && std::abs(dim1 - dim2) >= tol.check) {
      std::ostringstream os;
      os << "support category dimensions differ: " << dim1 << " vs " << dim2;
      bad = os.str();
      balance_ok = false;
    }
    if (bad.empty() && std::abs(dim1 - algebra_dim) >= tol.check) {
      std::ostringstream os;
      os << "algebra dimension " << algebra_dim << " differs from support category dimension " << dim1;
      bad = os.str();
      balance_ok = false;
    }
    rep.add("branching.dimension_balance", balance_ok, bad);
  } else {
    rep.add("branching.dimension_balance", CheckStatus::skip, kSkipNote);
  }

  // global_dimension: dim C = (dim_C A) (dim C_A) on the support
  // subcategories, with dim C_A the common support dimension. Instantiated
  // on top of the balance.
  if (balance_ok) {
    double residual = std::abs(dim1 * dim2 - algebra_dim * dim1);
    std::ostringstream os;
    os << "identity residual " << residual;
    rep.add("branching.global_dimension", residual < tol.check, os.str());
  } else {
    rep.add("branching.global_dimension", CheckStatus::skip, kSkipNote);
  }

  if (rep.overall()) {
    z.validated = true;
    z.tau = std::move(tau);
  }
  return rep;
}

std::vector<BranchingMatrix> search_branchings(std::shared_ptr<const ValidatedCategory> cat1,
                                               std::shared_ptr<const ValidatedCategory> cat2, int max_support,
                                               const Tolerances& tol, std::int64_t budget) {
  if (!cat1 || !cat2) throw InvalidInput("search without categories");
  const ValidatedCategory& c1 = *cat1;
  const ValidatedCategory& c2 = *cat2;
  const int u1 = c1.unit(), u2 = c2.unit();
  if (max_support < 0) max_support = std::min(c1.size(), c2.size());

  // candidate pairs: integral weight sum, matching dimension, no unit mixing
  std::vector<std::pair<int, int>> candidates;
  for (int i = 0; i < c1.size(); ++i) {
    if (i == u1) continue;
    for (int j = 0; j < c2.size(); ++j) {
      if (j == u2) continue;
      const Rational& hi = c1.md.h[i];
      const Rational& hj = c2.md.h[j];
      if (!hi.is_nonnegative() || !hj.is_nonnegative() || !(hi + hj).is_integer()) continue;
      if (std::abs(c1.fpdim[i] - c2.fpdim[j]) >= tol.check) continue;
      candidates.emplace_back(i, j);
    }
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<std::vector<std::pair<int, int>>> supports;
  std::vector<std::pair<int, int>> chosen;
  std::vector<bool> row_used(c1.size(), false), col_used(c2.size(), false);
  std::int64_t visited = 0;

  // lexicographic backtracking over the candidate list; dual closure of the
  // chosen set is enforced at the leaves (the sets are tiny)
  auto recurse = [&](auto&& self, size_t idx) -> void {
    if (++visited > budget)
      throw BudgetExceeded("candidate enumeration exceeded " + std::to_string(budget) + " partial assignments");
    if (idx == candidates.size()) {
      if (static_cast<int>(chosen.size()) + 1 > max_support) return;
      for (const auto& [i, j] : chosen) {
        auto partner = std::pair<int, int>{c1.dual(i), c2.dual(j)};
        if (!std::binary_search(chosen.begin(), chosen.end(), partner)) return;
      }
      supports.push_back(chosen);
      return;
    }
    self(self, idx + 1);  // exclude candidates[idx]
    const auto& [i, j] = candidates[idx];
    if (!row_used[i] && !col_used[j]) {
      row_used[i] = col_used[j] = true;
      chosen.push_back(candidates[idx]);
      self(self, idx + 1);
      chosen.pop_back();
      row_used[i] = col_used[j] = false;
    }
  };
  recurse(recurse, 0);

  std::sort(supports.begin(), supports.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::vector<BranchingMatrix> results;
  for (const auto& support : supports) {
    BranchingMatrix z;
    z.cat1 = cat1;
    z.cat2 = cat2;
    z.entries[{u1, u2}] = 1;
    for (const auto& [i, j] : support) z.entries[{i, j}] = 1;
    CheckReport rep = validate_branching(z, tol);
    if (rep.overall()) results.push_back(std::move(z));
  }
  return results;
}

Mult free_module_hom(const ValidatedCategory& cat, const std::map<int, Mult>& algebra, int u, int v) {
  cat.md.check_label(u);
  cat.md.check_label(v);
  auto unit_it = algebra.find(cat.unit());
  if (unit_it == algebra.end() || unit_it->second < 1)
    throw InvalidInput("algebra object must contain the unit with multiplicity >= 1");
  Mult total = 0;
  for (const auto& [a, mult] : algebra) {
    cat.md.check_label(a);
    if (mult < 0) throw InvalidInput("negative algebra multiplicity");
    total += mult * cat.ring.N(a, v, u);
  }
  return total;
}

BranchingMatrix transpose_dualize(const BranchingMatrix& z) {
  BranchingMatrix out;
  out.cat1 = z.cat2;
  out.cat2 = z.cat1;
  out.hypotheses = z.hypotheses;
  for (const auto& [key, mult] : z.entries)
    out.entries[{z.cat2->dual(key.second), z.cat1->dual(key.first)}] = mult;
  return out;
}

}  // namespace mirrorcat
