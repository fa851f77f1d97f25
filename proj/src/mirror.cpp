#include "mirrorcat/mirror.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mirrorcat/errors.hpp"

namespace mirrorcat {

namespace {

std::map<int, Mult> normalized(const std::map<int, Mult>& m) {
  std::map<int, Mult> out;
  for (const auto& [label, mult] : m) {
    if (mult < 0) throw InvalidInput("negative extension multiplicity");
    if (mult > 0) out[label] = mult;
  }
  return out;
}

}  // namespace

CheckReport check_extension(const BranchingMatrix& z, const ExtensionSpec& ext, const Tolerances& tol) {
  if (!z.validated) throw PreconditionError("branching has not passed validation");
  if (ext.side != 1 && ext.side != 2) throw InvalidInput("extension side must be 1 or 2");
  const ValidatedCategory& cat = ext.side == 1 ? *z.cat1 : *z.cat2;
  for (const auto& [label, mult] : ext.m) {
    cat.md.check_label(label);
    if (mult < 0) throw InvalidInput("negative extension multiplicity");
  }
  const std::map<int, Mult> m = normalized(ext.m);
  const int unit = cat.unit();
  const std::vector<int> side_support = ext.side == 1 ? z.support1() : z.support2();

  CheckReport rep;

  {
    auto it = m.find(unit);
    Mult got = it == m.end() ? 0 : it->second;
    rep.add("extension.unit_multiplicity", got == 1,
            "unit appears with multiplicity " + std::to_string(got) + ", expected 1");
  }

  {
    std::string bad;
    for (const auto& [label, mult] : m) {
      (void)mult;
      if (!std::binary_search(side_support.begin(), side_support.end(), label)) {
        bad = cat.md.labels[label] + " is not in the branching support on side " + std::to_string(ext.side);
        break;
      }
    }
    rep.add("extension.support_in_branching", bad.empty(), bad);
  }

  {
    std::string bad;
    for (const auto& [label, mult] : m) {
      (void)mult;
      if (!cat.md.h[label].is_integer()) {
        bad = cat.md.labels[label] + " has weight " + cat.md.h[label].str() + ", not an integer";
        break;
      }
    }
    rep.add("extension.weight_integrality", bad.empty(), bad);
  }

  {
    std::string bad;
    for (const auto& [label, mult] : m) {
      auto it = m.find(cat.dual(label));
      Mult dual_mult = it == m.end() ? 0 : it->second;
      if (dual_mult != mult) {
        bad = cat.md.labels[label] + " and its dual carry different multiplicities";
        break;
      }
    }
    rep.add("extension.dual_closure", bad.empty(), bad);
  }

  {
    double algebra_dim = 0.0;
    for (const auto& [label, mult] : m) algebra_dim += static_cast<double>(mult) * cat.fpdim[label];
    double support_dim = 0.0;
    for (int i : side_support) support_dim += cat.fpdim[i] * cat.fpdim[i];
    std::ostringstream os;
    os << "algebra dimension " << algebra_dim << " exceeds support category dimension " << support_dim;
    rep.add("extension.dimension_bound", algebra_dim <= support_dim + tol.check, os.str());
  }

  {
    std::vector<int> m_support;
    for (const auto& [label, mult] : m) {
      (void)mult;
      m_support.push_back(label);
    }
    if (!m_support.empty() && std::binary_search(m_support.begin(), m_support.end(), unit)) {
      std::vector<int> closure = subring_closure(cat.ring, m_support);
      if (closure != m_support) {
        std::vector<int> extra;
        std::set_difference(closure.begin(), closure.end(), m_support.begin(), m_support.end(),
                            std::back_inserter(extra));
        rep.add("extension.fusion_closure", CheckStatus::warn,
                "extension support not closed under fusion; reaches " + cat.md.labels[extra.front()]);
      } else {
        rep.add("extension.fusion_closure", CheckStatus::pass, "");
      }
    } else {
      rep.add("extension.fusion_closure", CheckStatus::warn, "extension support does not contain the unit");
    }
  }

  return rep;
}

MirrorResult mirror_extend(const BranchingMatrix& z, const ExtensionSpec& ext, const Tolerances& tol) {
  if (ext.side != 1) throw InvalidInput("mirror_extend expects an extension on side 1");
  CheckReport pre = check_extension(z, ext, tol);
  if (!pre.overall()) {
    std::string failed;
    for (const auto& e : pre.entries())
      if (e.status == CheckStatus::fail) failed += (failed.empty() ? "" : ", ") + e.id;
    throw PreconditionError("extension failed checks: " + failed);
  }

  const ValidatedCategory& c1 = *z.cat1;
  const ValidatedCategory& c2 = *z.cat2;
  MirrorResult out;
  out.tau_used = z.tau;
  out.simple = ext.simple;

  // constituents are the contragredients of the tau images
  const std::map<int, Mult> m = normalized(ext.m);
  for (const auto& [i, mult] : m) out.m_prime[c2.dual(z.tau_of(i))] = mult;

  {
    std::string bad;
    for (const auto& [j, mult] : out.m_prime) {
      (void)mult;
      if (!c2.md.h[j].is_integer()) {
        bad = c2.md.labels[j] + " has weight " + c2.md.h[j].str() + ", not an integer";
        break;
      }
    }
    out.report.add("mirror.weight_integrality", bad.empty(), bad);
  }

  {
    double before = 0.0, after = 0.0;
    for (const auto& [i, mult] : m) before += static_cast<double>(mult) * c1.fpdim[i];
    for (const auto& [j, mult] : out.m_prime) after += static_cast<double>(mult) * c2.fpdim[j];
    std::ostringstream os;
    os << "total dimension changed: " << before << " -> " << after;
    out.report.add("mirror.dimension_preserved", std::abs(before - after) < tol.check, os.str());
  }

  {
    ExtensionSpec mirrored{2, out.m_prime, ext.simple};
    CheckReport back = check_extension(z, mirrored, tol);
    std::string failed;
    for (const auto& e : back.entries())
      if (e.status == CheckStatus::fail) failed += (failed.empty() ? "" : ", ") + e.id;
    out.report.add("mirror.extension_valid", back.overall(), "mirrored extension failed: " + failed);
  }

  return out;
}

bool mirror_involution(const BranchingMatrix& z, const ExtensionSpec& ext, const Tolerances& tol) {
  MirrorResult there = mirror_extend(z, ext, tol);
  if (!there.report.overall()) throw PreconditionError("mirror_extend did not produce a consistent result");

  BranchingMatrix flipped = transpose_dualize(z);
  CheckReport rep = validate_branching(flipped, tol);
  if (!rep.overall()) throw PreconditionError("transposed-dualized branching failed validation");

  ExtensionSpec mirrored{1, there.m_prime, ext.simple};
  MirrorResult back = mirror_extend(flipped, mirrored, tol);
  return back.m_prime == normalized(ext.m);
}

}  // namespace mirrorcat
