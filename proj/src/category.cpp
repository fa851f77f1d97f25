#include "mirrorcat/category.hpp"

#include "mirrorcat/errors.hpp"

namespace mirrorcat {

std::shared_ptr<const ValidatedCategory> ValidatedCategory::make(ModularData md, const Tolerances& tol) {
  CheckReport rep = validate_modular(md, tol);
  if (!rep.overall()) {
    std::string first;
    for (const auto& e : rep.entries())
      if (e.status == CheckStatus::fail) {
        first = e.id + (e.detail.empty() ? "" : ": " + e.detail);
        break;
      }
    throw CategoryInvalid("category failed validation at " + first);
  }
  FusionRing ring = verlinde_fusion(md, tol);
  std::vector<double> dims(md.size());
  for (int a = 0; a < md.size(); ++a) dims[a] = fpdim_object(ring, a, tol);
  auto cat = std::make_shared<ValidatedCategory>(
      ValidatedCategory{std::move(md), std::move(rep), std::move(ring), std::move(dims)});
  return cat;
}

}  // namespace mirrorcat
