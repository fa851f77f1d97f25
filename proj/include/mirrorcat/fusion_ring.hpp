#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mirrorcat/report.hpp"
#include "mirrorcat/tolerances.hpp"

namespace mirrorcat {

using Mult = std::int64_t;

// Key (a, b, c) of a structure constant N_{ab}^c. Lexicographic map order
// keeps all (a, b, *) entries contiguous.
using FusionKey = std::array<int, 3>;
using FusionTensor = std::map<FusionKey, Mult>;

struct FusedTerm {
  int label = 0;
  Mult mult = 0;
  friend bool operator==(const FusedTerm&, const FusedTerm&) = default;
};

// Grothendieck ring of a module category: ordered simple-object labels, a
// distinguished unit, the dual involution and the sparse fusion tensor.
// Immutable after construction; every operation on it is a pure function.
class FusionRing {
 public:
  FusionRing(std::vector<std::string> labels, int unit, std::vector<int> dual, FusionTensor tensor);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label_name(int a) const;
  int unit() const { return unit_; }
  int dual(int a) const;
  const std::vector<int>& duals() const { return dual_; }

  Mult N(int a, int b, int c) const;  // 0 when absent
  const FusionTensor& tensor() const { return tensor_; }

  // Nonzero terms of a ⊗ b in label order.
  std::vector<FusedTerm> fuse(int a, int b) const;

  // Dense n×n matrix of left multiplication by a: entry (b, c) = N_{ab}^c.
  std::vector<Mult> fusion_matrix(int a) const;

  void check_label(int a) const;  // throws UnknownLabel

 private:
  std::vector<std::string> labels_;
  int unit_ = 0;
  std::vector<int> dual_;
  FusionTensor tensor_;
};

// Recovers the dual involution from the fusion tensor: d(a) is the unique b
// with N_{ab}^{unit} = 1. Throws DualityError when a label has no partner,
// several partners, or a partner with multiplicity > 1.
std::vector<int> infer_duals(const FusionTensor& tensor, int unit, int n_labels);

// One report entry per ring axiom; passes iff the ring satisfies all of them.
CheckReport validate_ring(const FusionRing& ring, const Tolerances& tol = {});

// Largest real eigenvalue of the fusion matrix of `a` (power iteration with
// a dense-eigensolver fallback for periodic matrices).
double fpdim_object(const FusionRing& ring, int a, const Tolerances& tol = {});

// Sum of squared object dimensions over `subset` (all labels by default).
double fpdim_category(const FusionRing& ring, const std::optional<std::vector<int>>& subset = std::nullopt,
                      const Tolerances& tol = {});

// Smallest label set containing seeds and the unit, closed under fusion and
// duals. Returned sorted in label order.
std::vector<int> subring_closure(const FusionRing& ring, const std::vector<int>& seeds);

// Product ring on pair labels: N_{(a,x)(b,y)}^{(c,z)} = N1_{ab}^c · N2_{xy}^z,
// pairwise duals, pair index = a·|r2| + x.
FusionRing deligne_product(const FusionRing& r1, const FusionRing& r2);

}  // namespace mirrorcat
