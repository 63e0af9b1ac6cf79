#pragma once

#include <memory>
#include <optional>

#include "kmw/gcm.hpp"

namespace kmw {

enum class DomOrder { LessEq, GreaterEq, Equal, Incomparable };

// Simply connected minimal free realization of a GCM: dual lattices of rank
// 2n - l with coroot basis h_1..h_{2n-l} and dual fundamental-weight basis.
// Weight coordinates are taken in the fundamental-weight basis, coweight
// coordinates in the coroot basis, so the pairing is the standard dot product
// and Lambda_i(h_j) = delta_ij holds by construction.
class Realization {
 public:
  // Deterministic build: the completion columns are the lexicographically
  // first index set extending a row basis of A to full rank.
  static std::shared_ptr<const Realization> build(const Gcm& g);
  // Same construction with an explicitly chosen completion-column set.
  static std::shared_ptr<const Realization> build_with_completion(const Gcm& g, const std::vector<int>& cols);

  const Gcm& gcm() const { return gcm_; }
  int n() const { return gcm_.size(); }
  int dim() const { return dim_; }
  const std::vector<int>& completion_columns() const { return completion_cols_; }

  // dim x n integer matrix whose column i is alpha_i in weight coordinates;
  // row j of column i equals alpha_i(h_j).
  const IMat& simple_roots() const { return alpha_; }
  QVec simple_root(int i) const;

  const QMat& gram_h() const { return gram_h_; }
  const QMat& gram_hstar() const { return gram_hstar_; }

  // Coordinates of v in the simple-root basis, when v lies in their span.
  std::optional<QVec> alpha_coords(const QVec& v) const;

  // A coweight pairing to 1 with every simple root; real roots never pair to
  // zero with it, so its sign decides root positivity cheaply.
  const QVec& height_functional() const { return height_functional_; }

  bool is_dominant(const QVec& weight) const;
  QVec fundamental_weight(int i) const;

  // Connected components of the full Dynkin diagram with their types; affine
  // components carry the primitive coweight spanning the kernel of the
  // reflection action (lambda(kernel) is a W-invariant).
  struct ComponentInfo {
    std::vector<int> indices;
    ComponentType type = ComponentType::Finite;
    IVec kernel_coweight;  // dim-length; affine components only
  };
  const std::vector<ComponentInfo>& diagram_components() const { return comps_; }

 private:
  explicit Realization(Gcm g) : gcm_(std::move(g)) {}
  Gcm gcm_;
  int dim_ = 0;
  std::vector<int> completion_cols_;
  IMat alpha_;
  QMat gram_h_, gram_hstar_;
  std::vector<int> alpha_pivot_rows_;
  QMat alpha_pivot_inv_;
  QVec height_functional_;
  std::vector<ComponentInfo> comps_;
};

using RealizationPtr = std::shared_ptr<const Realization>;

Rat pairing(const Realization& r, const QVec& weight, const IVec& coweight);

DomOrder dominance_compare(const Realization& r, const QVec& a, const QVec& b);

// p_J(lambda) = sum_{j in J} lambda(h_j) Lambda_j for J inside the index set.
QVec project_pj(const Realization& r, const QVec& weight, const std::vector<int>& j);

}  // namespace kmw
