#pragma once

#include <optional>

#include "kmw/realization.hpp"

namespace kmw {

// A Weyl group element as the contragredient pair of integer matrices for its
// action on weight and coweight coordinates (p^T h = 1). Equality is matrix
// equality, which is canonical; words are recomputed on demand.
class WeylElement {
 public:
  static WeylElement identity(RealizationPtr r);
  static WeylElement simple_reflection(RealizationPtr r, int i);

  const RealizationPtr& realization() const { return r_; }
  const IMat& weight_matrix() const { return p_; }
  const IMat& coweight_matrix() const { return h_; }

  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  bool operator==(const WeylElement& o) const;
  bool is_identity() const;

  QVec act_weight(const QVec& v) const { return mat_mul(p_, v); }
  IVec act_coweight(const IVec& v) const { return mat_mul(h_, v); }

  // Stable ordering/deduplication key (the weight-matrix entries).
  const std::vector<Int>& key() const { return p_.data(); }

 private:
  WeylElement(RealizationPtr r, IMat p, IMat h) : r_(std::move(r)), p_(std::move(p)), h_(std::move(h)) {}
  RealizationPtr r_;
  IMat p_, h_;
};

void check_same_realization(const WeylElement& a, const WeylElement& b);

// m_ij keyed by a_ij a_ji in {0,1,2,3}; nullopt when >= 4 (no relation).
std::optional<int> coxeter_order(const Gcm& g, int i, int j);

// Sign of the real root w(alpha_i); true when negative.
bool sends_simple_root_negative(const WeylElement& w, int i);

std::vector<int> right_descents(const WeylElement& w);
std::vector<int> left_descents(const WeylElement& w);
long length(const WeylElement& w);
std::vector<int> reduced_word(const WeylElement& w);
WeylElement from_word(RealizationPtr r, const std::vector<int>& word);

// Unique y in x W_J with y(alpha_j) positive for all j in J (strip right
// J-descents, smallest index first).
WeylElement min_coset_rep_right(const WeylElement& x, const std::vector<int>& j);
// Mirror image: unique y in W_J x with y^{-1}(alpha_j) positive on J.
WeylElement min_coset_rep_left(const WeylElement& x, const std::vector<int>& j);

bool is_in_parabolic(const WeylElement& x, const std::vector<int>& j);

struct RealRoot {
  QVec root;        // weight coordinates
  IVec alpha;       // coordinates in the simple-root basis (uniform sign)
  IVec coroot;      // coweight coordinates of h_alpha
  long height = 0;  // sum of alpha coordinates
  bool positive = true;
};

// Deduplicated orbit segment of the simple roots under reflection words of
// length <= bound, with equivariantly paired coroots.
std::vector<RealRoot> real_roots_up_to(const RealizationPtr& r, int bound);

// Positive real roots of height <= bound (complete for that window).
std::vector<RealRoot> positive_real_roots_by_height(const RealizationPtr& r, long bound);

// All elements of length <= bound, sorted by (length, reduced word).
std::vector<WeylElement> enumerate_weyl(const RealizationPtr& r, int bound);

// Breadth-first shells of the Cayley graph: shell(k) = elements of length k.
class WeylShells {
 public:
  explicit WeylShells(RealizationPtr r);
  // Returns the next shell; empty once the group is exhausted.
  std::vector<WeylElement> next();
  int depth() const { return depth_; }

 private:
  RealizationPtr r_;
  std::vector<WeylElement> frontier_;
  std::vector<std::vector<Int>> seen_;  // sorted keys
  int depth_ = -1;
  bool exhausted_ = false;
};

}  // namespace kmw
