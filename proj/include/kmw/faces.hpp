#pragma once

#include "kmw/cone.hpp"
#include "kmw/weyl.hpp"

namespace kmw {

// W-translate w F_J of the dominant facet of type J, w minimal in W^J.
struct Facet {
  WeylElement w;
  std::vector<int> type;
};

// A face of the Tits cone in canonical form: w R(Theta) with Theta special
// and w the minimal representative modulo the setwise stabilizer
// W_{Theta u Theta^perp}. Canonical pairs compare componentwise.
class Face {
 public:
  static Face make(const RealizationPtr& r, SpecialSet theta, const WeylElement& w);

  const SpecialSet& theta() const { return theta_; }
  const WeylElement& w() const { return w_; }
  const std::vector<int>& stabilizer_support() const { return stab_; }
  const RealizationPtr& realization() const { return w_.realization(); }
  int dim() const { return realization()->dim() - static_cast<int>(theta_.theta.size()); }
  bool is_full_cone() const { return theta_.theta.empty(); }

  bool operator==(const Face& o) const;

 private:
  Face(SpecialSet theta, WeylElement w, std::vector<int> stab)
      : theta_(std::move(theta)), w_(std::move(w)), stab_(std::move(stab)) {}
  SpecialSet theta_;
  WeylElement w_;
  std::vector<int> stab_;  // Theta u Theta^perp, sorted
};

struct Membership {
  enum class Status { InCone, NotInCone, Unknown };
  Status status = Status::Unknown;
  std::optional<WeylElement> w;  // InCone: input = w . dominant
  QVec dominant;
  std::vector<int> component;  // NotInCone: affine component certificate
  IVec kernel_coweight;
  long steps = 0;
};

inline constexpr long kDefaultDominantBudget = 4096;

// Chamber descent by smallest negative coordinate. Exact NotInCone decisions
// come from the affine kernel-coweight sign test; indefinite components can
// leave the outcome Unknown when the budget runs out.
Membership to_dominant(const RealizationPtr& r, const QVec& lambda, long budget = kDefaultDominantBudget);

Facet facet_of(const RealizationPtr& r, const QVec& lambda, long budget = kDefaultDominantBudget);

Face smallest_face(const RealizationPtr& r, const QVec& lambda, long budget = kDefaultDominantBudget);

Face standard_face(const RealizationPtr& r, const std::vector<int>& theta);
Face full_cone(const RealizationPtr& r);
// R(I^infinity) = X n (-X), the face every face contains.
Face minimal_face(const RealizationPtr& r);

Face translate(const WeylElement& sigma, const Face& f);

// w . p_Theta with p_Theta the sum of the fundamental weights off Theta.
QVec relint_point(const Face& f);

// Smallest face containing both (sound because a face containing p1 + p2
// contains p1 and p2).
Face face_join(const Face& a, const Face& b);

bool face_leq(const Face& a, const Face& b);  // a subface of b
bool face_contains(const Face& f, const QVec& lambda, long budget = kDefaultDominantBudget);

// Membership shortcut for points already known to lie in the Tits cone:
// lambda in w R(Theta) iff lambda(w h_i) = 0 for all i in Theta.
bool face_contains_cone_point(const Face& f, const QVec& lambda);

enum class IsectStatus { Exact, BudgetExhausted };

struct IsectOptions {
  int length_budget = 8;
  int stability_window = 2;
  long dominant_budget = kDefaultDominantBudget;
};

struct IsectResult {
  Face face;
  IsectStatus status;
};

// Face intersection semi-algorithm: fast paths, then a chamber scan folding
// relative-interior points of w C-bar n U into a running join. The result is
// always a subface of the true intersection; Exact status is certified when
// the equation subspace U lies in the span of the accumulator, when the Weyl
// group is exhausted, or (softly) when the accumulator is stable for the
// configured window and a membership sample confirms it.
IsectResult face_intersect(const Face& a, const Face& b, const IsectOptions& opts = {});

}  // namespace kmw
