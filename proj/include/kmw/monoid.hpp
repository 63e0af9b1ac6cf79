#pragma once

#include "kmw/faces.hpp"

namespace kmw {

// Element of the Weyl monoid: a congruence class <R>sigma with R = w R(Theta)
// stored canonically. sigma is normalized so that w^{-1} sigma is the minimal
// representative of its left W_Theta-coset; equality is then syntactic. The
// class acts on weights by lambda -> sigma lambda when sigma lambda lies in R.
class MonoidElement {
 public:
  static MonoidElement from_weyl(const WeylElement& sigma);
  static MonoidElement idempotent(const Face& f);
  static MonoidElement make(const Face& f, const WeylElement& sigma);

  const Face& face() const { return face_; }
  const WeylElement& sigma() const { return sigma_; }
  // w^{-1} sigma, the canonical member of ^Theta W.
  WeylElement sigma_part() const { return face_.w().inverse() * sigma_; }
  const RealizationPtr& realization() const { return face_.realization(); }

  bool operator==(const MonoidElement& o) const;
  bool is_unit() const { return face_.is_full_cone(); }

 private:
  MonoidElement(Face f, WeylElement s) : face_(std::move(f)), sigma_(std::move(s)) {}
  Face face_;
  WeylElement sigma_;
};

struct MulResult {
  MonoidElement elem;
  IsectStatus status;
};

// (R, sigma) (S, tau) = (R n sigma S, sigma tau); the face part goes through
// face_intersect and the status is propagated.
MulResult multiply(const MonoidElement& x, const MonoidElement& y, const IsectOptions& opts = {});

enum class NfFlavor { Type1, Type2 };

// Unique factorization sigma1 <R(Theta)> sigma2 with
//   Type1: sigma1 in W^{Theta u Theta^perp}, sigma2 in ^Theta W
//   Type2: sigma1 in W^Theta,                sigma2 in ^{Theta u Theta^perp} W.
struct NormalForm {
  NfFlavor flavor;
  WeylElement sigma1;
  SpecialSet theta;
  WeylElement sigma2;
};

NormalForm normal_form(const MonoidElement& x, NfFlavor flavor);
MonoidElement reassemble(const NormalForm& nf);

// The W x W-orbit of an element is determined by its face type.
SpecialSet orbit_label(const MonoidElement& x);

struct ParabolicWitness {
  bool member = false;
  std::optional<WeylElement> u, v;  // member: x = u <R(xi)> v with u, v in W_J
  std::optional<SpecialSet> xi;    // xi special, xi inside J^infinity
};

ParabolicWitness parabolic_decompose(const MonoidElement& x, const std::vector<int>& j);

// All distinct <w R(Theta)> sigma with l(w) + l(sigma part) <= bound, sorted
// by (|Theta|, Theta, total length, words).
std::vector<MonoidElement> enumerate_monoid(const RealizationPtr& r, int bound);

// Partial action on points of the Tits cone: sigma lambda when that lies in
// the face, otherwise nullopt.
std::optional<QVec> monoid_apply(const MonoidElement& x, const QVec& lambda,
                                 long budget = kDefaultDominantBudget);

}  // namespace kmw
