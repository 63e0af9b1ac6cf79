#pragma once

#include <memory>

#include "kmw/monoid.hpp"

namespace kmw {

// Finite brute-force model of the monoid action: a deterministic W-orbit
// sample of cone lattice points. Independent of the monoid's canonical forms
// and face_intersect; only face-membership primitives are shared.
struct WeightSample {
  RealizationPtr realization;
  int length_bound = 0;
  std::vector<QVec> base_points;  // provenance: standard relint points + fundamental weights
  std::vector<QVec> points;       // their W-orbit to length_bound, sorted, deduplicated

  static std::shared_ptr<const WeightSample> build(const RealizationPtr& r, int length_bound,
                                                   size_t cap = 100000);

  std::optional<size_t> index_of(const QVec& p) const;
};

using WeightSamplePtr = std::shared_ptr<const WeightSample>;

// Extensional view of a monoid element: the partial injection
// lambda -> sigma lambda (defined when sigma lambda lies in the face),
// materialized on the sample. Off-sample evaluation walks the generator
// chain so that composites still model composition of partial maps on the
// whole cone, not just on the sample.
class PartialMap {
 public:
  static PartialMap from_element(const MonoidElement& x, const WeightSamplePtr& s);

  const WeightSamplePtr& sample() const { return s_; }
  const std::vector<std::optional<QVec>>& images() const { return images_; }

  // Evaluates the map at an arbitrary cone point.
  std::optional<QVec> eval(const QVec& p) const;

 private:
  PartialMap() = default;
  WeightSamplePtr s_;
  std::vector<std::optional<QVec>> images_;
  // Application order: step 0 first.
  struct Step {
    Face face;
    WeylElement sigma;
  };
  std::vector<Step> chain_;
  friend PartialMap oracle_multiply(const PartialMap& f, const PartialMap& g);
};

// Composition f after g, Undefined absorbing.
PartialMap oracle_multiply(const PartialMap& f, const PartialMap& g);

// Extensional equality on the shared sample (sound for refuting equality;
// confirmation is sample-relative).
bool oracle_equal(const PartialMap& f, const PartialMap& g);

}  // namespace kmw
