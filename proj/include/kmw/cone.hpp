#pragma once

#include <vector>

#include "kmw/matrix.hpp"

namespace kmw {

// Minimal generating system of a polyhedral cone
//   { x : a.x >= 0 for a in ineqs, e.x = 0 for e in eqs }
// as lineality basis + extreme rays of the pointed quotient. Rays are
// primitive integer vectors (returned as rationals).
struct ConeGenerators {
  std::vector<QVec> rays;
  std::vector<QVec> lineality;
};

ConeGenerators extreme_rays(int dim, const std::vector<QVec>& ineqs, const std::vector<QVec>& eqs);

}  // namespace kmw
