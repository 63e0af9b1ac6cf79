#pragma once

#include <vector>

#include "kmw/matrix.hpp"

namespace kmw {

enum class ComponentType { Finite, Affine, Indefinite };

const char* to_string(ComponentType t);

// A validated generalized Cartan matrix: integer square matrix with 2 on the
// diagonal, nonpositive off-diagonal entries and a symmetric zero pattern,
// together with a canonical symmetrizer A = D B (D = diag(eps), B symmetric;
// eps integral with gcd 1 on every connected component) and the rational rank.
class Gcm {
 public:
  static Gcm validate(const IMat& matrix);

  int size() const { return n_; }
  const IMat& entries() const { return a_; }
  Int entry(int i, int j) const { return a_(i, j); }
  const std::vector<Rat>& symmetrizer() const { return eps_; }
  const QMat& symmetrized() const { return b_; }
  int rank() const { return rank_; }

  bool operator==(const Gcm& o) const { return a_ == o.a_; }

 private:
  Gcm() = default;
  int n_ = 0;
  IMat a_;
  std::vector<Rat> eps_;
  QMat b_;
  int rank_ = 0;
};

// A subset of the index set all of whose Dynkin-diagram components are of
// non-finite type (or the empty set), with its typed component partition.
struct SpecialSet {
  std::vector<int> theta;  // sorted, 0-based
  std::vector<std::pair<std::vector<int>, ComponentType>> components;

  bool operator==(const SpecialSet& o) const { return theta == o.theta; }
  bool empty() const { return theta.empty(); }
};

// Connected components of the Dynkin diagram restricted to J (i ~ j iff
// a_ij != 0), each sorted, ordered by smallest member.
std::vector<std::vector<int>> components(const Gcm& g, const std::vector<int>& j);

ComponentType classify_component(const Gcm& g, const std::vector<int>& c);

bool is_special(const Gcm& g, const std::vector<int>& theta);

// Builds the SpecialSet for theta; requires is_special(g, theta).
SpecialSet make_special(const Gcm& g, const std::vector<int>& theta);

// All special subsets, sorted by (size, lexicographic); always contains {}.
std::vector<SpecialSet> enumerate_special(const Gcm& g);

// { i : a_ij = 0 for all j in theta }.
std::vector<int> orthogonal_complement(const Gcm& g, const std::vector<int>& theta);

// Union of the non-finite-type components of J.
std::vector<int> infinite_part(const Gcm& g, const std::vector<int>& j);

}  // namespace kmw
