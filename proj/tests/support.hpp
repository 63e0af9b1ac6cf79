#pragma once

#include <initializer_list>
#include <set>
#include <vector>

#include "kmw/faces.hpp"
#include "kmw/monoid.hpp"

namespace kmwtest {

inline kmw::IMat make_mat(std::initializer_list<std::initializer_list<int>> rows) {
  int n = static_cast<int>(rows.size());
  kmw::IMat m(n, n);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// The desk-scale catalog.
inline kmw::IMat a2() { return make_mat({{2, -1}, {-1, 2}}); }
inline kmw::IMat b2() { return make_mat({{2, -2}, {-1, 2}}); }
inline kmw::IMat g2() { return make_mat({{2, -1}, {-3, 2}}); }
inline kmw::IMat affine_a1() { return make_mat({{2, -2}, {-2, 2}}); }
inline kmw::IMat affine_a2() { return make_mat({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}); }
inline kmw::IMat indef2() { return make_mat({{2, -3}, {-2, 2}}); }
inline kmw::IMat mixed3() { return make_mat({{2, -2, 0}, {-2, 2, 0}, {0, 0, 2}}); }

inline std::vector<kmw::IMat> catalog() {
  return {a2(), b2(), g2(), affine_a1(), affine_a2(), indef2(), mixed3()};
}

// An affine block with an attached node: faces of type {0,1} have nontrivial
// Weyl translates (the setwise stabilizer is a proper parabolic).
inline kmw::IMat attached3() { return make_mat({{2, -2, -1}, {-2, 2, 0}, {-1, 0, 2}}); }

// Two orthogonal affine blocks joined through a fifth node.
inline kmw::IMat coupled5() {
  return make_mat({{2, -2, 0, 0, -1},
                   {-2, 2, 0, 0, 0},
                   {0, 0, 2, -2, -1},
                   {0, 0, -2, 2, 0},
                   {-1, 0, -1, 0, 2}});
}

// Independent classification oracle: a connected sub-GCM is of finite type
// iff the reflection orbit of its simple roots stabilizes; affine iff the
// symmetrized block has a one-dimensional kernel spanned by a positive
// vector. Runs entirely in simple-root coordinates of the subdiagram.
inline bool root_orbit_stabilizes(const kmw::Gcm& g, const std::vector<int>& comp, long height_cap = 40) {
  int k = static_cast<int>(comp.size());
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> frontier;
  for (int i = 0; i < k; ++i) {
    std::vector<long> e(k, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(std::move(e));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& root : frontier) {
      for (int j = 0; j < k; ++j) {
        long pair = 0;
        for (int a = 0; a < k; ++a) pair += g.entry(comp[j], comp[a]).get_si() * root[a];
        std::vector<long> img = root;
        img[j] -= pair;
        long height = 0;
        for (long c : img) height += c;
        if (height > height_cap || height < -height_cap) return false;
        if (seen.insert(img).second) next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }
  return true;
}

inline bool has_positive_kernel_line(const kmw::Gcm& g, const std::vector<int>& comp) {
  int k = static_cast<int>(comp.size());
  kmw::QMat sub(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) sub(a, b) = g.symmetrized()(comp[a], comp[b]);
  auto ker = kmw::nullspace(sub);
  if (ker.size() != 1) return false;
  bool pos = true, neg = true;
  for (const kmw::Rat& c : ker[0]) {
    if (c <= 0) pos = false;
    if (c >= 0) neg = false;
  }
  return pos || neg;
}

inline kmw::ComponentType classify_by_root_orbit(const kmw::Gcm& g, const std::vector<int>& comp) {
  if (root_orbit_stabilizes(g, comp)) return kmw::ComponentType::Finite;
  if (has_positive_kernel_line(g, comp)) return kmw::ComponentType::Affine;
  return kmw::ComponentType::Indefinite;
}

inline std::vector<int> range_n(int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = i;
  return out;
}

inline kmw::QVec qvec(std::initializer_list<int> entries) {
  kmw::QVec v;
  for (int e : entries) v.emplace_back(e);
  return v;
}

}  // namespace kmwtest
