#include "kmw/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace kmw {

namespace {

// Double description state: cone = span(lineality) + cone(rays). Every
// processed constraint vanishes on the lineality space, so ray zero-sets
// (bitmask over processed inequality indices) stay meaningful throughout.
struct Ray {
  QVec v;
  uint64_t zero = 0;
};

QVec normalize(const QVec& v) { return to_rat(primitive(v)); }

// Adjacency in the pointed quotient: the common active constraints must cut
// a two-dimensional face, i.e. have rank dim - |lineality| - 2.
bool adjacent(const std::vector<QVec>& rows, const Ray& a, const Ray& b, int dim, int lin_dim) {
  uint64_t common = a.zero & b.zero;
  std::vector<int> idx;
  for (size_t i = 0; i < rows.size(); ++i)
    if (common & (1ull << i)) idx.push_back(static_cast<int>(i));
  if (static_cast<int>(idx.size()) < dim - lin_dim - 2) return false;
  QMat m(static_cast<int>(idx.size()), dim);
  for (size_t r = 0; r < idx.size(); ++r)
    for (int c = 0; c < dim; ++c) m(static_cast<int>(r), c) = rows[idx[r]][c];
  return rank(m) == dim - lin_dim - 2;
}

}  // namespace

ConeGenerators extreme_rays(int dim, const std::vector<QVec>& ineqs, const std::vector<QVec>& eqs) {
  if (ineqs.size() + eqs.size() > 60) fail(Errc::Internal, "extreme_rays supports at most 60 constraints");
  std::vector<QVec> lineality;
  lineality.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    QVec e(dim);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<Ray> rays;
  std::vector<QVec> processed;  // inequality rows, for adjacency ranks

  auto add_constraint = [&](const QVec& a, bool is_eq) {
    // Lineality pivot: one basis vector leaves the lineality space; it either
    // becomes a ray (inequality) or disappears (equation).
    int pivot = -1;
    for (size_t k = 0; k < lineality.size(); ++k)
      if (dot(a, lineality[k]) != 0) {
        pivot = static_cast<int>(k);
        break;
      }
    if (pivot >= 0) {
      QVec l0 = lineality[pivot];
      Rat al0 = dot(a, l0);
      std::vector<QVec> new_lin;
      for (size_t k = 0; k < lineality.size(); ++k) {
        if (static_cast<int>(k) == pivot) continue;
        Rat c = dot(a, lineality[k]) / al0;
        QVec adj(dim);
        for (int t = 0; t < dim; ++t) adj[t] = lineality[k][t] - c * l0[t];
        new_lin.push_back(std::move(adj));
      }
      lineality = std::move(new_lin);
      for (Ray& r : rays) {
        Rat c = dot(a, r.v) / al0;
        for (int t = 0; t < dim; ++t) r.v[t] -= c * l0[t];
        r.v = normalize(r.v);
      }
      // After projection every existing ray vanishes on a; record the row so
      // adjacency ranks keep seeing it (equations stay active forever).
      uint64_t bit = 1ull << processed.size();
      processed.push_back(a);
      for (Ray& r : rays) r.zero |= bit;
      if (!is_eq) {
        Ray nr;
        if (al0 < 0)
          for (Rat& t : l0) t = -t;
        nr.v = normalize(l0);
        nr.zero = bit - 1;  // vanishes on everything before, positive on a
        rays.push_back(std::move(nr));
      }
      return;
    }

    // Constraint vanishes on the lineality space: classic ray step.
    std::vector<Ray> plus, zero, minus;
    for (Ray& r : rays) {
      int s = sgn(dot(a, r.v));
      if (s > 0)
        plus.push_back(std::move(r));
      else if (s < 0)
        minus.push_back(std::move(r));
      else
        zero.push_back(std::move(r));
    }
    int lin_dim = static_cast<int>(lineality.size());
    std::vector<Ray> combos;
    std::set<std::vector<Int>> seen;
    for (const Ray& p : plus) {
      for (const Ray& m : minus) {
        if (!adjacent(processed, p, m, dim, lin_dim)) continue;
        Rat ap = dot(a, p.v), am = dot(a, m.v);
        QVec v(dim);
        for (int t = 0; t < dim; ++t) v[t] = ap * m.v[t] - am * p.v[t];
        IVec prim = primitive(v);
        if (!seen.insert(prim).second) continue;
        Ray nr;
        nr.v = to_rat(prim);
        nr.zero = (p.zero & m.zero) | (1ull << processed.size());
        combos.push_back(std::move(nr));
      }
    }
    uint64_t bit = 1ull << processed.size();
    processed.push_back(a);
    rays.clear();
    for (Ray& r : zero) {
      r.zero |= bit;
      rays.push_back(std::move(r));
    }
    if (!is_eq)
      for (Ray& r : plus) rays.push_back(std::move(r));
    for (Ray& r : combos) rays.push_back(std::move(r));
  };

  for (const QVec& e : eqs) {
    if (static_cast<int>(e.size()) != dim) fail(Errc::DimensionMismatch, "constraint dimension");
    if (!is_zero(e)) add_constraint(e, /*is_eq=*/true);
  }
  for (const QVec& a : ineqs) {
    if (static_cast<int>(a.size()) != dim) fail(Errc::DimensionMismatch, "constraint dimension");
    if (!is_zero(a)) add_constraint(a, /*is_eq=*/false);
  }

  ConeGenerators out;
  for (Ray& r : rays) out.rays.push_back(normalize(r.v));
  std::sort(out.rays.begin(), out.rays.end());
  for (QVec& l : lineality)
    if (!is_zero(l)) out.lineality.push_back(normalize(l));
  return out;
}

}  // namespace kmw
