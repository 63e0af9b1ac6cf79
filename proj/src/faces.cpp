#include "kmw/faces.hpp"

#include <algorithm>

namespace kmw {

namespace {

std::vector<int> union_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Face Face::make(const RealizationPtr& r, SpecialSet theta, const WeylElement& w) {
  if (w.realization() != r) fail(Errc::RealizationMismatch, "face canonicalization");
  std::vector<int> stab = union_sorted(theta.theta, orthogonal_complement(r->gcm(), theta.theta));
  WeylElement canon = min_coset_rep_right(w, stab);
  return Face(std::move(theta), std::move(canon), std::move(stab));
}

bool Face::operator==(const Face& o) const {
  check_same_realization(w_, o.w_);
  return theta_.theta == o.theta_.theta && w_ == o.w_;
}

Membership to_dominant(const RealizationPtr& r, const QVec& lambda, long budget) {
  if (static_cast<int>(lambda.size()) != r->dim()) fail(Errc::DimensionMismatch, "to_dominant dimension");
  if (budget < 1) fail(Errc::IndexOutOfRange, "to_dominant wants budget >= 1");
  // Exact rejections first: on an affine component the kernel pairing is
  // W-invariant; a negative value, or zero with nonzero component
  // coordinates, certifies the point lies outside the cone.
  for (const auto& comp : r->diagram_components()) {
    if (comp.type != ComponentType::Affine) continue;
    Rat s;
    for (int i : comp.indices) s += lambda[i] * comp.kernel_coweight[i];
    bool reject = s < 0;
    if (s == 0) {
      for (int i : comp.indices)
        if (lambda[i] != 0) reject = true;
    }
    if (reject) {
      Membership m;
      m.status = Membership::Status::NotInCone;
      m.component = comp.indices;
      m.kernel_coweight = comp.kernel_coweight;
      return m;
    }
  }
  Membership m;
  m.dominant = lambda;
  WeylElement w = WeylElement::identity(r);
  long steps = 0;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < r->n(); ++i)
      if (m.dominant[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    if (steps >= budget) {
      m.status = Membership::Status::Unknown;
      m.steps = steps;
      m.dominant.clear();
      return m;
    }
    // sigma_i lambda = lambda - lambda(h_i) alpha_i, applied coordinate-wise.
    Rat c = m.dominant[neg];
    for (int j = 0; j < r->dim(); ++j) m.dominant[j] -= c * r->simple_roots()(j, neg);
    w = w * WeylElement::simple_reflection(r, neg);
    ++steps;
  }
  m.status = Membership::Status::InCone;
  m.w = std::move(w);
  m.steps = steps;
  return m;
}

Facet facet_of(const RealizationPtr& r, const QVec& lambda, long budget) {
  Membership m = to_dominant(r, lambda, budget);
  if (m.status != Membership::Status::InCone)
    fail(Errc::NotInConeOrUnknown, "facet_of: point not (known to be) in the Tits cone");
  std::vector<int> type;
  for (int i = 0; i < r->n(); ++i)
    if (m.dominant[i] == 0) type.push_back(i);
  return Facet{min_coset_rep_right(*m.w, type), type};
}

Face smallest_face(const RealizationPtr& r, const QVec& lambda, long budget) {
  Facet f = facet_of(r, lambda, budget);
  SpecialSet theta = make_special(r->gcm(), infinite_part(r->gcm(), f.type));
  return Face::make(r, std::move(theta), f.w);
}

Face standard_face(const RealizationPtr& r, const std::vector<int>& theta) {
  return Face::make(r, make_special(r->gcm(), theta), WeylElement::identity(r));
}

Face full_cone(const RealizationPtr& r) { return standard_face(r, {}); }

Face minimal_face(const RealizationPtr& r) {
  std::vector<int> all(r->n());
  for (int i = 0; i < r->n(); ++i) all[i] = i;
  return standard_face(r, infinite_part(r->gcm(), all));
}

Face translate(const WeylElement& sigma, const Face& f) {
  return Face::make(f.realization(), f.theta(), sigma * f.w());
}

QVec relint_point(const Face& f) {
  const RealizationPtr& r = f.realization();
  QVec p(r->dim(), Rat(1));
  for (int i : f.theta().theta) p[i] = 0;
  return f.w().act_weight(p);
}

Face face_join(const Face& a, const Face& b) {
  check_same_realization(a.w(), b.w());
  if (a == b) return a;
  return smallest_face(a.realization(), add(relint_point(a), relint_point(b)));
}

bool face_leq(const Face& a, const Face& b) { return face_join(a, b) == b; }

bool face_contains(const Face& f, const QVec& lambda, long budget) {
  return face_leq(smallest_face(f.realization(), lambda, budget), f);
}

bool face_contains_cone_point(const Face& f, const QVec& lambda) {
  const RealizationPtr& r = f.realization();
  if (static_cast<int>(lambda.size()) != r->dim()) fail(Errc::DimensionMismatch, "membership dimension");
  for (int i : f.theta().theta) {
    IVec e(r->dim());
    e[i] = 1;
    if (dot(lambda, f.w().act_coweight(e)) != 0) return false;
  }
  return true;
}

namespace {

// U is the span of the prospective intersection; the accumulator face equals
// the intersection as soon as U sits inside its span (faces satisfy
// F = X n span F).
bool span_covers(const std::vector<QVec>& u_basis, const Face& g) {
  for (int i : g.theta().theta) {
    IVec coweight = g.w().act_coweight([&] {
      IVec e(g.realization()->dim());
      e[i] = 1;
      return e;
    }());
    for (const QVec& ub : u_basis)
      if (dot(ub, coweight) != 0) return false;
  }
  return true;
}

// Deterministic sample of cone lattice points used to cross-check a stable
// accumulator: W-orbit (length <= 3) of the standard relative-interior points
// and the fundamental weights.
std::vector<QVec> membership_sample(const RealizationPtr& r, size_t cap = 1500) {
  std::vector<QVec> base;
  for (const SpecialSet& s : enumerate_special(r->gcm())) {
    QVec p(r->dim(), Rat(1));
    for (int i : s.theta) p[i] = 0;
    base.push_back(std::move(p));
  }
  for (int i = 0; i < r->dim(); ++i) base.push_back(r->fundamental_weight(i));
  std::vector<QVec> pts;
  WeylShells shells(r);
  for (int len = 0; len <= 3 && pts.size() < cap; ++len) {
    auto shell = shells.next();
    if (shell.empty() && len > 0) break;
    for (const WeylElement& w : shell)
      for (const QVec& b : base) {
        QVec p = w.act_weight(b);
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
        if (pts.size() >= cap) return pts;
      }
  }
  return pts;
}

bool sample_confirms(const Face& a, const Face& b, const Face& g) {
  for (const QVec& p : membership_sample(a.realization()))
    if (face_contains(a, p) && face_contains(b, p) && !face_contains(g, p)) return false;
  return true;
}

}  // namespace

IsectResult face_intersect(const Face& a, const Face& b, const IsectOptions& opts) {
  check_same_realization(a.w(), b.w());
  const RealizationPtr& r = a.realization();
  if (a == b) return {a, IsectStatus::Exact};
  if (a.is_full_cone()) return {b, IsectStatus::Exact};
  if (b.is_full_cone()) return {a, IsectStatus::Exact};

  // Work in the frame of a.w: a n b = w_a (R(Theta_a) n u R(Theta_b)).
  // Setwise-stabilizer absorption in either direction reduces nested types
  // to one of the inputs.
  WeylElement u = min_coset_rep_right(a.w().inverse() * b.w(), b.stabilizer_support());
  bool absorbed = u.is_identity() ||
                  min_coset_rep_right(b.w().inverse() * a.w(), a.stabilizer_support()).is_identity();
  if (absorbed) {
    if (subset_sorted(a.theta().theta, b.theta().theta)) return {b, IsectStatus::Exact};
    if (subset_sorted(b.theta().theta, a.theta().theta)) return {a, IsectStatus::Exact};
  }

  int dim = r->dim();
  auto unit_coweight = [&](int i) {
    IVec e(dim);
    e[i] = 1;
    return e;
  };
  std::vector<QVec> eqs;
  for (int i : a.theta().theta) eqs.push_back(to_rat(unit_coweight(i)));
  for (int j : b.theta().theta) eqs.push_back(to_rat(u.act_coweight(unit_coweight(j))));
  QMat eqmat(static_cast<int>(eqs.size()), dim);
  for (size_t row = 0; row < eqs.size(); ++row)
    for (int c = 0; c < dim; ++c) eqmat(static_cast<int>(row), c) = eqs[row][c];
  std::vector<QVec> u_basis = nullspace(eqmat);

  Face acc = minimal_face(r);
  auto finish = [&](IsectStatus st) { return IsectResult{translate(a.w(), acc), st}; };
  auto done = [&]() {
    if (span_covers(u_basis, acc)) return true;
    Face out = translate(a.w(), acc);
    return out == a || out == b;
  };
  if (done()) return finish(IsectStatus::Exact);

  WeylShells shells(r);
  int last_change = 0;
  bool confirm_failed_since_change = false;
  for (int len = 0; len <= opts.length_budget; ++len) {
    auto shell = shells.next();
    if (shell.empty() && len > 0) return finish(IsectStatus::Exact);  // whole group scanned
    for (const WeylElement& w : shell) {
      std::vector<QVec> ineqs;
      for (int i = 0; i < r->n(); ++i) ineqs.push_back(to_rat(w.act_coweight(unit_coweight(i))));
      ConeGenerators gen = extreme_rays(dim, ineqs, eqs);
      if (gen.rays.empty()) continue;
      QVec q(dim);
      for (const QVec& ray : gen.rays) q = add(q, ray);
      Face piece = smallest_face(r, q, opts.dominant_budget);
      Face joined = face_join(acc, piece);
      if (!(joined == acc)) {
        acc = joined;
        last_change = len;
        confirm_failed_since_change = false;
        if (done()) return finish(IsectStatus::Exact);
      }
    }
    if (len - last_change >= opts.stability_window && !confirm_failed_since_change) {
      if (sample_confirms(a, b, translate(a.w(), acc))) return finish(IsectStatus::Exact);
      confirm_failed_since_change = true;
    }
  }
  return finish(IsectStatus::BudgetExhausted);
}

}  // namespace kmw
