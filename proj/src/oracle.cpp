#include "kmw/oracle.hpp"

#include <algorithm>

namespace kmw {

std::shared_ptr<const WeightSample> WeightSample::build(const RealizationPtr& r, int length_bound,
                                                        size_t cap) {
  if (length_bound < 1) fail(Errc::IndexOutOfRange, "WeightSample wants length_bound >= 1");
  auto s = std::make_shared<WeightSample>();
  s->realization = r;
  s->length_bound = length_bound;
  std::vector<QVec>& base = s->base_points;
  for (const SpecialSet& sp : enumerate_special(r->gcm())) {
    QVec p(r->dim(), Rat(1));
    for (int i : sp.theta) p[i] = 0;
    base.push_back(std::move(p));
  }
  for (int i = 0; i < r->dim(); ++i) base.push_back(r->fundamental_weight(i));
  std::vector<QVec>& pts = s->points;
  WeylShells shells(r);
  for (int len = 0; len <= length_bound; ++len) {
    auto shell = shells.next();
    if (shell.empty() && len > 0) break;
    for (const WeylElement& w : shell)
      for (const QVec& b : base) {
        pts.push_back(w.act_weight(b));
        if (pts.size() > cap) fail(Errc::SampleOverflow, "weight sample exceeded its cap");
      }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return s;
}

std::optional<size_t> WeightSample::index_of(const QVec& p) const {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || *it != p) return std::nullopt;
  return static_cast<size_t>(it - points.begin());
}

PartialMap PartialMap::from_element(const MonoidElement& x, const WeightSamplePtr& s) {
  if (x.realization() != s->realization) fail(Errc::RealizationMismatch, "partial map sample");
  PartialMap pm;
  pm.s_ = s;
  pm.chain_ = {Step{x.face(), x.sigma()}};
  pm.images_.reserve(s->points.size());
  for (const QVec& p : s->points) {
    QVec image = x.sigma().act_weight(p);
    // Membership along the catalog route: the smallest face of the image
    // must sit below the element's face.
    if (face_contains(x.face(), image))
      pm.images_.emplace_back(std::move(image));
    else
      pm.images_.emplace_back(std::nullopt);
  }
  return pm;
}

std::optional<QVec> PartialMap::eval(const QVec& p) const {
  QVec cur = p;
  for (const Step& st : chain_) {
    cur = st.sigma.act_weight(cur);
    if (!face_contains_cone_point(st.face, cur)) return std::nullopt;
  }
  return cur;
}

PartialMap oracle_multiply(const PartialMap& f, const PartialMap& g) {
  if (f.s_ != g.s_ || f.s_->points != g.s_->points)
    fail(Errc::SampleMismatch, "oracle_multiply wants maps over the same sample");
  PartialMap out;
  out.s_ = g.s_;
  out.chain_ = g.chain_;
  out.chain_.insert(out.chain_.end(), f.chain_.begin(), f.chain_.end());
  out.images_.reserve(g.images_.size());
  for (size_t i = 0; i < g.images_.size(); ++i) {
    if (!g.images_[i]) {
      out.images_.emplace_back(std::nullopt);
      continue;
    }
    out.images_.emplace_back(f.eval(*g.images_[i]));
  }
  return out;
}

bool oracle_equal(const PartialMap& f, const PartialMap& g) {
  if (f.sample() != g.sample() || f.sample()->points != g.sample()->points)
    fail(Errc::SampleMismatch, "oracle_equal wants maps over the same sample");
  return f.images() == g.images();
}

}  // namespace kmw
