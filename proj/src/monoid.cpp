#include "kmw/monoid.hpp"

#include <algorithm>

namespace kmw {

MonoidElement MonoidElement::make(const Face& f, const WeylElement& sigma) {
  check_same_realization(f.w(), sigma);
  WeylElement part = min_coset_rep_left(f.w().inverse() * sigma, f.theta().theta);
  return MonoidElement(f, f.w() * part);
}

MonoidElement MonoidElement::from_weyl(const WeylElement& sigma) {
  return make(full_cone(sigma.realization()), sigma);
}

MonoidElement MonoidElement::idempotent(const Face& f) {
  return make(f, WeylElement::identity(f.realization()));
}

bool MonoidElement::operator==(const MonoidElement& o) const {
  return face_ == o.face_ && sigma_ == o.sigma_;
}

MulResult multiply(const MonoidElement& x, const MonoidElement& y, const IsectOptions& opts) {
  check_same_realization(x.sigma(), y.sigma());
  IsectResult isect = face_intersect(x.face(), translate(x.sigma(), y.face()), opts);
  return {MonoidElement::make(isect.face, x.sigma() * y.sigma()), isect.status};
}

NormalForm normal_form(const MonoidElement& x, NfFlavor flavor) {
  const Face& f = x.face();
  WeylElement m = x.sigma_part();
  if (flavor == NfFlavor::Type1) return {flavor, f.w(), f.theta(), std::move(m)};
  // Type2: push the W_{Theta^perp} factor of the stabilizer across the
  // idempotent. With m2 minimal in W_{Theta u Theta^perp} m and
  // z = m m2^{-1} = z_Theta z_perp, the pair (w z_perp, m2) satisfies the
  // Type2 minimality predicates and reassembles to x.
  WeylElement m2 = min_coset_rep_left(m, f.stabilizer_support());
  WeylElement z = m * m2.inverse();
  WeylElement z_perp = min_coset_rep_left(z, f.theta().theta);
  return {flavor, f.w() * z_perp, f.theta(), std::move(m2)};
}

MonoidElement reassemble(const NormalForm& nf) {
  const RealizationPtr& r = nf.sigma1.realization();
  MonoidElement mid = MonoidElement::idempotent(standard_face(r, nf.theta.theta));
  MulResult right = multiply(mid, MonoidElement::from_weyl(nf.sigma2));
  MulResult full = multiply(MonoidElement::from_weyl(nf.sigma1), right.elem);
  if (right.status != IsectStatus::Exact || full.status != IsectStatus::Exact)
    fail(Errc::Internal, "reassemble hit a non-exact product");
  return full.elem;
}

SpecialSet orbit_label(const MonoidElement& x) { return x.face().theta(); }

ParabolicWitness parabolic_decompose(const MonoidElement& x, const std::vector<int>& j) {
  const Gcm& g = x.realization()->gcm();
  std::vector<int> jinf = infinite_part(g, j);
  NormalForm nf = normal_form(x, NfFlavor::Type1);
  bool theta_ok = std::includes(jinf.begin(), jinf.end(), nf.theta.theta.begin(), nf.theta.theta.end());
  if (!theta_ok || !is_in_parabolic(nf.sigma1, j) || !is_in_parabolic(nf.sigma2, j)) return {};
  ParabolicWitness w;
  w.member = true;
  w.u = nf.sigma1;
  w.v = nf.sigma2;
  w.xi = nf.theta;
  return w;
}

std::vector<MonoidElement> enumerate_monoid(const RealizationPtr& r, int bound) {
  if (bound < 0) fail(Errc::IndexOutOfRange, "enumerate_monoid wants bound >= 0");
  std::vector<WeylElement> group = enumerate_weyl(r, bound);
  std::vector<std::pair<std::vector<int>, WeylElement>> words;
  words.reserve(group.size());
  for (auto& x : group) words.emplace_back(reduced_word(x), std::move(x));

  struct Keyed {
    std::vector<int> key_theta;
    size_t theta_size;
    size_t total_len;
    std::vector<int> word_w, word_m;
    MonoidElement elem;
  };
  std::vector<Keyed> acc;
  for (const SpecialSet& theta : enumerate_special(r->gcm())) {
    std::vector<int> stab =
        [&] {
          std::vector<int> out;
          auto perp = orthogonal_complement(r->gcm(), theta.theta);
          std::set_union(theta.theta.begin(), theta.theta.end(), perp.begin(), perp.end(),
                         std::back_inserter(out));
          return out;
        }();
    for (const auto& [ww, w] : words) {
      if (static_cast<int>(ww.size()) > bound) continue;
      bool minimal = true;
      for (int i : stab)
        if (sends_simple_root_negative(w, i)) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
      Face face = Face::make(r, theta, w);
      for (const auto& [mw, m] : words) {
        if (ww.size() + mw.size() > static_cast<size_t>(bound)) continue;
        bool left_min = true;
        for (int i : theta.theta)
          if (sends_simple_root_negative(m.inverse(), i)) {
            left_min = false;
            break;
          }
        if (!left_min) continue;
        acc.push_back(Keyed{theta.theta, theta.theta.size(), ww.size() + mw.size(), ww, mw,
                            MonoidElement::make(face, w * m)});
      }
    }
  }
  std::sort(acc.begin(), acc.end(), [](const Keyed& a, const Keyed& b) {
    if (a.theta_size != b.theta_size) return a.theta_size < b.theta_size;
    if (a.key_theta != b.key_theta) return a.key_theta < b.key_theta;
    if (a.total_len != b.total_len) return a.total_len < b.total_len;
    if (a.word_w != b.word_w) return a.word_w < b.word_w;
    return a.word_m < b.word_m;
  });
  std::vector<MonoidElement> out;
  out.reserve(acc.size());
  for (auto& k : acc) out.push_back(std::move(k.elem));
  return out;
}

std::optional<QVec> monoid_apply(const MonoidElement& x, const QVec& lambda, long budget) {
  QVec image = x.sigma().act_weight(lambda);
  if (!face_contains(x.face(), image, budget)) return std::nullopt;
  return image;
}

}  // namespace kmw
