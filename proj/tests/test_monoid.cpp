#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace kmw;
using namespace kmwtest;

namespace {

MonoidElement unit_of(const RealizationPtr& r) {
  return MonoidElement::from_weyl(WeylElement::identity(r));
}

}  // namespace

TEST_CASE("the Weyl group embeds as the unit group") {
  auto r = Realization::build(Gcm::validate(affine_a1()));
  CHECK(unit_of(r).is_unit());
  std::set<std::vector<Int>> seen;
  for (const WeylElement& w : enumerate_weyl(r, 8)) {
    MonoidElement x = MonoidElement::from_weyl(w);
    CHECK(x.face() == full_cone(r));
    CHECK(seen.insert(x.sigma().key()).second);  // injective on length <= 8
    for (const WeylElement& v : enumerate_weyl(r, 3)) {
      MulResult prod = multiply(x, MonoidElement::from_weyl(v));
      CHECK(prod.status == IsectStatus::Exact);
      CHECK(prod.elem == MonoidElement::from_weyl(w * v));
    }
  }
}

TEST_CASE("idempotents") {
  auto r = Realization::build(Gcm::validate(affine_a1()));
  Face ri = standard_face(r, {0, 1});
  CHECK(MonoidElement::idempotent(full_cone(r)) == unit_of(r));
  MonoidElement e = MonoidElement::idempotent(ri);
  MulResult sq = multiply(e, e);
  CHECK(sq.status == IsectStatus::Exact);
  CHECK(sq.elem == e);
}

TEST_CASE("e(R) e(S) = e(R n S) on catalog face pools") {
  for (const IMat& m : {affine_a1(), mixed3(), attached3()}) {
    auto r = Realization::build(Gcm::validate(m));
    std::vector<Face> pool;
    for (const SpecialSet& s : enumerate_special(r->gcm()))
      for (const WeylElement& w : enumerate_weyl(r, 2)) {
        Face f = translate(w, standard_face(r, s.theta));
        if (std::find(pool.begin(), pool.end(), f) == pool.end()) pool.push_back(std::move(f));
      }
    for (const Face& f1 : pool)
      for (const Face& f2 : pool) {
        auto isect = face_intersect(f1, f2);
        MulResult prod = multiply(MonoidElement::idempotent(f1), MonoidElement::idempotent(f2));
        if (isect.status != IsectStatus::Exact || prod.status != IsectStatus::Exact) continue;
        CHECK(prod.elem == MonoidElement::idempotent(isect.face));
      }
  }
}

TEST_CASE("conjugating an idempotent translates its face") {
  for (const IMat& m : {affine_a1(), mixed3(), attached3()}) {
    auto r = Realization::build(Gcm::validate(m));
    for (const SpecialSet& s : enumerate_special(r->gcm())) {
      Face f = standard_face(r, s.theta);
      for (const WeylElement& w : enumerate_weyl(r, 3)) {
        MonoidElement lhs =
            multiply(multiply(MonoidElement::from_weyl(w), MonoidElement::idempotent(f)).elem,
                     MonoidElement::from_weyl(w.inverse()))
                .elem;
        CHECK(lhs == MonoidElement::idempotent(translate(w, f)));
      }
    }
  }
}

TEST_CASE("unit is two-sided identity") {
  for (const IMat& m : catalog()) {
    auto r = Realization::build(Gcm::validate(m));
    for (const MonoidElement& x : enumerate_monoid(r, 3)) {
      CHECK(multiply(unit_of(r), x).elem == x);
      CHECK(multiply(x, unit_of(r)).elem == x);
    }
  }
}

TEST_CASE("congruence collapse in the affine A1 monoid") {
  auto r = Realization::build(Gcm::validate(affine_a1()));
  Face ri = standard_face(r, {0, 1});
  MonoidElement e = MonoidElement::idempotent(ri);
  // <R(I)> sigma = <R(I)> for every sigma: Z_W(R(I)) = W
  for (const WeylElement& w : enumerate_weyl(r, 5)) {
    MulResult prod = multiply(e, MonoidElement::from_weyl(w));
    CHECK(prod.status == IsectStatus::Exact);
    CHECK(prod.elem == e);
    CHECK(MonoidElement::make(ri, w) == e);
  }
}

TEST_CASE("normal forms: predicates, reassembly, uniqueness") {
  std::vector<IMat> matrices = catalog();
  matrices.push_back(attached3());  // nontrivial W-translates of R({0,1})
  for (const IMat& m : matrices) {
    auto r = Realization::build(Gcm::validate(m));
    int bound = (m == affine_a1()) ? 6 : 4;
    auto elems = enumerate_monoid(r, bound);
    std::vector<NormalForm> nf1, nf2;
    for (const MonoidElement& x : elems) {
      for (NfFlavor fl : {NfFlavor::Type1, NfFlavor::Type2}) {
        NormalForm nf = normal_form(x, fl);
        const auto& theta = nf.theta.theta;
        auto perp = orthogonal_complement(r->gcm(), theta);
        std::vector<int> stab;
        std::set_union(theta.begin(), theta.end(), perp.begin(), perp.end(), std::back_inserter(stab));
        if (fl == NfFlavor::Type1) {
          for (int i : stab) CHECK(!sends_simple_root_negative(nf.sigma1, i));
          for (int i : theta) CHECK(!sends_simple_root_negative(nf.sigma2.inverse(), i));
          nf1.push_back(nf);
        } else {
          for (int i : theta) CHECK(!sends_simple_root_negative(nf.sigma1, i));
          for (int i : stab) CHECK(!sends_simple_root_negative(nf.sigma2.inverse(), i));
          nf2.push_back(nf);
        }
        CHECK(reassemble(nf) == x);
      }
    }
    // uniqueness: distinct elements have distinct forms, in both flavors
    auto same = [](const NormalForm& a, const NormalForm& b) {
      return a.theta.theta == b.theta.theta && a.sigma1 == b.sigma1 && a.sigma2 == b.sigma2;
    };
    for (size_t i = 0; i < elems.size(); ++i)
      for (size_t j = i + 1; j < elems.size(); ++j) {
        CHECK(!(elems[i] == elems[j]));
        CHECK(!same(nf1[i], nf1[j]));
        CHECK(!same(nf2[i], nf2[j]));
      }
  }
}

TEST_CASE("normal form of the absorbing affine idempotent is trivial") {
  auto r = Realization::build(Gcm::validate(affine_a1()));
  MonoidElement e = MonoidElement::idempotent(standard_face(r, {0, 1}));
  for (NfFlavor fl : {NfFlavor::Type1, NfFlavor::Type2}) {
    NormalForm nf = normal_form(e, fl);
    CHECK(nf.sigma1.is_identity());
    CHECK(nf.sigma2.is_identity());
    CHECK(nf.theta.theta == std::vector<int>{0, 1});
  }
  NormalForm u = normal_form(unit_of(r), NfFlavor::Type1);
  CHECK(u.sigma1.is_identity());
  CHECK(u.theta.theta.empty());
  CHECK(u.sigma2.is_identity());
}

TEST_CASE("orbit labels") {
  auto r = Realization::build(Gcm::validate(affine_a1()));
  CHECK(orbit_label(unit_of(r)).theta.empty());
  Face ri = standard_face(r, {0, 1});
  CHECK(orbit_label(MonoidElement::idempotent(ri)).theta == std::vector<int>{0, 1});
  // invariance under the two-sided unit action
  for (const MonoidElement& x : enumerate_monoid(r, 3))
    for (const WeylElement& s : enumerate_weyl(r, 2)) {
      MonoidElement y =
          multiply(MonoidElement::from_weyl(s), multiply(x, MonoidElement::from_weyl(s)).elem).elem;
      CHECK(orbit_label(y).theta == orbit_label(x).theta);
    }
}

TEST_CASE("parabolic membership with witnesses") {
  auto r = Realization::build(Gcm::validate(affine_a1()));
  for (const std::vector<int>& j : {std::vector<int>{}, {0}, {1}, {0, 1}})
    CHECK(parabolic_decompose(unit_of(r), j).member);

  MonoidElement e = MonoidElement::idempotent(standard_face(r, {0, 1}));
  CHECK(parabolic_decompose(e, {0, 1}).member);
  CHECK(!parabolic_decompose(e, {0}).member);  // {0,1} not inside {0}^inf = {}

  // the parabolic submonoid of {0} is just W_{0}: its elements within bound
  for (const MonoidElement& x : enumerate_monoid(r, 4)) {
    ParabolicWitness w = parabolic_decompose(x, {0});
    bool expected = x.face() == full_cone(r) && is_in_parabolic(x.sigma(), {0});
    CHECK(w.member == expected);
    if (w.member) {
      CHECK(is_in_parabolic(*w.u, {0}));
      CHECK(is_in_parabolic(*w.v, {0}));
      NormalForm nf{NfFlavor::Type1, *w.u, *w.xi, *w.v};
      CHECK(reassemble(nf) == x);
    }
  }
}

TEST_CASE("a standard idempotent lies in a parabolic submonoid iff its type sits under J-infinity") {
  for (const IMat& m : catalog()) {
    auto r = Realization::build(Gcm::validate(m));
    for (const SpecialSet& xi : enumerate_special(r->gcm())) {
      MonoidElement e = MonoidElement::idempotent(standard_face(r, xi.theta));
      for (unsigned mask = 0; mask < (1u << r->n()); ++mask) {
        std::vector<int> j;
        for (int i = 0; i < r->n(); ++i)
          if (mask & (1u << i)) j.push_back(i);
        auto jinf = infinite_part(r->gcm(), j);
        bool expected = std::includes(jinf.begin(), jinf.end(), xi.theta.begin(), xi.theta.end());
        CHECK(parabolic_decompose(e, j).member == expected);
      }
    }
  }
}

TEST_CASE("enumeration counts") {
  auto a2r = Realization::build(Gcm::validate(a2()));
  CHECK(enumerate_monoid(a2r, 3).size() == 6);  // the whole finite Weyl group
  CHECK(enumerate_monoid(a2r, 9).size() == 6);

  auto aff = Realization::build(Gcm::validate(affine_a1()));
  for (int k : {0, 1, 2, 3, 4, 5, 6}) {
    // 2k + 1 units plus the absorbing idempotent class
    CHECK(enumerate_monoid(aff, k).size() == static_cast<size_t>(2 * k + 2));
  }

  // bound 0: unit plus one idempotent per special set
  auto mix = Realization::build(Gcm::validate(mixed3()));
  CHECK(enumerate_monoid(mix, 0).size() == 2);
}

TEST_CASE("enumeration is deduplicated and closed under canonical forms") {
  for (const IMat& m : {affine_a2(), indef2(), attached3()}) {
    auto r = Realization::build(Gcm::validate(m));
    auto elems = enumerate_monoid(r, 3);
    for (size_t i = 0; i < elems.size(); ++i) {
      CHECK(MonoidElement::make(elems[i].face(), elems[i].sigma()) == elems[i]);
      for (size_t j = i + 1; j < elems.size(); ++j) CHECK(!(elems[i] == elems[j]));
    }
  }
}

TEST_CASE("monoid laws: associativity on sampled triples") {
  std::mt19937 rng(23);
  for (const IMat& m : catalog()) {
    auto r = Realization::build(Gcm::validate(m));
    auto elems = enumerate_monoid(r, 3);
    std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
      const MonoidElement &x = elems[pick(rng)], &y = elems[pick(rng)], &z = elems[pick(rng)];
      MulResult xy = multiply(x, y), yz = multiply(y, z);
      REQUIRE(xy.status == IsectStatus::Exact);
      REQUIRE(yz.status == IsectStatus::Exact);
      MulResult l = multiply(xy.elem, z), r2 = multiply(x, yz.elem);
      REQUIRE(l.status == IsectStatus::Exact);
      REQUIRE(r2.status == IsectStatus::Exact);
      CHECK(l.elem == r2.elem);
    }
  }
}

TEST_CASE("partial action on weights") {
  auto r = Realization::build(Gcm::validate(affine_a1()));
  MonoidElement e = MonoidElement::idempotent(standard_face(r, {0, 1}));
  QVec l3 = r->fundamental_weight(2);
  auto img = monoid_apply(e, l3);
  REQUIRE(img.has_value());
  CHECK(*img == l3);
  CHECK(!monoid_apply(e, r->fundamental_weight(0)).has_value());
  QVec lam = qvec({2, 1, 0});
  auto u = monoid_apply(unit_of(r), lam);
  REQUIRE(u.has_value());
  CHECK(*u == lam);
}

TEST_CASE("apply is functorial for sampled pairs") {
  for (const IMat& m : {affine_a1(), a2(), mixed3()}) {
    auto r = Realization::build(Gcm::validate(m));
    auto elems = enumerate_monoid(r, 3);
    std::vector<QVec> pts;
    for (const SpecialSet& s : enumerate_special(r->gcm())) {
      QVec p(r->dim(), Rat(1));
      for (int i : s.theta) p[i] = 0;
      for (const WeylElement& w : enumerate_weyl(r, 2)) pts.push_back(w.act_weight(p));
    }
    for (const MonoidElement& x : elems)
      for (const MonoidElement& y : elems) {
        MulResult xy = multiply(x, y);
        if (xy.status != IsectStatus::Exact) continue;
        for (const QVec& p : pts) {
          auto via_y = monoid_apply(y, p);
          std::optional<QVec> composed;
          if (via_y) composed = monoid_apply(x, *via_y);
          CHECK(monoid_apply(xy.elem, p) == composed);
        }
      }
  }
}

TEST_CASE("invertible elements are exactly the full-cone classes") {
  auto r = Realization::build(Gcm::validate(affine_a1()));
  auto elems = enumerate_monoid(r, 4);
  for (const MonoidElement& x : elems) {
    bool invertible = false;
    for (const MonoidElement& y : elems) {
      MulResult xy = multiply(x, y), yx = multiply(y, x);
      if (xy.status == IsectStatus::Exact && yx.status == IsectStatus::Exact &&
          xy.elem == unit_of(r) && yx.elem == unit_of(r))
        invertible = true;
    }
    CHECK(invertible == x.is_unit());
  }
}

TEST_CASE("exported invariants do not depend on the completion-column choice") {
  for (const IMat& m : {affine_a1(), mixed3()}) {
    Gcm g = Gcm::validate(m);
    auto lex = Realization::build(g);
    std::vector<int> alt_cols;
    for (int c = g.size() - 1; c >= 0 && static_cast<int>(alt_cols.size()) < g.size() - g.rank(); --c) {
      std::vector<int> probe = alt_cols;
      probe.push_back(c);
      try {
        (void)Realization::build_with_completion(g, probe);
        alt_cols = probe;
      } catch (const Error&) {
        // column does not extend the row basis; keep scanning
      }
    }
    auto alt = Realization::build_with_completion(g, alt_cols);
    CHECK(alt->completion_columns() != lex->completion_columns());
    for (int k : {0, 1, 2, 3, 4}) {
      auto el = enumerate_monoid(lex, k), ea = enumerate_monoid(alt, k);
      REQUIRE(el.size() == ea.size());
      for (size_t i = 0; i < el.size(); ++i) {
        CHECK(orbit_label(el[i]).theta == orbit_label(ea[i]).theta);
        CHECK(reduced_word(el[i].sigma()) == reduced_word(ea[i].sigma()));
      }
    }
    for (const SpecialSet& s : enumerate_special(g)) {
      Face f = standard_face(alt, s.theta);
      CHECK(smallest_face(alt, relint_point(f)) == f);
    }
    for (int i = 0; i < g.size(); ++i)
      for (int j = 0; j < g.size(); ++j) {
        if (i == j) continue;
        CHECK(coxeter_order(lex->gcm(), i, j) == coxeter_order(alt->gcm(), i, j));
      }
  }
}

TEST_CASE("multiply surfaces a starved face budget through its status") {
  auto r = Realization::build(Gcm::validate(coupled5()));
  MonoidElement e12 = MonoidElement::idempotent(standard_face(r, {0, 1}));
  MonoidElement moved = MonoidElement::make(
      translate(WeylElement::simple_reflection(r, 4), standard_face(r, {2, 3})),
      WeylElement::identity(r));
  IsectOptions starved;
  starved.length_budget = 0;
  MulResult low = multiply(e12, moved, starved);
  CHECK(low.status == IsectStatus::BudgetExhausted);
  CHECK(face_leq(low.elem.face(), e12.face()));
  MulResult high = multiply(e12, moved);
  CHECK(high.status == IsectStatus::Exact);
  CHECK(high.elem.face() == standard_face(r, {0, 1, 2, 3, 4}));
}

TEST_CASE("enumeration partitions by orbit label into the special sets") {
  for (const IMat& m : catalog()) {
    auto r = Realization::build(Gcm::validate(m));
    std::set<std::vector<int>> labels;
    for (const MonoidElement& x : enumerate_monoid(r, 3)) labels.insert(orbit_label(x).theta);
    std::set<std::vector<int>> specials;
    for (const SpecialSet& s : enumerate_special(r->gcm())) specials.insert(s.theta);
    CHECK(labels == specials);  // the idempotent of every special type appears at bound 0
  }
}
