#include "kmw/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kmw {

namespace {
constexpr long kStripBudget = 1000000;  // guards against malformed inputs
}

WeylElement WeylElement::identity(RealizationPtr r) {
  int d = r->dim();
  return WeylElement(std::move(r), IMat::identity(d), IMat::identity(d));
}

WeylElement WeylElement::simple_reflection(RealizationPtr r, int i) {
  if (i < 0 || i >= r->n()) fail(Errc::IndexOutOfRange, "simple_reflection index");
  int d = r->dim();
  IMat p = IMat::identity(d), h = IMat::identity(d);
  // sigma_i lambda = lambda - lambda(h_i) alpha_i ; sigma_i h = h - alpha_i(h) h_i.
  for (int row = 0; row < d; ++row) p(row, i) -= r->simple_roots()(row, i);
  for (int col = 0; col < d; ++col) h(i, col) -= r->simple_roots()(col, i);
  return WeylElement(std::move(r), std::move(p), std::move(h));
}

void check_same_realization(const WeylElement& a, const WeylElement& b) {
  if (a.realization() != b.realization())
    fail(Errc::RealizationMismatch, "elements belong to different realizations");
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  check_same_realization(*this, o);
  return WeylElement(r_, p_ * o.p_, h_ * o.h_);
}

WeylElement WeylElement::inverse() const {
  // Contragredience p^T h = 1 gives p^{-1} = h^T and h^{-1} = p^T.
  return WeylElement(r_, h_.transposed(), p_.transposed());
}

bool WeylElement::operator==(const WeylElement& o) const {
  check_same_realization(*this, o);
  return p_ == o.p_;
}

bool WeylElement::is_identity() const { return p_ == IMat::identity(r_->dim()); }

std::optional<int> coxeter_order(const Gcm& g, int i, int j) {
  if (i == j) fail(Errc::EqualIndices, "coxeter_order wants distinct indices");
  if (i < 0 || j < 0 || i >= g.size() || j >= g.size()) fail(Errc::IndexOutOfRange, "coxeter_order index");
  Int prod = g.entry(i, j) * g.entry(j, i);
  if (prod == 0) return 2;
  if (prod == 1) return 3;
  if (prod == 2) return 4;
  if (prod == 3) return 6;
  return std::nullopt;
}

bool sends_simple_root_negative(const WeylElement& w, int i) {
  QVec image = w.act_weight(w.realization()->simple_root(i));
  Rat h = dot(w.realization()->height_functional(), image);
  if (h == 0) fail(Errc::Internal, "real root with zero height");
  return h < 0;
}

std::vector<int> right_descents(const WeylElement& w) {
  std::vector<int> out;
  for (int i = 0; i < w.realization()->n(); ++i)
    if (sends_simple_root_negative(w, i)) out.push_back(i);
  return out;
}

std::vector<int> left_descents(const WeylElement& w) {
  WeylElement inv = w.inverse();
  return right_descents(inv);
}

namespace {

// Strips right descents (smallest index first), recording the strip order.
// x * sigma_{s_1} * ... * sigma_{s_m} = 1, so x = sigma_{s_m} ... sigma_{s_1}.
std::vector<int> strip_sequence(WeylElement x) {
  std::vector<int> strips;
  long guard = 0;
  while (!x.is_identity()) {
    if (++guard > kStripBudget) fail(Errc::Internal, "descent stripping exceeded its budget");
    int n = x.realization()->n();
    int found = -1;
    for (int i = 0; i < n; ++i)
      if (sends_simple_root_negative(x, i)) {
        found = i;
        break;
      }
    if (found < 0) fail(Errc::Internal, "non-identity element without descents");
    x = x * WeylElement::simple_reflection(x.realization(), found);
    strips.push_back(found);
  }
  return strips;
}

}  // namespace

long length(const WeylElement& w) { return static_cast<long>(strip_sequence(w).size()); }

std::vector<int> reduced_word(const WeylElement& w) {
  std::vector<int> strips = strip_sequence(w);
  std::reverse(strips.begin(), strips.end());
  return strips;
}

WeylElement from_word(RealizationPtr r, const std::vector<int>& word) {
  WeylElement x = WeylElement::identity(r);
  for (int i : word) x = x * WeylElement::simple_reflection(r, i);
  return x;
}

WeylElement min_coset_rep_right(const WeylElement& x, const std::vector<int>& j) {
  for (int i : j)
    if (i < 0 || i >= x.realization()->n()) fail(Errc::IndexOutOfRange, "min_coset_rep_right index");
  WeylElement y = x;
  long guard = 0;
  for (;;) {
    if (++guard > kStripBudget) fail(Errc::Internal, "coset stripping exceeded its budget");
    int found = -1;
    for (int i : j)
      if (sends_simple_root_negative(y, i)) {
        found = i;
        break;
      }
    if (found < 0) return y;
    y = y * WeylElement::simple_reflection(y.realization(), found);
  }
}

WeylElement min_coset_rep_left(const WeylElement& x, const std::vector<int>& j) {
  return min_coset_rep_right(x.inverse(), j).inverse();
}

bool is_in_parabolic(const WeylElement& x, const std::vector<int>& j) {
  return min_coset_rep_right(x, j).is_identity();
}

std::vector<RealRoot> real_roots_up_to(const RealizationPtr& r, int bound) {
  if (bound < 1) fail(Errc::IndexOutOfRange, "real_roots_up_to wants bound >= 1");
  int n = r->n();
  std::vector<WeylElement> gens;
  for (int i = 0; i < n; ++i) gens.push_back(WeylElement::simple_reflection(r, i));

  struct Item {
    QVec root;
    IVec alpha;
    IVec coroot;
  };
  std::map<std::vector<Int>, RealRoot> found;
  auto record = [&](const Item& it) {
    const std::vector<Int>& k = it.alpha;
    if (found.count(k)) return false;
    RealRoot rr;
    rr.root = it.root;
    rr.alpha = it.alpha;
    rr.coroot = it.coroot;
    long ht = 0;
    bool pos = true, neg = true;
    for (const Int& c : it.alpha) {
      ht += static_cast<long>(c.get_si());
      if (c < 0) pos = false;
      if (c > 0) neg = false;
    }
    if (pos == neg) fail(Errc::Internal, "real root with mixed signs");
    rr.height = ht;
    rr.positive = pos;
    found.emplace(k, std::move(rr));
    return true;
  };

  std::vector<Item> frontier;
  for (int i = 0; i < n; ++i) {
    Item it;
    it.root = r->simple_root(i);
    it.alpha = IVec(n);
    it.alpha[i] = 1;
    it.coroot = IVec(r->dim());
    it.coroot[i] = 1;
    record(it);
    frontier.push_back(std::move(it));
  }
  for (int depth = 0; depth < bound && !frontier.empty(); ++depth) {
    std::vector<Item> next;
    for (const Item& it : frontier) {
      for (int i = 0; i < n; ++i) {
        Item img;
        img.root = gens[i].act_weight(it.root);
        img.coroot = gens[i].act_coweight(it.coroot);
        // sigma_i in alpha coordinates: subtract (A k)_i on coordinate i.
        img.alpha = it.alpha;
        Int pair = 0;
        for (int a = 0; a < n; ++a) pair += r->gcm().entry(i, a) * it.alpha[a];
        img.alpha[i] -= pair;
        if (record(img)) next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }
  std::vector<RealRoot> out;
  out.reserve(found.size());
  for (auto& [k, v] : found) out.push_back(std::move(v));
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) {
    if (a.positive != b.positive) return a.positive > b.positive;
    if (a.height != b.height) return a.height < b.height;
    return a.alpha < b.alpha;
  });
  return out;
}

std::vector<RealRoot> positive_real_roots_by_height(const RealizationPtr& r, long bound) {
  int n = r->n();
  std::map<IVec, RealRoot> found;
  std::vector<RealRoot> frontier;
  for (int i = 0; i < n && 1 <= bound; ++i) {
    RealRoot rr;
    rr.root = r->simple_root(i);
    rr.alpha = IVec(n);
    rr.alpha[i] = 1;
    rr.coroot = IVec(r->dim());
    rr.coroot[i] = 1;
    rr.height = 1;
    rr.positive = true;
    found.emplace(rr.alpha, rr);
    frontier.push_back(std::move(rr));
  }
  std::vector<WeylElement> gens;
  for (int i = 0; i < n; ++i) gens.push_back(WeylElement::simple_reflection(r, i));
  while (!frontier.empty()) {
    std::vector<RealRoot> next;
    for (const RealRoot& it : frontier) {
      for (int i = 0; i < n; ++i) {
        RealRoot img;
        img.alpha = it.alpha;
        Int pair = 0;
        for (int a = 0; a < n; ++a) pair += r->gcm().entry(i, a) * it.alpha[a];
        img.alpha[i] -= pair;
        long ht = it.height - static_cast<long>(pair.get_si());
        if (ht < 1 || ht > bound) continue;
        bool pos = true;
        for (const Int& c : img.alpha)
          if (c < 0) pos = false;
        if (!pos || found.count(img.alpha)) continue;
        img.root = gens[i].act_weight(it.root);
        img.coroot = gens[i].act_coweight(it.coroot);
        img.height = ht;
        img.positive = true;
        found.emplace(img.alpha, img);
        next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }
  std::vector<RealRoot> out;
  for (auto& [k, v] : found) out.push_back(std::move(v));
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.alpha < b.alpha;
  });
  return out;
}

WeylShells::WeylShells(RealizationPtr r) : r_(std::move(r)) {}

std::vector<WeylElement> WeylShells::next() {
  if (exhausted_) return {};
  if (depth_ < 0) {
    depth_ = 0;
    frontier_ = {WeylElement::identity(r_)};
    seen_ = {frontier_[0].key()};
    std::sort(seen_.begin(), seen_.end());
    return frontier_;
  }
  std::vector<WeylElement> next_shell;
  for (const WeylElement& x : frontier_) {
    for (int i = 0; i < r_->n(); ++i) {
      WeylElement y = x * WeylElement::simple_reflection(r_, i);
      auto k = y.key();
      auto it = std::lower_bound(seen_.begin(), seen_.end(), k);
      if (it != seen_.end() && *it == k) continue;
      seen_.insert(it, k);
      next_shell.push_back(std::move(y));
    }
  }
  ++depth_;
  if (next_shell.empty()) exhausted_ = true;
  frontier_ = std::move(next_shell);
  return frontier_;
}

std::vector<WeylElement> enumerate_weyl(const RealizationPtr& r, int bound) {
  WeylShells shells(r);
  std::vector<std::pair<std::vector<int>, WeylElement>> acc;
  for (int d = 0; d <= bound; ++d) {
    auto shell = shells.next();
    if (shell.empty() && d > 0) break;
    for (auto& x : shell) acc.emplace_back(reduced_word(x), std::move(x));
  }
  std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<WeylElement> out;
  out.reserve(acc.size());
  for (auto& [w, x] : acc) out.push_back(std::move(x));
  return out;
}

}  // namespace kmw
