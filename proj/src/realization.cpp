#include "kmw/realization.hpp"

#include <algorithm>

namespace kmw {

namespace {

// Lexicographically first column set whose unit vectors complete the row
// space of A to all of Q^n. Greedy selection is exact for this matroid.
std::vector<int> default_completion(const Gcm& g) {
  int n = g.size();
  std::vector<int> cols;
  for (int c = 0; c < n && static_cast<int>(cols.size()) < n - g.rank(); ++c) {
    // Rows of A + already chosen unit rows + candidate unit row.
    QMat m(n + static_cast<int>(cols.size()) + 1, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Rat(g.entry(i, j));
    for (size_t k = 0; k < cols.size(); ++k) m(n + static_cast<int>(k), cols[k]) = 1;
    m(n + static_cast<int>(cols.size()), c) = 1;
    if (rank(m) == g.rank() + static_cast<int>(cols.size()) + 1) cols.push_back(c);
  }
  return cols;
}

}  // namespace

std::shared_ptr<const Realization> Realization::build(const Gcm& g) {
  return build_with_completion(g, default_completion(g));
}

std::shared_ptr<const Realization> Realization::build_with_completion(const Gcm& g, const std::vector<int>& cols) {
  int n = g.size();
  int l = g.rank();
  if (static_cast<int>(cols.size()) != n - l)
    fail(Errc::DimensionMismatch, "completion needs exactly n - rank columns");
  auto r = std::shared_ptr<Realization>(new Realization(g));
  r->dim_ = 2 * n - l;
  r->completion_cols_ = cols;
  std::sort(r->completion_cols_.begin(), r->completion_cols_.end());

  // alpha_(j, i) = alpha_i(h_j): the GCM on the coroot block, Kronecker rows
  // on the completion block.
  r->alpha_ = IMat(r->dim_, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) r->alpha_(j, i) = g.entry(j, i);
  for (int k = 0; k < n - l; ++k)
    for (int i = 0; i < n; ++i) r->alpha_(n + k, i) = (i == r->completion_cols_[k]) ? 1 : 0;
  {
    QMat check = to_rat(r->alpha_);
    if (rank(check) != n) fail(Errc::Internal, "completion columns do not make the simple roots independent");
  }

  // Invariant form on coweights: (h_i | h) = alpha_i(h) eps_i on the coroot
  // block, zero on the completion block, extended by symmetry.
  r->gram_h_ = QMat(r->dim_, r->dim_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < r->dim_; ++j) {
      Rat v = r->gcm_.symmetrizer()[i] * r->alpha_(j, i);
      r->gram_h_(i, j) = v;
      r->gram_h_(j, i) = v;
    }
  r->gram_hstar_ = inverse(r->gram_h_);

  // Pivot rows of alpha_ for solving alpha-coordinates.
  {
    std::vector<int> rows;
    for (int j = 0; j < r->dim_ && static_cast<int>(rows.size()) < n; ++j) {
      QMat probe(static_cast<int>(rows.size()) + 1, n);
      for (size_t k = 0; k < rows.size(); ++k)
        for (int c = 0; c < n; ++c) probe(static_cast<int>(k), c) = Rat(r->alpha_(rows[k], c));
      for (int c = 0; c < n; ++c) probe(static_cast<int>(rows.size()), c) = Rat(r->alpha_(j, c));
      if (rank(probe) == static_cast<int>(rows.size()) + 1) rows.push_back(j);
    }
    r->alpha_pivot_rows_ = rows;
    QMat sq(n, n);
    for (int k = 0; k < n; ++k)
      for (int c = 0; c < n; ++c) sq(k, c) = Rat(r->alpha_(rows[k], c));
    r->alpha_pivot_inv_ = inverse(sq);
  }

  // Height functional: solve alpha_^T phi = (1, ..., 1).
  {
    QMat at = to_rat(r->alpha_).transposed();
    QVec ones(n, Rat(1));
    auto phi = solve(at, ones);
    if (!phi) fail(Errc::Internal, "height functional must exist");
    r->height_functional_ = *phi;
  }

  {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (const auto& comp : components(g, all)) {
      ComponentInfo info;
      info.indices = comp;
      info.type = classify_component(g, comp);
      if (info.type == ComponentType::Affine) {
        int k = static_cast<int>(comp.size());
        QMat sub(k, k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) sub(a, b) = Rat(g.entry(comp[a], comp[b]));
        auto ker = nullspace(sub);
        if (ker.size() != 1) fail(Errc::Internal, "affine component needs a one-dimensional kernel");
        // lambda(c) is W-invariant for c = sum (k_i / eps_i) h_i over the
        // component; the kernel vector has uniformly signed entries.
        QVec scaled(k);
        for (int a = 0; a < k; ++a) scaled[a] = ker[0][a] / g.symmetrizer()[comp[a]];
        IVec prim = primitive(scaled);
        bool negative = false;
        for (const Int& c : prim)
          if (c < 0) negative = true;
        QVec embedded(r->dim_);
        for (int a = 0; a < k; ++a) embedded[comp[a]] = Rat(negative ? -prim[a] : prim[a]);
        info.kernel_coweight = primitive(embedded);
        for (int a = 0; a < k; ++a)
          if (info.kernel_coweight[comp[a]] <= 0) fail(Errc::Internal, "affine kernel coweight must be positive");
      }
      r->comps_.push_back(std::move(info));
    }
  }
  return r;
}

QVec Realization::simple_root(int i) const {
  if (i < 0 || i >= n()) fail(Errc::IndexOutOfRange, "simple_root index");
  QVec out(dim_);
  for (int j = 0; j < dim_; ++j) out[j] = Rat(alpha_(j, i));
  return out;
}

QVec Realization::fundamental_weight(int i) const {
  if (i < 0 || i >= dim_) fail(Errc::IndexOutOfRange, "fundamental_weight index");
  QVec out(dim_);
  out[i] = 1;
  return out;
}

std::optional<QVec> Realization::alpha_coords(const QVec& v) const {
  if (static_cast<int>(v.size()) != dim_) fail(Errc::DimensionMismatch, "alpha_coords dimension");
  QVec rhs(n());
  for (int k = 0; k < n(); ++k) rhs[k] = v[alpha_pivot_rows_[k]];
  QVec coeff = mat_mul(alpha_pivot_inv_, rhs);
  // Confirm v really lies in the span of the simple roots.
  for (int j = 0; j < dim_; ++j) {
    Rat acc;
    for (int i = 0; i < n(); ++i) acc += coeff[i] * alpha_(j, i);
    if (acc != v[j]) return std::nullopt;
  }
  return coeff;
}

bool Realization::is_dominant(const QVec& weight) const {
  if (static_cast<int>(weight.size()) != dim_) fail(Errc::DimensionMismatch, "is_dominant dimension");
  for (int i = 0; i < n(); ++i)
    if (weight[i] < 0) return false;
  return true;
}

Rat pairing(const Realization& r, const QVec& weight, const IVec& coweight) {
  if (static_cast<int>(weight.size()) != r.dim() || static_cast<int>(coweight.size()) != r.dim())
    fail(Errc::DimensionMismatch, "pairing dimension");
  Rat s;
  for (int j = 0; j < r.dim(); ++j) s += weight[j] * coweight[j];
  return s;
}

DomOrder dominance_compare(const Realization& r, const QVec& a, const QVec& b) {
  if (static_cast<int>(a.size()) != r.dim() || static_cast<int>(b.size()) != r.dim())
    fail(Errc::DimensionMismatch, "dominance_compare dimension");
  QVec diff = sub(b, a);
  if (is_zero(diff)) return DomOrder::Equal;
  auto k = r.alpha_coords(diff);
  if (!k) return DomOrder::Incomparable;
  bool all_nonneg = true, all_nonpos = true;
  for (const Rat& c : *k) {
    if (!is_integer(c)) return DomOrder::Incomparable;
    if (c < 0) all_nonneg = false;
    if (c > 0) all_nonpos = false;
  }
  if (all_nonneg) return DomOrder::LessEq;
  if (all_nonpos) return DomOrder::GreaterEq;
  return DomOrder::Incomparable;
}

QVec project_pj(const Realization& r, const QVec& weight, const std::vector<int>& j) {
  if (static_cast<int>(weight.size()) != r.dim()) fail(Errc::DimensionMismatch, "project_pj dimension");
  QVec out(r.dim());
  for (int idx : j) {
    if (idx < 0 || idx >= r.n()) fail(Errc::IndexOutOfRange, "project_pj index");
    out[idx] = weight[idx];
  }
  return out;
}

}  // namespace kmw
