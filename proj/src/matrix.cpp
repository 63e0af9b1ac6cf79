#include "kmw/matrix.hpp"

#include <numeric>

namespace kmw {

IVec primitive(const QVec& v) {
  Int den_lcm = 1;
  for (const Rat& q : v) {
    Int den = q.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    den_lcm = den_lcm / g * den;
  }
  IVec out(v.size());
  Int num_gcd = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * den_lcm;
    out[i] = scaled.get_num();  // denominator is 1 after scaling
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), out[i].get_mpz_t());
  }
  if (num_gcd > 1) {
    for (Int& x : out) x /= num_gcd;
  }
  return out;
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const QVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

QMat to_rat(const IMat& m) {
  QMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

IVec mat_mul(const IMat& m, const IVec& v) {
  if (static_cast<int>(v.size()) != m.cols()) fail(Errc::DimensionMismatch, "matrix-vector size mismatch");
  IVec out(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

QVec mat_mul(const IMat& m, const QVec& v) {
  if (static_cast<int>(v.size()) != m.cols()) fail(Errc::DimensionMismatch, "matrix-vector size mismatch");
  QVec out(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i] += v[j] * m(i, j);
  return out;
}

QVec mat_mul(const QMat& m, const QVec& v) {
  if (static_cast<int>(v.size()) != m.cols()) fail(Errc::DimensionMismatch, "matrix-vector size mismatch");
  QVec out(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "dot size mismatch");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const QVec& a, const IVec& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "dot size mismatch");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

// Row echelon reduction in place; returns the pivot (row, col) list.
std::vector<std::pair<int, int>> echelon(QMat& a) {
  std::vector<std::pair<int, int>> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i) {
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rat inv = 1 / a(r, c);
    for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(QMat a) { return static_cast<int>(echelon(a).size()); }

std::optional<QVec> solve(const QMat& a, const QVec& b) {
  if (static_cast<int>(b.size()) != a.rows()) fail(Errc::DimensionMismatch, "solve size mismatch");
  QMat aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = echelon(aug);
  for (auto [r, c] : pivots)
    if (c == a.cols()) return std::nullopt;  // inconsistent row 0 = 1
  QVec x(a.cols());
  for (auto [r, c] : pivots) x[c] = aug(r, a.cols());
  return x;
}

QMat inverse(const QMat& a) {
  if (a.rows() != a.cols()) fail(Errc::DimensionMismatch, "inverse of non-square matrix");
  int n = a.rows();
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back().second >= n)
    fail(Errc::Internal, "inverse of singular matrix");
  QMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

std::vector<QVec> nullspace(const QMat& a) {
  QMat e = a;
  auto pivots = echelon(e);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto [r, c] : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (int c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    QVec v(a.cols());
    v[c] = 1;
    for (auto [r, pc] : pivots) v[pc] = -e(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

SemidefiniteInfo classify_symmetric(QMat s) {
  if (s.rows() != s.cols()) fail(Errc::DimensionMismatch, "classify_symmetric wants a square matrix");
  int n = s.rows();
  std::vector<bool> active(n, true);
  int remaining = n;
  while (remaining > 0) {
    int p = -1;
    for (int i = 0; i < n; ++i) {
      if (!active[i]) continue;
      if (s(i, i) < 0) return {false, 0};
      if (p < 0 && s(i, i) > 0) p = i;
    }
    if (p < 0) {
      // All active diagonal entries vanish: semidefinite iff the whole
      // remaining block is zero, and then it spans the kernel.
      for (int i = 0; i < n; ++i) {
        if (!active[i]) continue;
        for (int j = 0; j < n; ++j)
          if (active[j] && s(i, j) != 0) return {false, 0};
      }
      return {true, remaining};
    }
    Rat piv = s(p, p);
    active[p] = false;
    --remaining;
    for (int i = 0; i < n; ++i) {
      if (!active[i] || s(i, p) == 0) continue;
      Rat f = s(i, p) / piv;
      for (int j = 0; j < n; ++j)
        if (active[j]) s(i, j) -= f * s(p, j);
    }
  }
  return {true, 0};
}

}  // namespace kmw
