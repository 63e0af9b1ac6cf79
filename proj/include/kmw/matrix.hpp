#pragma once

#include <optional>
#include <vector>

#include "kmw/error.hpp"
#include "kmw/numeric.hpp"

namespace kmw {

// Dense row-major matrix over an exact GMP scalar.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return d_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_; }

  Mat operator*(const Mat& o) const {
    Mat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (int j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
      }
    return out;
  }

  Mat transposed() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  std::vector<T> col(int j) const {
    std::vector<T> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  std::vector<T> row(int i) const {
    std::vector<T> out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
    return out;
  }

  const std::vector<T>& data() const { return d_; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> d_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

QMat to_rat(const IMat& m);

IVec mat_mul(const IMat& m, const IVec& v);
QVec mat_mul(const IMat& m, const QVec& v);
QVec mat_mul(const QMat& m, const QVec& v);

Rat dot(const QVec& a, const QVec& b);
Rat dot(const QVec& a, const IVec& b);

int rank(QMat a);

// Solves A x = b exactly. Returns one solution (free variables set to 0) or
// nullopt when the system is inconsistent.
std::optional<QVec> solve(const QMat& a, const QVec& b);

QMat inverse(const QMat& a);

// Basis of the right null space { x : A x = 0 }.
std::vector<QVec> nullspace(const QMat& a);

// Exact inertia probe of a symmetric matrix via LDL^T with positive diagonal
// pivoting: positive_semidefinite plus the kernel dimension when it is.
struct SemidefiniteInfo {
  bool positive_semidefinite = false;
  int kernel_dim = 0;
  bool positive_definite() const { return positive_semidefinite && kernel_dim == 0; }
};
SemidefiniteInfo classify_symmetric(QMat s);

}  // namespace kmw
