#pragma once

#include <vector>

#include "scalar.hpp"

namespace spq {

// Dense matrix over the scalar field.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {}

  static Mat identity(int n, const Scalar& diag = Scalar(1));

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return a_[size_t(r) * size_t(cols_) + size_t(c)]; }
  const Scalar& at(int r, int c) const { return a_[size_t(r) * size_t(cols_) + size_t(c)]; }

  bool is_zero() const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat mul_scalar(const Scalar& s) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  // v -> M v on column vectors.
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  int rows_, cols_;
  std::vector<Scalar> a_;
};

// Row echelon reduction in place (reduced form: pivots 1, pivot columns
// cleared).  Returns pivot columns in order.  Deterministic.
std::vector<int> rref_in_place(Mat& m);

int mat_rank(Mat m);

// Basis of the right kernel {v : M v = 0}, as columns of the result.
Mat kernel_basis(const Mat& m);

// Solve M x = b; returns empty vector if inconsistent.  If the solution is
// not unique, *unique is set false (when provided) and one solution returned.
std::vector<Scalar> solve_linear(const Mat& m, const std::vector<Scalar>& b, bool* unique = nullptr);

// Tensor (Kronecker) product, row-major index convention:
// (i1*rows2+i2, j1*cols2+j2) = a(i1,j1)*b(i2,j2).
Mat kronecker(const Mat& a, const Mat& b);

}  // namespace spq
