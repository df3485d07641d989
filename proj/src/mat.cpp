#include "mat.hpp"

#include <cassert>

namespace spq {

Mat Mat::identity(int n, const Scalar& diag) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = diag;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

Mat Mat::operator+(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  assert(cols_ == o.rows_);
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Mat Mat::mul_scalar(const Scalar& s) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
  assert(int(v.size()) == cols_);
  std::vector<Scalar> r(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    Scalar acc;
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[size_t(j)].is_zero()) continue;
      acc += at(i, j) * v[size_t(j)];
    }
    r[size_t(i)] = acc;
  }
  return r;
}

std::vector<int> rref_in_place(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = col; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(sel, c));
    Scalar inv = m.at(row, col).inv();
    for (int c = col; c < m.cols(); ++c)
      if (!m.at(row, c).is_zero()) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Scalar f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c)
        if (!m.at(row, c).is_zero()) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int mat_rank(Mat m) { return int(rref_in_place(m).size()); }

Mat kernel_basis(const Mat& m) {
  Mat r = m;
  std::vector<int> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(size_t(m.cols()), false);
  for (int p : pivots) is_pivot[size_t(p)] = true;
  int nk = m.cols() - int(pivots.size());
  Mat k(m.cols(), nk);
  int kc = 0;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[size_t(free_col)]) continue;
    k.at(free_col, kc) = Scalar(1);
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      k.at(pivots[pr], kc) = -r.at(int(pr), free_col);
    ++kc;
  }
  return k;
}

std::vector<Scalar> solve_linear(const Mat& m, const std::vector<Scalar>& b, bool* unique) {
  assert(int(b.size()) == m.rows());
  Mat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[size_t(i)];
  }
  std::vector<int> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return {};  // inconsistent
  if (unique) *unique = int(pivots.size()) == m.cols();
  std::vector<Scalar> x(size_t(m.cols()));
  for (size_t pr = 0; pr < pivots.size(); ++pr) x[size_t(pivots[pr])] = aug.at(int(pr), m.cols());
  return x;
}

Mat kronecker(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i1 = 0; i1 < a.rows(); ++i1)
    for (int j1 = 0; j1 < a.cols(); ++j1) {
      if (a.at(i1, j1).is_zero()) continue;
      for (int i2 = 0; i2 < b.rows(); ++i2)
        for (int j2 = 0; j2 < b.cols(); ++j2) {
          if (b.at(i2, j2).is_zero()) continue;
          r.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = a.at(i1, j1) * b.at(i2, j2);
        }
    }
  return r;
}

}  // namespace spq
