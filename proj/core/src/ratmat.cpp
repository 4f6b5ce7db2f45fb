#include "kminv/ratmat.hpp"

#include "kminv/errors.hpp"

#include <stdexcept>

namespace kminv {

RatMat::RatMat(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) fail(errc::dimension_mismatch, "matrix product dimension mismatch");
  RatMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

std::vector<Rat> RatMat::apply(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    fail(errc::dimension_mismatch, "matrix-vector dimension mismatch");
  std::vector<Rat> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

RatMat RatMat::transposed() const {
  RatMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

RatMat RatMat::scaled(const Rat& c) const {
  RatMat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = c * at(i, j);
  return r;
}

bool RatMat::operator==(const RatMat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool RatMat::operator<(const RatMat& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  for (std::size_t k = 0; k < e_.size(); ++k) {
    int c = cmp(e_[k], o.e_[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

bool RatMat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Rat RatMat::det() const {
  if (rows_ != cols_) fail(errc::dimension_mismatch, "determinant of a non-square matrix");
  RatMat m = *this;
  Rat d(1);
  for (int k = 0; k < rows_; ++k) {
    int pivot = -1;
    for (int i = k; i < rows_; ++i)
      if (m.at(i, k) != 0) { pivot = i; break; }
    if (pivot < 0) return Rat(0);
    if (pivot != k) {
      for (int j = k; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(k, j));
      d = -d;
    }
    d *= m.at(k, k);
    for (int i = k + 1; i < rows_; ++i) {
      if (m.at(i, k) == 0) continue;
      Rat f = m.at(i, k) / m.at(k, k);
      for (int j = k; j < cols_; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return d;
}

int RatMat::rank() const {
  RatMat m = *this;
  return static_cast<int>(rref(m).size());
}

std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    Rat inv = m.at(row, col);
    for (int j = 0; j < m.cols(); ++j) m.at(row, j) /= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Rat>> nullspace(const RatMat& m) {
  RatMat r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(static_cast<int>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace kminv
