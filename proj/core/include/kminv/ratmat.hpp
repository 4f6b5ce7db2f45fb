#pragma once

#include "kminv/rational.hpp"

#include <vector>

namespace kminv {

// Dense matrix over exact rationals.
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols);
  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return e_[index(i, j)]; }
  const Rat& at(int i, int j) const { return e_[index(i, j)]; }

  RatMat operator*(const RatMat& o) const;
  std::vector<Rat> apply(const std::vector<Rat>& v) const;
  RatMat transposed() const;
  RatMat scaled(const Rat& c) const;

  bool operator==(const RatMat& o) const;
  bool operator!=(const RatMat& o) const { return !(*this == o); }
  // Total order so matrices can key ordered containers.
  bool operator<(const RatMat& o) const;

  bool is_symmetric() const;
  Rat det() const;  // square input only
  int rank() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

// Reduced row echelon form in place; returns the pivot column indices.
std::vector<int> rref(RatMat& m);

// Kernel basis in the canonical free-variable form: one vector per free
// column (ascending), carrying a 1 there and the forced pivot entries.
std::vector<std::vector<Rat>> nullspace(const RatMat& m);

}  // namespace kminv
