#pragma once

#include "kminv/errors.hpp"
#include "kminv/rational.hpp"

#include <string>
#include <vector>

namespace kminv {

// Generalized Cartan matrix: integer square matrix with 2s on the diagonal,
// nonpositive off-diagonal entries and a symmetric zero pattern.
// Indices are 0-based in code; serialized forms and messages are 1-based.
class CartanMatrix {
 public:
  // Checks the three axioms; throws Error naming the offending position.
  static CartanMatrix validate(const std::vector<std::vector<long long>>& raw);

  int rank() const { return n_; }
  long long entry(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  bool operator==(const CartanMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const CartanMatrix& o) const { return !(*this == o); }

  std::vector<std::vector<long long>> entries() const;

 private:
  CartanMatrix(int n, std::vector<long long> a) : n_(n), a_(std::move(a)) {}
  int n_ = 0;
  std::vector<long long> a_;
};

enum class MatrixKind { Finite, Affine, Indefinite };

const char* kind_name(MatrixKind k);

// One kind per indecomposable block. For decomposable input `kind`
// aggregates: Indefinite if any block is, else Affine if any, else Finite.
struct MatrixType {
  MatrixKind kind;
  std::vector<std::vector<int>> blocks;
  std::vector<MatrixKind> block_kinds;
};

// Diagonal d with a_ij d_j = a_ji d_i for all i,j, normalized to d = 1 at
// the least index of each indecomposable block. exists == false (d empty)
// when no such d; that is a result, not an error.
struct Symmetrizer {
  bool exists = false;
  std::vector<Rat> d;
};

CartanMatrix principal_submatrix(const CartanMatrix& A, const std::vector<int>& indices);

// Connected components of the off-diagonal nonzero pattern, each sorted
// ascending, components ordered by least member.
std::vector<std::vector<int>> indecomposable_blocks(const CartanMatrix& A);

bool is_indecomposable(const CartanMatrix& A);

// Finite iff every principal minor is positive; Affine iff det = 0, rank
// n-1 and every proper principal minor is positive; Indefinite otherwise.
// All minors computed in exact integer arithmetic.
MatrixKind classify_indecomposable(const CartanMatrix& A);

MatrixType classify(const CartanMatrix& A);

Symmetrizer symmetrize(const CartanMatrix& A);

// True iff every proper principal submatrix is of finite or affine type.
// Input must be indecomposable and indefinite.
bool is_hyperbolic(const CartanMatrix& A);

// Smallest k whose removal leaves an indecomposable indefinite matrix.
// Input must be indecomposable, indefinite and non-hyperbolic; such a k
// always exists then, so an unsuccessful search aborts as an internal error.
int find_indefinite_principal(const CartanMatrix& A);

// ---- serialization ----

std::string matrix_to_json(const CartanMatrix& A);
CartanMatrix matrix_from_json(const std::string& text);
// Whitespace- or comma-separated integer grid, one row per line.
CartanMatrix matrix_from_text(const std::string& text);
// Sniffs JSON vs plain grid.
CartanMatrix matrix_from_string(const std::string& text);

}  // namespace kminv
