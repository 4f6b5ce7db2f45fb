#pragma once

#include "kminv/cartan.hpp"
#include "kminv/polynomial.hpp"
#include "kminv/ratmat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kminv {

// Basis of the degree-l subspace of reflection-invariant polynomials.
struct InvariantSpace {
  int degree = 0;
  std::vector<WeightPolynomial> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

// Stacks the maps f -> sigma_i(f) - f over all generators on the degree-l
// monomial basis and returns the kernel. Deterministic basis.
InvariantSpace invariant_space(const CartanMatrix& A, int l);

// Invariance test through the truncated Taylor expansion of each
// reflection: f is fixed by sigma_j iff
//   sum_{m=1..l} (-1)^(m+1)/m! * d^m f/dw_j^m * alpha_j^(m-1) = 0.
// Agrees with direct substitution on homogeneous input.
bool taylor_invariance_check(const CartanMatrix& A, const WeightPolynomial& f);

// Invariant symmetric bilinear form psi = sum lambda_ij w_i w_j with
// lambda_ii = d_i and 2 lambda_ij = a_ij lambda_jj; exists exactly when the
// matrix is symmetrizable.
struct BilinearForm {
  RatMat lambda;
  WeightPolynomial to_polynomial() const;
};

// nullopt when A is not symmetrizable. Requires indecomposable input.
std::optional<BilinearForm> bilinear_form(const CartanMatrix& A);

// sum_{j != var} a_{j,var} w_j : the image defect of w_var under its own
// reflection, sigma_var(w_var) = -w_var - omega_prime.
WeightPolynomial omega_prime(const CartanMatrix& A, int var);

// sum_{k != var} lambda_kk a_{var,k} w_k with lambda_kk read off psi_prime.
WeightPolynomial omega_star(const CartanMatrix& A, const WeightPolynomial& psi_prime, int var);

struct DegreeResult {
  int degree = 0;
  int dim = 0;
  int expected_dim = 0;
  bool proportional_to_power = true;  // only meaningful at even degrees of
                                      // a symmetrizable matrix
  bool pass = false;
  std::vector<WeightPolynomial> basis;
};

struct MainTheoremReport {
  bool symmetrizable = false;
  int max_degree = 0;
  std::vector<DegreeResult> degrees;
  bool all_pass = false;
};

// Degree-by-degree check that the invariant ring of an indecomposable
// indefinite matrix is generated by psi (symmetrizable) or trivial
// (non-symmetrizable), up to the given degree.
MainTheoremReport verify_main_theorem(const CartanMatrix& A, int max_degree);

struct RecurrenceReport {
  struct Item {
    std::string relation;
    int index = 0;        // layer index j, or i for cross relations
    int generator = -1;   // k for cross relations, -1 otherwise
    bool pass = false;
  };
  int degree = 0;
  std::vector<Item> items;
  bool all_pass = false;
};

// Checks the identities tying the layers of an invariant polynomial along
// the last variable: the reflection relation between layers, the
// cross-generator derivative relation, and the forced low-layer formulas.
RecurrenceReport verify_layer_recurrences(const CartanMatrix& A, const WeightPolynomial& f);

struct DivisibilityReport {
  struct Item {
    int basis_index = 0;
    int variable = 0;
    bool divides = false;  // pass means !divides (or the zero polynomial)
  };
  int degree = 0;
  std::vector<Item> items;
  bool all_pass = false;
};

// No fundamental weight may divide a nonzero invariant when the type is
// affine or indefinite.
DivisibilityReport check_divisibility_lemma(const CartanMatrix& A, int l);

}  // namespace kminv
