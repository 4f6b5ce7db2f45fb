#pragma once

#include "kminv/cartan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kminv {

// Vertex order arranging the Dynkin diagram as a single cycle; index
// arithmetic on positions is modulo n.
struct CycleLabeling {
  std::vector<int> order;
};

// Outcome of checking that the diagram is one cycle whose every edge
// carries a -1 on at least one side.
struct CycleCheck {
  enum class Failure { none, not_a_cycle, edge_without_unit };
  std::optional<CycleLabeling> labeling;
  Failure failure = Failure::none;
  std::string detail;
};

// Requires n >= 3. The labeling starts at vertex 1 and proceeds toward its
// lower-indexed neighbor, fixing the orientation.
CycleCheck check_cycle_conditions(const CartanMatrix& A);

// Cartan matrix of the regular subalgebra on the roots
// beta_i = alpha_(i+1) + alpha_(i+2) (positions along the cycle):
//   b_ij = -a_{i+1,i+2} (a_{i+2,j+1} + a_{i+2,j+2})
//          -a_{i+2,i+1} (a_{i+1,j+1} + a_{i+1,j+2}).
// The result is validated; failures surface as NotACartanMatrix.
CartanMatrix subalgebra_cartan(const CartanMatrix& A, const CycleLabeling& cyc);

struct RegularChainResult {
  bool available = false;
  std::string reason;  // set when unavailable
  std::optional<CycleLabeling> labeling;
  std::optional<CartanMatrix> B;
  MatrixKind b_kind = MatrixKind::Indefinite;
  bool b_symmetrizable = false;
  bool b_hyperbolic = false;
};

// For an indecomposable, non-symmetrizable, hyperbolic matrix of rank >= 3:
// builds the subalgebra matrix via the cycle construction, or reports the
// rank-3 branch with an affine 2x2 principal submatrix as unavailable.
RegularChainResult build_regular_chain(const CartanMatrix& A);

}  // namespace kminv
