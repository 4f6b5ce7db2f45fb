#pragma once

#include "kminv/cartan.hpp"
#include "kminv/invariants.hpp"
#include "kminv/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kminv {

// 1 when the matrix is symmetrizable, else 0. Requires indecomposable input.
int epsilon(const CartanMatrix& A);

// Inertia of a symmetric rational matrix under congruence.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

Signature signature_of(const RatMat& symmetric);
// Signature of the invariant bilinear form; requires an indecomposable
// symmetrizable matrix.
Signature signature_tau(const CartanMatrix& A);

// Re-grades length counts into cohomological degree: coefficient of q^(2l)
// is counts[l], odd coefficients vanish.
std::vector<long long> flag_poincare(const GrowthSeries& growth);

// Even free-generator counts of the group cohomology, solved degree by
// degree from
//   P(t) = (1-t^2)^eps * (1-t)^(-n) * prod_k (1-t^k)^(-i_2k),  t = q^2.
// Keys are cohomological degrees 2k (k >= 2) up to `max_degree`.
// A negative extracted count aborts with diagnostics.
std::map<int, int> extract_generator_sequence(const CartanMatrix& A, const GrowthSeries& growth,
                                              int max_degree);

// Everything the rational homotopy type of the group and flag manifold
// depends on, at a finite cutoff.
struct HomotopyReport {
  int rank = 0;
  int epsilon = 0;
  std::optional<Signature> tau;          // present iff epsilon == 1
  GrowthSeries growth;                   // length-graded counts
  std::vector<long long> flag_series;    // q-graded, to order 2N
  std::map<int, int> even_generators;    // degree 2k -> i_2k
  int i3 = 0;                            // = epsilon; all other odd counts 0
  std::vector<long long> group_series;   // q-graded, to order 2N
  bool reconstruction_ok = false;        // product formula reproduces the flag series
};

// Requires an indecomposable indefinite matrix; series and generator data
// are computed to length cutoff N (cohomological order 2N).
HomotopyReport homotopy_report(const CartanMatrix& A, int max_length);

// P_G(q) = (1+q^3)^i3 * prod_k (1-q^2k)^(-i_2k) to the report's order.
std::vector<long long> group_poincare(const HomotopyReport& report);

struct CohomologyPresentation {
  int rank = 0;
  int epsilon = 0;
  int degree_cutoff = 0;
  std::optional<BilinearForm> relation;  // psi, present iff epsilon == 1
  std::map<int, int> even_generators;    // degree -> count, degrees >= 4
  int connectivity = 0;                   // of the group
  bool connectivity_is_lower_bound = false;
  int dim_pi_odd = 0;                     // = epsilon
};

// Generators and relations of the rational cohomology of the flag manifold
// and the group, to the given cohomological degree cutoff.
CohomologyPresentation cohomology_presentation(const CartanMatrix& A, int degree_cutoff);

// e.g. "Q[w1,w2]/<psi> (x) Q[z: deg 4 x 1, deg 6 x 2]"
std::string pretty_flag_cohomology(const CohomologyPresentation& p);
// e.g. "/\(y3) (x) Q[z: deg 6 x 2]"
std::string pretty_group_cohomology(const CohomologyPresentation& p);

}  // namespace kminv
