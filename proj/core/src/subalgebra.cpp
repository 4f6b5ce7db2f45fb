#include "kminv/subalgebra.hpp"

#include <algorithm>

namespace kminv {

CycleCheck check_cycle_conditions(const CartanMatrix& A) {
  const int n = A.rank();
  if (n < 3) fail(errc::rank_too_small, "a cycle needs rank at least 3");

  CycleCheck result;
  std::vector<std::vector<int>> nbr(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && A.entry(i, j) != 0) nbr[i].push_back(j);
  for (int i = 0; i < n; ++i)
    if (nbr[i].size() != 2) {
      result.failure = CycleCheck::Failure::not_a_cycle;
      result.detail = "vertex " + std::to_string(i + 1) + " has degree " +
                      std::to_string(nbr[i].size());
      return result;
    }

  // All degrees are 2; walking from vertex 1 toward its lower neighbor
  // either closes the full cycle or exposes a disconnected diagram.
  std::vector<int> order{0, std::min(nbr[0][0], nbr[0][1])};
  while (static_cast<int>(order.size()) < n) {
    int prev = order[order.size() - 2], cur = order.back();
    int next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
    if (next == 0) break;
    order.push_back(next);
  }
  if (static_cast<int>(order.size()) < n) {
    result.failure = CycleCheck::Failure::not_a_cycle;
    result.detail = "diagram is not connected as a single cycle";
    return result;
  }

  for (int p = 0; p < n; ++p) {
    int u = order[p], v = order[(p + 1) % n];
    if (A.entry(u, v) != -1 && A.entry(v, u) != -1) {
      result.failure = CycleCheck::Failure::edge_without_unit;
      result.detail = "edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                      ") has no -1 entry";
      return result;
    }
  }
  result.labeling = CycleLabeling{std::move(order)};
  return result;
}

CartanMatrix subalgebra_cartan(const CartanMatrix& A, const CycleLabeling& cyc) {
  const int n = A.rank();
  if (static_cast<int>(cyc.order.size()) != n)
    fail(errc::precondition_violated, "labeling size disagrees with the rank");
  std::vector<int> seen(n, 0);
  for (int v : cyc.order) {
    if (v < 0 || v >= n || seen[v]++)
      fail(errc::precondition_violated, "labeling is not a permutation of the vertices");
  }
  // The labeling must match the adjacency pattern: consecutive vertices
  // joined, all other pairs disjoint.
  auto rel = [&](int i, int j) { return A.entry(cyc.order[(i % n + n) % n], cyc.order[(j % n + n) % n]); };
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      int gap = std::min((q - p + n) % n, (p - q + n) % n);
      bool joined = rel(p, q) != 0;
      if (gap == 1 && !joined)
        fail(errc::precondition_violated, "cycle order skips a missing edge");
      if (gap > 1 && joined)
        fail(errc::precondition_violated, "chord found; diagram is not the labeled cycle");
    }

  std::vector<std::vector<long long>> b(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b[i][j] = -rel(i + 1, i + 2) * (rel(i + 2, j + 1) + rel(i + 2, j + 2)) -
                rel(i + 2, i + 1) * (rel(i + 1, j + 1) + rel(i + 1, j + 2));
  try {
    return CartanMatrix::validate(b);
  } catch (const Error& e) {
    fail(errc::not_a_cartan_matrix,
         std::string("subalgebra matrix fails the axioms: ") + e.what());
  }
}

RegularChainResult build_regular_chain(const CartanMatrix& A) {
  const int n = A.rank();
  if (n < 3) fail(errc::precondition_violated, "chain construction needs rank at least 3");
  if (!is_indecomposable(A))
    fail(errc::precondition_violated, "chain construction needs an indecomposable matrix");
  if (symmetrize(A).exists)
    fail(errc::precondition_violated, "chain construction applies to non-symmetrizable matrices");
  if (classify_indecomposable(A) != MatrixKind::Indefinite || !is_hyperbolic(A))
    fail(errc::precondition_violated, "chain construction applies to hyperbolic matrices");

  RegularChainResult result;
  if (n == 3) {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (classify_indecomposable(principal_submatrix(A, {i, j})) == MatrixKind::Affine) {
          result.reason = "affine 2x2 branch: handled by rank reduction, not by the cycle construction";
          return result;
        }
  }

  CycleCheck check = check_cycle_conditions(A);
  if (!check.labeling)
    fail(errc::internal_error,
         "cycle conditions fail on a non-symmetrizable hyperbolic matrix: " + check.detail);
  result.available = true;
  result.labeling = check.labeling;
  result.B = subalgebra_cartan(A, *check.labeling);
  result.b_kind = classify(*result.B).kind;
  result.b_symmetrizable = symmetrize(*result.B).exists;
  result.b_hyperbolic = result.b_kind == MatrixKind::Indefinite &&
                        is_indecomposable(*result.B) && is_hyperbolic(*result.B);
  return result;
}

}  // namespace kminv
