#include "kminv/invariants.hpp"

#include <map>

namespace kminv {

namespace {

Rat binomial(int n, int k) {
  if (k < 0 || k > n) return Rat(0);
  Rat r(1);
  for (int i = 0; i < k; ++i) r *= Rat(n - i) / Rat(i + 1);
  return r;
}

Rat factorial(int n) {
  Rat r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// sigma_k of the principal-submatrix world sitting inside the full variable
// space: w_k -> w_k - alpha'_k where alpha'_k omits the deleted variable.
WeightPolynomial restricted_weyl_action(const CartanMatrix& A, int k, int deleted,
                                        const WeightPolynomial& p) {
  const int n = A.rank();
  std::vector<WeightPolynomial> images;
  images.reserve(n);
  for (int j = 0; j < n; ++j) images.push_back(WeightPolynomial::variable(n, j));
  for (int j = 0; j < n; ++j) {
    if (j == deleted) continue;
    ExpVec e(n, 0);
    e[j] = 1;
    images[k].add_term(e, Rat(-static_cast<long>(A.entry(j, k))));
  }
  return p.substitute(images);
}

}  // namespace

InvariantSpace invariant_space(const CartanMatrix& A, int l) {
  if (l < 0) fail(errc::precondition_violated, "negative degree");
  const int n = A.rank();
  const std::vector<ExpVec> mons = monomials_of_degree(n, l);
  const int dim = static_cast<int>(mons.size());
  std::map<ExpVec, int, MonomialOrder> mon_index;
  for (int c = 0; c < dim; ++c) mon_index.emplace(mons[c], c);

  RatMat system(n * dim, dim);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < dim; ++c) {
      WeightPolynomial image = weyl_action(A, i, WeightPolynomial::monomial(mons[c], Rat(1)));
      image.add_term(mons[c], Rat(-1));
      for (const auto& [e, v] : image.terms()) system.at(i * dim + mon_index.at(e), c) = v;
    }

  InvariantSpace space;
  space.degree = l;
  for (const auto& coords : nullspace(system)) {
    WeightPolynomial p(n);
    for (int c = 0; c < dim; ++c) p.add_term(mons[c], coords[c]);
    space.basis.push_back(std::move(p));
  }
  return space;
}

bool taylor_invariance_check(const CartanMatrix& A, const WeightPolynomial& f) {
  if (!f.is_homogeneous()) fail(errc::not_homogeneous, "invariance test needs homogeneous input");
  if (f.is_zero()) return true;
  const int n = A.rank();
  if (f.nvars() != n) fail(errc::dimension_mismatch, "polynomial does not match the matrix rank");
  const int l = f.total_degree();
  for (int j = 0; j < n; ++j) {
    WeightPolynomial alpha = simple_root(A, j);
    WeightPolynomial acc(n);
    WeightPolynomial alpha_power = WeightPolynomial::constant(n, Rat(1));
    for (int m = 1; m <= l; ++m) {
      Rat coeff = (m % 2 == 1 ? Rat(1) : Rat(-1)) / factorial(m);
      acc += f.derivative(j, m).scaled(coeff) * alpha_power;
      alpha_power = alpha_power * alpha;
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

WeightPolynomial BilinearForm::to_polynomial() const {
  const int n = lambda.rows();
  WeightPolynomial p(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      ExpVec e(n, 0);
      e[i] += 1;
      e[j] += 1;
      p.add_term(e, i == j ? lambda.at(i, i) : 2 * lambda.at(i, j));
    }
  return p;
}

std::optional<BilinearForm> bilinear_form(const CartanMatrix& A) {
  if (!is_indecomposable(A))
    fail(errc::decomposable, "the bilinear form needs an indecomposable matrix");
  Symmetrizer s = symmetrize(A);
  if (!s.exists) return std::nullopt;
  const int n = A.rank();
  BilinearForm form{RatMat(n, n)};
  for (int i = 0; i < n; ++i) form.lambda.at(i, i) = s.d[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) form.lambda.at(i, j) = static_cast<long>(A.entry(i, j)) * s.d[j] / 2;
  return form;
}

WeightPolynomial omega_prime(const CartanMatrix& A, int var) {
  const int n = A.rank();
  if (var < 0 || var >= n) fail(errc::index_out_of_range, "variable index out of range");
  WeightPolynomial p(n);
  for (int j = 0; j < n; ++j) {
    if (j == var) continue;
    ExpVec e(n, 0);
    e[j] = 1;
    p.add_term(e, Rat(static_cast<long>(A.entry(j, var))));
  }
  return p;
}

WeightPolynomial omega_star(const CartanMatrix& A, const WeightPolynomial& psi_prime, int var) {
  const int n = A.rank();
  if (var < 0 || var >= n) fail(errc::index_out_of_range, "variable index out of range");
  if (psi_prime.nvars() != n)
    fail(errc::dimension_mismatch, "form does not match the matrix rank");
  WeightPolynomial p(n);
  for (int k = 0; k < n; ++k) {
    if (k == var) continue;
    ExpVec sq(n, 0);
    sq[k] = 2;
    Rat lambda_kk = psi_prime.coefficient(sq);
    if (lambda_kk == 0) continue;
    ExpVec e(n, 0);
    e[k] = 1;
    p.add_term(e, lambda_kk * static_cast<long>(A.entry(var, k)));
  }
  return p;
}

MainTheoremReport verify_main_theorem(const CartanMatrix& A, int max_degree) {
  if (!is_indecomposable(A)) fail(errc::decomposable, "needs an indecomposable matrix");
  if (classify_indecomposable(A) != MatrixKind::Indefinite)
    fail(errc::not_indefinite, "the statement covers indefinite matrices");

  MainTheoremReport report;
  report.max_degree = max_degree;
  std::optional<BilinearForm> psi = bilinear_form(A);
  report.symmetrizable = psi.has_value();
  WeightPolynomial psi_poly =
      psi ? psi->to_polynomial() : WeightPolynomial(A.rank());

  report.all_pass = true;
  for (int l = 1; l <= max_degree; ++l) {
    DegreeResult r;
    r.degree = l;
    InvariantSpace space = invariant_space(A, l);
    r.dim = space.dim();
    r.basis = space.basis;
    r.expected_dim = (report.symmetrizable && l % 2 == 0) ? 1 : 0;
    r.pass = r.dim == r.expected_dim;
    if (r.pass && r.expected_dim == 1) {
      r.proportional_to_power = proportional(space.basis.front(), psi_poly.pow(l / 2));
      r.pass = r.proportional_to_power;
    }
    report.all_pass = report.all_pass && r.pass;
    report.degrees.push_back(std::move(r));
  }
  return report;
}

RecurrenceReport verify_layer_recurrences(const CartanMatrix& A, const WeightPolynomial& f) {
  const int n = A.rank();
  if (f.nvars() != n) fail(errc::dimension_mismatch, "polynomial does not match the matrix rank");
  if (!f.is_homogeneous()) fail(errc::not_homogeneous, "layer recurrences need homogeneous input");
  for (int i = 0; i < n; ++i)
    if (weyl_action(A, i, f) != f)
      fail(errc::not_invariant, "layer recurrences apply to invariant polynomials");

  RecurrenceReport report;
  const int var = n - 1;
  const std::vector<WeightPolynomial> layers = layer_decompose(f, var);
  const int l = f.is_zero() ? 0 : f.total_degree();
  report.degree = l;
  const WeightPolynomial wp = omega_prime(A, var);

  // Reflection in the last variable forces each layer from the earlier ones:
  // f_j = sum_{i<=j} (-1)^(l-i) C(l-i, l-j) f_i wp^(j-i).
  for (int j = 0; j <= l; ++j) {
    WeightPolynomial rhs(n);
    for (int i = 0; i <= j; ++i) {
      Rat c = binomial(l - i, l - j) * ((l - i) % 2 == 0 ? 1 : -1);
      if (c != 0) rhs += layers[i].scaled(c) * wp.pow(j - i);
    }
    report.items.push_back({"layer_reflection", j, -1, layers[j] == rhs});
  }

  // Every other generator k relates sigma'_k(f_i) to derivatives of the
  // higher layers: sigma'_k(f_i) = sum_j (-a_{nk})^j / j! * d^j f_{i+j}/dw_k^j.
  for (int k = 0; k < n - 1; ++k) {
    Rat ank(-static_cast<long>(A.entry(var, k)));
    for (int i = 0; i <= l; ++i) {
      WeightPolynomial lhs = restricted_weyl_action(A, k, var, layers[i]);
      WeightPolynomial rhs(n);
      Rat power(1);
      for (int j = 0; i + j <= l; ++j) {
        if (j > 0) power *= ank;
        rhs += layers[i + j].derivative(k, j).scaled(power / factorial(j));
      }
      report.items.push_back({"cross_derivative", i, k, lhs == rhs});
    }
  }

  // Forced low layers at even degree.
  if (l % 2 == 0 && l >= 1) {
    WeightPolynomial expected = layers[0].scaled(binomial(l, 1) / 2) * wp;
    report.items.push_back({"layer1_identity", 1, -1, layers[1] == expected});
  }
  if (l % 2 == 0 && l >= 3) {
    WeightPolynomial expected = layers[2].scaled(binomial(l - 2, 1) / 2) * wp -
                                layers[0].scaled(binomial(l, 3) / 4) * wp.pow(3);
    report.items.push_back({"layer3_identity", 3, -1, layers[3] == expected});
  }

  report.all_pass = true;
  for (const auto& item : report.items) report.all_pass = report.all_pass && item.pass;
  return report;
}

DivisibilityReport check_divisibility_lemma(const CartanMatrix& A, int l) {
  if (!is_indecomposable(A)) fail(errc::decomposable, "needs an indecomposable matrix");
  if (classify_indecomposable(A) == MatrixKind::Finite)
    fail(errc::finite_type, "weight divisibility is only obstructed beyond finite type");

  DivisibilityReport report;
  report.degree = l;
  report.all_pass = true;
  InvariantSpace space = invariant_space(A, l);
  for (int b = 0; b < space.dim(); ++b)
    for (int v = 0; v < A.rank(); ++v) {
      bool divides = !space.basis[b].is_zero() && space.basis[b].divisible_by_variable(v);
      report.items.push_back({b, v, divides});
      report.all_pass = report.all_pass && !divides;
    }
  return report;
}

}  // namespace kminv
