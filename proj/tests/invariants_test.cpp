#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include "kminv/invariants.hpp"
#include "kminv/series.hpp"
#include "kminv/weyl.hpp"

#include <functional>

using namespace kminv;
using kminv::testing::Rng;
using kminv::testing::make_cartan;
using kminv::testing::psi_rank2;
using kminv::testing::rank2;

namespace {

bool direct_invariance(const CartanMatrix& A, const WeightPolynomial& f) {
  for (int i = 0; i < A.rank(); ++i)
    if (weyl_action(A, i, f) != f) return false;
  return true;
}

WeightPolynomial random_homogeneous(Rng& rng, int nvars, int degree) {
  WeightPolynomial p(nvars);
  for (const ExpVec& e : monomials_of_degree(nvars, degree))
    if (rng(0, 1)) p.add_term(e, make_rat(rng(-3, 3)));
  return p;
}

CartanMatrix example_hyperbolic() {
  return make_cartan({{2, -1, -1}, {-1, 2, -1}, {-2, -1, 2}});
}

// det(I - t*M) for a small matrix, as a truncated rational series.
Series char_series(const RatMat& m, int order) {
  const int n = m.rows();
  // Cofactor expansion over polynomials in one variable t.
  std::function<Series(std::vector<int>, std::vector<int>)> det =
      [&](std::vector<int> rows, std::vector<int> cols) -> Series {
    if (rows.size() == 1) {
      Series s(order + 1);
      s[0] = (rows[0] == cols[0] ? 1 : 0);
      if (order >= 1) s[1] = -m.at(rows[0], cols[0]);
      return s;
    }
    Series acc(order + 1);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      Series entry(order + 1);
      entry[0] = (rows[0] == cols[k] ? 1 : 0);
      if (order >= 1) entry[1] = -m.at(rows[0], cols[k]);
      std::vector<int> sub_rows(rows.begin() + 1, rows.end());
      std::vector<int> sub_cols = cols;
      sub_cols.erase(sub_cols.begin() + static_cast<std::ptrdiff_t>(k));
      Series term = series_mul(entry, det(sub_rows, sub_cols), order);
      if (k % 2 == 1)
        for (Rat& c : term) c = -c;
      for (int d = 0; d <= order; ++d) acc[d] += term[d];
    }
    return acc;
  };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return det(all, all);
}

}  // namespace

TEST_CASE("degree-2 invariants of rank-2 matrices span the bilinear form") {
  InvariantSpace space = invariant_space(rank2(2, 3), 2);
  REQUIRE(space.dim() == 1);
  CHECK(proportional(space.basis[0], psi_rank2(2, 3)));

  CHECK(invariant_space(rank2(2, 3), 0).dim() == 1);  // constants
}

TEST_CASE("no linear invariants, and none in degree 2 without a symmetrizer") {
  CHECK(invariant_space(rank2(1, 1), 1).dim() == 0);
  CHECK(invariant_space(rank2(2, 2), 1).dim() == 0);
  CHECK(invariant_space(example_hyperbolic(), 1).dim() == 0);
  CHECK(invariant_space(example_hyperbolic(), 2).dim() == 0);
}

TEST_CASE("returned bases are invariant under direct substitution") {
  Rng rng(3);
  for (int trial = 0; trial < 12; ++trial) {
    CartanMatrix A = testing::random_indecomposable_cartan(rng, static_cast<int>(rng(2, 3)));
    int l = static_cast<int>(rng(0, 4));
    InvariantSpace space = invariant_space(A, l);
    for (const auto& f : space.basis) {
      CHECK(f.is_homogeneous());
      CHECK((f.is_zero() ? -1 : f.total_degree()) == (f.is_zero() ? -1 : l));
      CHECK(direct_invariance(A, f));
    }
    // Linear independence: coefficient matrix of the basis has full rank.
    if (space.dim() > 0) {
      auto mons = monomials_of_degree(A.rank(), l);
      RatMat coef(space.dim(), static_cast<int>(mons.size()));
      for (int b = 0; b < space.dim(); ++b)
        for (std::size_t c = 0; c < mons.size(); ++c)
          coef.at(b, static_cast<int>(c)) = space.basis[b].coefficient(mons[c]);
      CHECK(coef.rank() == space.dim());
    }
  }
}

TEST_CASE("taylor criterion examples") {
  CHECK(taylor_invariance_check(rank2(2, 3), psi_rank2(2, 3)));
  CHECK_FALSE(taylor_invariance_check(rank2(1, 1), WeightPolynomial::variable(2, 0)));
  CHECK_THROWS_AS(
      taylor_invariance_check(rank2(1, 1), WeightPolynomial::variable(2, 0) +
                                               psi_rank2(1, 1)),
      Error);  // inhomogeneous
}

TEST_CASE("taylor criterion agrees with direct substitution") {
  Rng rng(8);
  int seen_true = 0;
  for (int trial = 0; trial < 120; ++trial) {
    CartanMatrix A = testing::random_indecomposable_cartan(rng, 3);
    WeightPolynomial f = random_homogeneous(rng, 3, 1 + static_cast<int>(rng(0, 4)));
    bool direct = direct_invariance(A, f);
    if (direct) ++seen_true;
    CHECK(taylor_invariance_check(A, f) == direct);
  }
  // Also exercise genuinely invariant inputs of both parities of degree.
  for (long b = 2; b <= 4; ++b) {
    CartanMatrix A = rank2(2, b);
    WeightPolynomial psi = bilinear_form(A)->to_polynomial();
    CHECK(taylor_invariance_check(A, psi));
    CHECK(taylor_invariance_check(A, psi.pow(2)));
    ++seen_true;
  }
  CHECK(seen_true > 0);
}

TEST_CASE("bilinear form from the symmetrizer") {
  std::optional<BilinearForm> f23 = bilinear_form(rank2(2, 3));
  REQUIRE(f23);
  CHECK(proportional(f23->to_polynomial(), psi_rank2(2, 3)));
  CHECK(f23->lambda.is_symmetric());

  CHECK_FALSE(bilinear_form(example_hyperbolic()));

  CartanMatrix sym = make_cartan({{2, -2, -1}, {-2, 2, -1}, {-1, -1, 2}});
  std::optional<BilinearForm> fs = bilinear_form(sym);
  REQUIRE(fs);
  for (int i = 0; i < 3; ++i) {
    CHECK(fs->lambda.at(i, i) == 1);
    for (int j = 0; j < 3; ++j)
      CHECK(2 * fs->lambda.at(i, j) ==
            static_cast<long>(sym.entry(i, j)) * fs->lambda.at(j, j));
  }
  // The form is a degree-2 invariant.
  CHECK(direct_invariance(sym, fs->to_polynomial()));

  CartanMatrix split = make_cartan({{2, 0}, {0, 2}});
  CHECK_THROWS_AS(bilinear_form(split), Error);
}

TEST_CASE("dim I^2 is 1 exactly when a symmetrizer exists") {
  Rng rng(12);
  int produced = 0, nonsym = 0;
  while (produced < 20) {
    CartanMatrix A = testing::random_indecomposable_cartan(rng, static_cast<int>(rng(2, 4)));
    ++produced;
    bool sym = symmetrize(A).exists;
    if (!sym) ++nonsym;
    CHECK(invariant_space(A, 2).dim() == (sym ? 1 : 0));
  }
  CHECK(nonsym > 0);
}

TEST_CASE("main theorem at desk scale") {
  MainTheoremReport r = verify_main_theorem(rank2(2, 3), 6);
  CHECK(r.all_pass);
  CHECK(r.symmetrizable);
  WeightPolynomial psi = bilinear_form(rank2(2, 3))->to_polynomial();
  CHECK(proportional(r.degrees[3].basis.front(), psi.pow(2)));  // degree 4

  MainTheoremReport ex = verify_main_theorem(example_hyperbolic(), 6);
  CHECK(ex.all_pass);
  CHECK_FALSE(ex.symmetrizable);
  for (const auto& d : ex.degrees) CHECK(d.dim == 0);

  CHECK_THROWS_AS(verify_main_theorem(rank2(2, 2), 4), Error);   // affine
  CHECK_THROWS_AS(verify_main_theorem(rank2(1, 1), 4), Error);   // finite
}

TEST_CASE("even powers of the form exhaust the invariants") {
  CartanMatrix sym = make_cartan({{2, -2, -1}, {-2, 2, -1}, {-1, -1, 2}});
  WeightPolynomial psi = bilinear_form(sym)->to_polynomial();
  for (int m = 1; m <= 3; ++m) {
    InvariantSpace space = invariant_space(sym, 2 * m);
    REQUIRE(space.dim() == 1);
    CHECK(proportional(space.basis[0], psi.pow(m)));
  }
}

TEST_CASE("layer recurrences on the form and its square") {
  for (long b = 2; b <= 3; ++b) {
    CartanMatrix A = rank2(2, b);
    WeightPolynomial psi = bilinear_form(A)->to_polynomial();
    CHECK(verify_layer_recurrences(A, psi).all_pass);
    CHECK(verify_layer_recurrences(A, psi.pow(2)).all_pass);
  }

  CartanMatrix sym = make_cartan({{2, -2, -1}, {-2, 2, -1}, {-1, -1, 2}});
  WeightPolynomial psi3 = bilinear_form(sym)->to_polynomial();
  CHECK(verify_layer_recurrences(sym, psi3).all_pass);
  CHECK(verify_layer_recurrences(sym, psi3.pow(2)).all_pass);

  CHECK(verify_layer_recurrences(sym, WeightPolynomial::constant(3, Rat(5))).all_pass);
  CHECK_THROWS_AS(verify_layer_recurrences(sym, WeightPolynomial::variable(3, 0)), Error);
}

TEST_CASE("first layer identity is the forced multiple of omega_prime") {
  CartanMatrix A = rank2(2, 3);
  WeightPolynomial psi = bilinear_form(A)->to_polynomial();
  WeightPolynomial wp = omega_prime(A, 1);
  CHECK(wp == WeightPolynomial::variable(2, 0).scaled(Rat(-2)));  // a_{12} w1

  auto layers2 = layer_decompose(psi.pow(2), 1);
  CHECK(layers2[1] == layers2[0].scaled(Rat(2)) * wp);  // f1 = 2 f0 wp at degree 4
}

TEST_CASE("second-to-top layer follows the restricted form") {
  // A' = upper-left 2x2 of the symmetric indefinite fixture is affine with
  // invariant ring generated by psi'; the layers of psi obey
  // f_l = k psi'^m and f_{l-1} = k m psi'^(m-1) omega_star.
  CartanMatrix A = make_cartan({{2, -2, -1}, {-2, 2, -1}, {-1, -1, 2}});
  WeightPolynomial psi = bilinear_form(A)->to_polynomial();
  auto layers = layer_decompose(psi, 2);
  CartanMatrix Aprime = principal_submatrix(A, {0, 1});
  WeightPolynomial psi_prime_2 = bilinear_form(Aprime)->to_polynomial();
  // Lift psi' into three variables.
  WeightPolynomial psi_prime(3);
  for (const auto& [e, c] : psi_prime_2.terms()) psi_prime.add_term({e[0], e[1], 0}, c);

  REQUIRE(layers.size() == 3);
  CHECK(proportional(layers[2], psi_prime));
  Rat k = layers[2].terms().begin()->second / psi_prime.terms().begin()->second;
  CHECK(layers[2] == psi_prime.scaled(k));
  CHECK(layers[1] == omega_star(A, psi_prime, 2).scaled(k));
}

TEST_CASE("no dominant weight divides a nonzero invariant beyond finite type") {
  CHECK(check_divisibility_lemma(rank2(2, 2), 2).all_pass);
  CHECK(check_divisibility_lemma(rank2(2, 3), 4).all_pass);
  CHECK(check_divisibility_lemma(example_hyperbolic(), 3).all_pass);  // vacuous
  CHECK_THROWS_AS(check_divisibility_lemma(rank2(1, 1), 2), Error);
}

TEST_CASE("finite-type dimensions match the Molien average") {
  CartanMatrix a2 = rank2(1, 1);
  std::vector<WeylElement> elements;
  enumerate_by_length(a2, 3, &elements);
  REQUIRE(elements.size() == 6);

  const int order = 6;
  Series molien(order + 1);
  for (const WeylElement& w : elements) {
    Series inv = series_inverse(char_series(w.matrix, order), order);
    for (int d = 0; d <= order; ++d) molien[d] += inv[d];
  }
  for (int d = 0; d <= order; ++d) molien[d] /= 6;

  std::vector<long> expected{1, 0, 1, 1, 1, 1, 2};
  for (int d = 0; d <= order; ++d) {
    CHECK(molien[d] == expected[d]);
    CHECK(invariant_space(a2, d).dim() == expected[d]);
  }
}

TEST_CASE("block-diagonal dimensions multiply as a convolution") {
  CartanMatrix blocks = make_cartan(
      {{2, -1, 0, 0}, {-1, 2, 0, 0}, {0, 0, 2, -2}, {0, 0, -3, 2}});
  CartanMatrix a2 = rank2(1, 1);
  CartanMatrix a23 = rank2(2, 3);
  for (int l = 0; l <= 4; ++l) {
    int expected = 0;
    for (int p = 0; p <= l; ++p)
      expected += invariant_space(a2, p).dim() * invariant_space(a23, l - p).dim();
    CHECK(invariant_space(blocks, l).dim() == expected);
  }
}
