#pragma once

#include "kminv/cartan.hpp"
#include "kminv/errors.hpp"
#include "kminv/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace kminv {

using ExpVec = std::vector<int>;

// Graded lexicographic order with w1 > w2 > ... > wn, leading monomial first.
struct MonomialOrder {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial over Rat in the fundamental-weight
// variables w1..wn. Zero coefficients are never stored; term iteration
// follows the canonical order above.
class WeightPolynomial {
 public:
  using TermMap = std::map<ExpVec, Rat, MonomialOrder>;

  explicit WeightPolynomial(int nvars = 0) : nvars_(nvars) {}
  static WeightPolynomial constant(int nvars, const Rat& c);
  static WeightPolynomial variable(int nvars, int var);
  static WeightPolynomial monomial(const ExpVec& exponents, const Rat& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;     // -1 for the zero polynomial
  bool is_homogeneous() const;  // zero counts as homogeneous
  const TermMap& terms() const { return terms_; }
  Rat coefficient(const ExpVec& e) const;

  WeightPolynomial& operator+=(const WeightPolynomial& o);
  WeightPolynomial& operator-=(const WeightPolynomial& o);
  WeightPolynomial operator+(const WeightPolynomial& o) const;
  WeightPolynomial operator-(const WeightPolynomial& o) const;
  WeightPolynomial operator-() const;
  WeightPolynomial operator*(const WeightPolynomial& o) const;
  WeightPolynomial scaled(const Rat& c) const;
  WeightPolynomial pow(int e) const;
  bool operator==(const WeightPolynomial& o) const;
  bool operator!=(const WeightPolynomial& o) const { return !(*this == o); }

  WeightPolynomial derivative(int var, int order = 1) const;
  // Simultaneous substitution w_i -> images[i], expanded to canonical form.
  WeightPolynomial substitute(const std::vector<WeightPolynomial>& images) const;
  WeightPolynomial homogeneous_component(int d) const;
  bool divisible_by_variable(int var) const;

  void add_term(const ExpVec& e, const Rat& c);  // accumulates, drops zeros

 private:
  int nvars_;
  TermMap terms_;
};

// All exponent vectors of total degree d in nvars variables, canonical
// (leading-first) order.
std::vector<ExpVec> monomials_of_degree(int nvars, int d);

// Homogeneous layers along one variable: p = sum_i layers[i] * w_var^(l-i)
// with layers[i] of degree i in the remaining variables.
std::vector<WeightPolynomial> layer_decompose(const WeightPolynomial& p, int var);

// Action of the i-th simple reflection: w_i -> w_i - alpha_i with
// alpha_i = sum_j a_ji w_j, every other variable fixed.
WeightPolynomial weyl_action(const CartanMatrix& A, int i, const WeightPolynomial& p);

// alpha_i as a polynomial in the weight variables.
WeightPolynomial simple_root(const CartanMatrix& A, int i);

// True iff p and q agree up to a nonzero rational factor, or are both zero.
bool proportional(const WeightPolynomial& p, const WeightPolynomial& q);

std::string pretty(const WeightPolynomial& p);
std::string polynomial_to_json(const WeightPolynomial& p);
WeightPolynomial polynomial_from_json(const std::string& text, int nvars);

}  // namespace kminv
