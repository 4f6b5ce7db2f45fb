#include "kminv/topology.hpp"

#include "kminv/series.hpp"

#include <sstream>

namespace kminv {

int epsilon(const CartanMatrix& A) {
  if (!is_indecomposable(A)) fail(errc::decomposable, "epsilon needs an indecomposable matrix");
  return symmetrize(A).exists ? 1 : 0;
}

Signature signature_of(const RatMat& symmetric) {
  if (!symmetric.is_symmetric())
    fail(errc::precondition_violated, "signature needs a symmetric matrix");
  RatMat m = symmetric;
  const int n = m.rows();
  Signature sig;
  for (int k = 0; k < n; ++k) {
    if (m.at(k, k) == 0) {
      int diag = -1, off = -1;
      for (int j = k + 1; j < n; ++j) {
        if (diag < 0 && m.at(j, j) != 0) diag = j;
        if (off < 0 && m.at(k, j) != 0) off = j;
      }
      if (diag >= 0) {
        for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(diag, c));
        for (int r = 0; r < n; ++r) std::swap(m.at(r, k), m.at(r, diag));
      } else if (off >= 0) {
        // Zero diagonal but a live off-diagonal pair: fold row/column `off`
        // into k, which makes m(k,k) = 2 m(k,off) != 0.
        for (int c = 0; c < n; ++c) m.at(k, c) += m.at(off, c);
        for (int r = 0; r < n; ++r) m.at(r, k) += m.at(r, off);
      } else {
        sig.zero += 1;
        continue;
      }
    }
    const Rat pivot = m.at(k, k);
    (pivot > 0 ? sig.positive : sig.negative) += 1;
    for (int r = k + 1; r < n; ++r) {
      if (m.at(r, k) == 0) continue;
      Rat f = m.at(r, k) / pivot;
      for (int c = 0; c < n; ++c) m.at(r, c) -= f * m.at(k, c);
      for (int c = 0; c < n; ++c) m.at(c, r) -= f * m.at(c, k);
    }
  }
  return sig;
}

Signature signature_tau(const CartanMatrix& A) {
  std::optional<BilinearForm> form = bilinear_form(A);
  if (!form) fail(errc::non_symmetrizable, "no invariant bilinear form to diagonalize");
  return signature_of(form->lambda);
}

std::vector<long long> flag_poincare(const GrowthSeries& growth) {
  std::vector<long long> out(2 * growth.truncation + 1, 0);
  for (int l = 0; l <= growth.truncation && l < static_cast<int>(growth.counts.size()); ++l)
    out[2 * l] = growth.counts[l];
  return out;
}

namespace {

Series growth_as_series(const GrowthSeries& growth, int order) {
  Series p(order + 1);
  for (int l = 0; l <= order && l < static_cast<int>(growth.counts.size()); ++l)
    p[l] = Rat(static_cast<long>(growth.counts[l]));
  return p;
}

long long series_coeff_integer(const Series& s, int k) {
  if (!is_integer(s[k])) fail(errc::internal_error, "series coefficient is not an integer");
  return to_int64(s[k].get_num());
}

}  // namespace

std::map<int, int> extract_generator_sequence(const CartanMatrix& A, const GrowthSeries& growth,
                                              int max_degree) {
  if (!is_indecomposable(A))
    fail(errc::decomposable, "generator extraction needs an indecomposable matrix");
  if (classify_indecomposable(A) != MatrixKind::Indefinite)
    fail(errc::not_indefinite, "generator extraction covers indefinite matrices");
  const int kmax = max_degree / 2;
  if (growth.truncation < kmax)
    fail(errc::precondition_violated, "growth series truncated below the requested degree");

  const int n = A.rank();
  const int eps = epsilon(A);
  const int order = growth.truncation;

  // Divide out the weight generators and the eps relation:
  // R = P * (1-t)^n * (1-t^2)^(-eps) must be prod_k (1-t^k)^(-i_2k).
  Series r = growth_as_series(growth, order);
  r = series_mul(r, series_pow(series_one_minus_tk(1, order), n, order), order);
  if (eps) r = series_mul(r, series_inverse(series_one_minus_tk(2, order), order), order);

  if (r[0] != 1 || (order >= 1 && r[1] != 0))
    fail(errc::internal_error, "flag series is not of product form in low degree");

  std::map<int, int> gens;
  for (int k = 2; k <= kmax; ++k) {
    long long count = series_coeff_integer(r, k);
    if (count < 0) {
      std::ostringstream msg;
      msg << "negative generator count " << count << " at cohomological degree " << 2 * k
          << "; grading convention or input is off";
      fail(errc::negative_generator_count, msg.str());
    }
    gens[2 * k] = static_cast<int>(count);
    if (count > 0)
      r = series_mul(r, series_pow(series_one_minus_tk(k, order), count, order), order);
  }
  return gens;
}

std::vector<long long> group_poincare(const HomotopyReport& report) {
  const int order = 2 * report.growth.truncation;
  Series g = series_one(order);
  if (report.i3) g = series_mul(g, series_pow(series_one_plus_tk(3, order), report.i3, order), order);
  for (const auto& [degree, count] : report.even_generators)
    if (count > 0)
      g = series_mul(
          g, series_pow(series_inverse(series_one_minus_tk(degree, order), order), count, order),
          order);
  std::vector<long long> out(order + 1);
  for (int k = 0; k <= order; ++k) out[k] = series_coeff_integer(g, k);
  return out;
}

HomotopyReport homotopy_report(const CartanMatrix& A, int max_length) {
  if (!is_indecomposable(A))
    fail(errc::decomposable, "homotopy data needs an indecomposable matrix");
  if (classify_indecomposable(A) != MatrixKind::Indefinite)
    fail(errc::not_indefinite, "homotopy data covers indefinite matrices");

  HomotopyReport report;
  report.rank = A.rank();
  report.epsilon = epsilon(A);
  if (report.epsilon) report.tau = signature_tau(A);
  report.growth = enumerate_by_length(A, max_length);
  report.flag_series = flag_poincare(report.growth);
  report.even_generators = extract_generator_sequence(A, report.growth, 2 * max_length);
  report.i3 = report.epsilon;
  report.group_series = group_poincare(report);

  // Rebuild the flag series from (eps, i_k); exact agreement is the round
  // trip between the enumeration and the generator data.
  const int order = max_length;
  Series rebuilt = series_pow(series_one_minus_tk(2, order), report.epsilon, order);
  rebuilt = series_mul(
      rebuilt, series_pow(series_inverse(series_one_minus_tk(1, order), order), report.rank, order),
      order);
  for (const auto& [degree, count] : report.even_generators)
    if (count > 0)
      rebuilt = series_mul(
          rebuilt,
          series_pow(series_inverse(series_one_minus_tk(degree / 2, order), order), count, order),
          order);
  report.reconstruction_ok = true;
  for (int l = 0; l <= order; ++l)
    if (rebuilt[l] != Rat(static_cast<long>(report.growth.counts[l])))
      report.reconstruction_ok = false;
  return report;
}

CohomologyPresentation cohomology_presentation(const CartanMatrix& A, int degree_cutoff) {
  const int max_length = (degree_cutoff + 1) / 2;
  HomotopyReport report = homotopy_report(A, max_length);

  CohomologyPresentation p;
  p.rank = report.rank;
  p.epsilon = report.epsilon;
  p.degree_cutoff = degree_cutoff;
  if (report.epsilon) p.relation = bilinear_form(A);
  p.even_generators = report.even_generators;
  p.dim_pi_odd = report.epsilon;

  int first_degree = 0;
  if (report.epsilon) {
    first_degree = 3;
  } else {
    for (const auto& [degree, count] : report.even_generators)
      if (count > 0) { first_degree = degree; break; }
  }
  if (first_degree == 0) {
    p.connectivity = degree_cutoff;  // nothing found below the cutoff
    p.connectivity_is_lower_bound = true;
  } else {
    p.connectivity = first_degree - 1;
  }
  return p;
}

namespace {

std::string even_part(const CohomologyPresentation& p) {
  std::string z;
  for (const auto& [degree, count] : p.even_generators) {
    if (count == 0) continue;
    if (!z.empty()) z += ", ";
    z += "deg " + std::to_string(degree) + " x " + std::to_string(count);
  }
  return z.empty() ? "" : "Q[z: " + z + "]";
}

}  // namespace

std::string pretty_flag_cohomology(const CohomologyPresentation& p) {
  std::string s = "Q[w1..w" + std::to_string(p.rank) + "]";
  if (p.epsilon) s += "/<psi>";
  std::string z = even_part(p);
  if (!z.empty()) s += " (x) " + z;
  return s;
}

std::string pretty_group_cohomology(const CohomologyPresentation& p) {
  std::string s;
  if (p.epsilon) s = "/\\(y3)";
  std::string z = even_part(p);
  if (!z.empty()) s += (s.empty() ? "" : " (x) ") + z;
  if (s.empty()) s = "Q";
  return s;
}

}  // namespace kminv
