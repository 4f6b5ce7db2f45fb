#include "kminv/cli.hpp"

#include "kminv/invariants.hpp"
#include "kminv/polynomial.hpp"
#include "kminv/subalgebra.hpp"
#include "kminv/topology.hpp"
#include "kminv/weyl.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

namespace kminv {

namespace {

using nlohmann::json;

json j_matrix(const CartanMatrix& A) { return json{{"n", A.rank()}, {"a", A.entries()}}; }

std::vector<int> one_based(const std::vector<int>& idx) {
  std::vector<int> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(i + 1);
  return out;
}

json j_poly(const WeightPolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"exp", e}, {"num", to_int64(c.get_num())}, {"den", to_int64(c.get_den())}});
  return terms;
}

json j_rat_matrix(const RatMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json j_signature(const Signature& s) {
  return json{{"p", s.positive}, {"q", s.negative}, {"r", s.zero}};
}

json j_type(const MatrixType& t) {
  json blocks = json::array(), kinds = json::array();
  for (const auto& b : t.blocks) blocks.push_back(one_based(b));
  for (MatrixKind k : t.block_kinds) kinds.push_back(kind_name(k));
  return json{{"type", kind_name(t.kind)}, {"blocks", blocks}, {"block_types", kinds}};
}

json j_homotopy(const HomotopyReport& r) {
  json j{{"rank", r.rank},
         {"epsilon", r.epsilon},
         {"counts", r.growth.counts},
         {"truncation", r.growth.truncation},
         {"flag_series", r.flag_series},
         {"i3", r.i3},
         {"group_series", r.group_series},
         {"reconstruction_ok", r.reconstruction_ok}};
  if (r.tau) j["tau"] = j_signature(*r.tau);
  json gens = json::object();
  for (const auto& [degree, count] : r.even_generators) gens[std::to_string(degree)] = count;
  j["i_even"] = gens;
  return j;
}

json classify_report(const CartanMatrix& A) {
  MatrixType t = classify(A);
  json j = j_type(t);
  if (t.blocks.size() == 1 && t.kind == MatrixKind::Indefinite)
    j["hyperbolic"] = is_hyperbolic(A);
  return j;
}

json symmetrize_report(const CartanMatrix& A) {
  Symmetrizer s = symmetrize(A);
  json j{{"exists", s.exists}};
  json d = json::array();
  for (const Rat& v : s.d) d.push_back(to_string(v));
  j["d"] = d;
  return j;
}

json invariants_report(const CartanMatrix& A, int max_degree) {
  json degrees = json::array();
  for (int l = 0; l <= max_degree; ++l) {
    InvariantSpace space = invariant_space(A, l);
    json basis = json::array();
    for (const auto& p : space.basis) basis.push_back(j_poly(p));
    degrees.push_back(json{{"degree", l}, {"dim", space.dim()}, {"basis", basis}});
  }
  return json{{"max_degree", max_degree}, {"degrees", degrees}};
}

json subalgebra_report(const CartanMatrix& A) {
  json j{{"input", j_matrix(A)}};
  CycleCheck check = check_cycle_conditions(A);
  if (!check.labeling) {
    j["available"] = false;
    j["failure"] = json{{"condition", check.failure == CycleCheck::Failure::not_a_cycle
                                          ? "not_a_cycle"
                                          : "edge_without_unit"},
                        {"detail", check.detail}};
    return j;
  }
  CartanMatrix B = subalgebra_cartan(A, *check.labeling);
  j["available"] = true;
  j["cycle"] = one_based(check.labeling->order);
  j["B"] = j_matrix(B);
  j["b_type"] = kind_name(classify(B).kind);
  j["b_symmetrizable"] = symmetrize(B).exists;
  return j;
}

json poincare_report(const CartanMatrix& A, int max_length) {
  if (is_indecomposable(A) && classify(A).kind == MatrixKind::Indefinite)
    return j_homotopy(homotopy_report(A, max_length));
  GrowthSeries g = enumerate_by_length(A, max_length);
  return json{{"counts", g.counts},
              {"truncation", g.truncation},
              {"flag_series", flag_poincare(g)},
              {"note", "homotopy data needs an indecomposable indefinite matrix"}};
}

json cohomology_report(const CartanMatrix& A, int degree_cutoff) {
  CohomologyPresentation p = cohomology_presentation(A, degree_cutoff);
  json j{{"rank", p.rank},
         {"epsilon", p.epsilon},
         {"degree_cutoff", p.degree_cutoff},
         {"connectivity", p.connectivity},
         {"connectivity_is_lower_bound", p.connectivity_is_lower_bound},
         {"dim_pi_odd", p.dim_pi_odd},
         {"flag", pretty_flag_cohomology(p)},
         {"group", pretty_group_cohomology(p)}};
  if (p.relation) {
    j["relation"] = json{{"lambda", j_rat_matrix(p.relation->lambda)},
                         {"psi", j_poly(p.relation->to_polynomial())}};
  }
  json gens = json::object();
  for (const auto& [degree, count] : p.even_generators) gens[std::to_string(degree)] = count;
  j["even_generators"] = gens;
  return j;
}

// Seed-stable bounded draw; standard distributions vary across platforms.
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

WeightPolynomial random_homogeneous(std::mt19937_64& rng, int nvars, int degree) {
  WeightPolynomial p(nvars);
  for (const ExpVec& e : monomials_of_degree(nvars, degree))
    if (draw(rng, 0, 1)) p.add_term(e, make_rat(draw(rng, -3, 3)));
  return p;
}

bool direct_invariance(const CartanMatrix& A, const WeightPolynomial& f) {
  for (int i = 0; i < A.rank(); ++i)
    if (weyl_action(A, i, f) != f) return false;
  return true;
}

json verify_report(const CartanMatrix& A, const JobConfig& config, bool* all_pass) {
  json checks = json::array();
  auto push = [&](const std::string& name, bool pass, json detail = json::object()) {
    detail["name"] = name;
    detail["pass"] = pass;
    checks.push_back(std::move(detail));
    *all_pass = *all_pass && pass;
  };

  MainTheoremReport main = verify_main_theorem(A, config.max_degree);
  {
    json dims = json::array();
    for (const auto& d : main.degrees)
      dims.push_back(json{{"degree", d.degree},
                          {"dim", d.dim},
                          {"expected", d.expected_dim},
                          {"pass", d.pass}});
    push("invariant_ring_structure", main.all_pass,
         json{{"symmetrizable", main.symmetrizable}, {"degrees", dims}});
  }

  if (main.symmetrizable) {
    WeightPolynomial psi = bilinear_form(A)->to_polynomial();
    for (int m = 1; m <= 2; ++m) {
      RecurrenceReport rec = verify_layer_recurrences(A, psi.pow(m));
      push("layer_recurrences_psi^" + std::to_string(m), rec.all_pass,
           json{{"degree", rec.degree}, {"relations", rec.items.size()}});
    }
  }

  {
    bool pass = true;
    for (int l = 1; l <= config.max_degree; ++l)
      pass = pass && check_divisibility_lemma(A, l).all_pass;
    push("weight_divisibility", pass);
  }

  {
    HomotopyReport report = homotopy_report(A, config.max_length);
    push("homotopy_round_trip", report.reconstruction_ok && report.i3 == report.epsilon,
         json{{"epsilon", report.epsilon}});
  }

  {
    std::mt19937_64 rng(config.seed);
    bool agree = true;
    int invariants_seen = 0;
    for (int trial = 0; trial < 25; ++trial) {
      WeightPolynomial f = random_homogeneous(rng, A.rank(), 1 + static_cast<int>(draw(rng, 0, 2)));
      bool direct = direct_invariance(A, f);
      if (direct) ++invariants_seen;
      if (taylor_invariance_check(A, f) != direct) agree = false;
    }
    if (main.symmetrizable) {
      WeightPolynomial psi = bilinear_form(A)->to_polynomial();
      if (!taylor_invariance_check(A, psi)) agree = false;
      ++invariants_seen;
    }
    push("taylor_criterion_agreement", agree, json{{"invariants_seen", invariants_seen}});
  }

  return json{{"checks", checks}};
}

std::string text_render(const json& j, int indent = 0) {
  // Stable flat rendering: "key: value" lines, arrays inline.
  std::ostringstream out;
  for (const auto& [key, value] : j.items()) {
    out << std::string(indent, ' ') << key << ": ";
    if (value.is_object()) {
      out << "\n" << text_render(value, indent + 2);
    } else {
      out << value.dump() << "\n";
    }
  }
  return out.str();
}

}  // namespace

CartanMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return matrix_from_string(buffer.str());
}

int run(const JobConfig& config, std::ostream& out) {
  CartanMatrix A = load_matrix(config.input_path);
  json report;
  int status = 0;
  switch (config.command) {
    case Command::classify: report = classify_report(A); break;
    case Command::symmetrize: report = symmetrize_report(A); break;
    case Command::invariants: report = invariants_report(A, config.max_degree); break;
    case Command::subalgebra: report = subalgebra_report(A); break;
    case Command::poincare: report = poincare_report(A, config.max_length); break;
    case Command::cohomology: report = cohomology_report(A, 2 * config.max_length); break;
    case Command::verify: {
      bool all_pass = true;
      report = verify_report(A, config, &all_pass);
      report["all_pass"] = all_pass;
      status = all_pass ? 0 : 2;
      break;
    }
  }
  if (config.json_output)
    out << report.dump(2) << "\n";
  else
    out << text_render(report);
  return status;
}

}  // namespace kminv
