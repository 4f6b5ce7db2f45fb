// Batch frontend: classification, symmetrizer, invariant ring, regular
// subalgebra, growth/Poincare series and cohomology presentations for
// generalized Cartan matrices, with reproducible JSON or text reports.

#include "kminv/cli.hpp"
#include "kminv/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

std::string exit_code_table() {
  using kminv::errc;
  std::string doc = "Exit codes:\n  0   success\n  2   verify found a failing assertion\n";
  for (errc c : {errc::parse_error, errc::diagonal_not_two, errc::positive_off_diagonal,
                 errc::zero_asymmetry, errc::empty_index_set, errc::index_out_of_range,
                 errc::dimension_mismatch, errc::not_homogeneous, errc::not_invariant,
                 errc::not_indefinite, errc::not_dominant, errc::decomposable,
                 errc::non_symmetrizable, errc::finite_type, errc::rank_too_small,
                 errc::precondition_violated, errc::not_a_cartan_matrix,
                 errc::negative_generator_count, errc::internal_error}) {
    doc += "  " + std::to_string(static_cast<int>(c)) + "  " + kminv::errc_name(c) + "\n";
  }
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kminv: exact invariant theory and rational homotopy data of Kac-Moody Weyl groups"};
  app.footer(exit_code_table());
  app.require_subcommand(1);

  kminv::JobConfig config;
  std::string format = "json";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", config.input_path, "matrix file (JSON or integer grid)")
        ->required();
    cmd->add_option("-f,--format", format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  struct Sub {
    const char* name;
    const char* help;
    kminv::Command command;
    bool degree, length, seed;
  };
  const Sub subs[] = {
      {"classify", "type of each indecomposable block", kminv::Command::classify, false, false, false},
      {"symmetrize", "symmetrizing diagonal, when one exists", kminv::Command::symmetrize, false, false, false},
      {"invariants", "invariant-ring basis degree by degree", kminv::Command::invariants, true, false, false},
      {"subalgebra", "regular-subalgebra matrix from the cycle construction", kminv::Command::subalgebra, false, false, false},
      {"poincare", "growth series and rational homotopy report", kminv::Command::poincare, false, true, false},
      {"cohomology", "cohomology presentations of the flag manifold and group", kminv::Command::cohomology, false, true, false},
      {"verify", "full invariant/recurrence/round-trip suite on one matrix", kminv::Command::verify, true, true, true},
  };
  for (const Sub& sub : subs) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
    add_common(cmd);
    if (sub.degree)
      cmd->add_option("-d,--max-degree", config.max_degree, "invariant-degree cutoff")
          ->check(CLI::PositiveNumber);
    if (sub.length)
      cmd->add_option("-l,--max-length", config.max_length, "word-length cutoff")
          ->check(CLI::PositiveNumber);
    if (sub.seed) cmd->add_option("-s,--seed", config.seed, "seed for randomized spot checks");
    cmd->callback([&config, command = sub.command] { config.command = command; });
  }

  CLI11_PARSE(app, argc, argv);
  config.json_output = format == "json";

  try {
    return kminv::run(config, std::cout);
  } catch (const kminv::Error& e) {
    std::cerr << "error: " << kminv::errc_name(e.code()) << ": " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(kminv::errc::internal_error);
  }
}
