#pragma once

#include <stdexcept>
#include <string>

namespace kminv {

// Stable error identifiers. The CLI maps each value to its process exit
// code, so renumbering is a breaking change.
enum class errc : int {
  parse_error = 10,
  diagonal_not_two = 11,
  positive_off_diagonal = 12,
  zero_asymmetry = 13,
  empty_index_set = 14,
  index_out_of_range = 15,
  dimension_mismatch = 16,
  not_homogeneous = 17,
  not_invariant = 18,
  not_indefinite = 19,
  not_dominant = 20,
  decomposable = 21,
  non_symmetrizable = 22,
  finite_type = 23,
  rank_too_small = 24,
  precondition_violated = 25,
  not_a_cartan_matrix = 26,
  negative_generator_count = 27,
  internal_error = 28,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace kminv
