#include "kminv/errors.hpp"

namespace kminv {

const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::diagonal_not_two: return "DiagonalNotTwo";
    case errc::positive_off_diagonal: return "PositiveOffDiagonal";
    case errc::zero_asymmetry: return "ZeroAsymmetry";
    case errc::empty_index_set: return "EmptyIndexSet";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_homogeneous: return "NotHomogeneous";
    case errc::not_invariant: return "NotInvariant";
    case errc::not_indefinite: return "NotIndefinite";
    case errc::not_dominant: return "NotDominant";
    case errc::decomposable: return "Decomposable";
    case errc::non_symmetrizable: return "NonSymmetrizable";
    case errc::finite_type: return "FiniteType";
    case errc::rank_too_small: return "RankTooSmall";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::not_a_cartan_matrix: return "NotACartanMatrix";
    case errc::negative_generator_count: return "NegativeGeneratorCount";
    case errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace kminv
