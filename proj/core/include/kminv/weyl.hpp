#pragma once

#include "kminv/cartan.hpp"
#include "kminv/ratmat.hpp"

#include <string>
#include <vector>

namespace kminv {

// Coordinates in the fundamental-weight basis w1..wn.
struct WeightVector {
  std::vector<Rat> coords;
};

// Matrix of sigma_i on weight coordinates: w_i -> w_i - alpha_i, all other
// basis weights fixed. Columns are images of basis vectors.
RatMat simple_reflection_matrix(const CartanMatrix& A, int i);

// Matrix of sigma_i on formal simple-root coordinates:
// alpha_j -> alpha_j - a_ij alpha_i. Column j holds sigma_i(alpha_j).
// This drives the length/descent test during enumeration.
RatMat simple_root_action_matrix(const CartanMatrix& A, int i);

// Group element as a reduced word together with its exact action on weight
// coordinates; element identity is matrix identity.
struct WeylElement {
  std::vector<int> word;
  RatMat matrix;
};

WeylElement identity_element(const CartanMatrix& A);
// Product of the reflection matrices of an arbitrary word.
RatMat word_matrix(const CartanMatrix& A, const std::vector<int>& word);

WeightVector act(const WeylElement& w, const WeightVector& v);

// counts[l] = number of group elements of length l, for l <= truncation.
struct GrowthSeries {
  std::vector<long long> counts;
  int truncation = 0;
};

// Breadth-first enumeration by length. A child w*sigma_i sits one level
// deeper exactly when w(alpha_i) has nonnegative root coordinates; levels
// are deduplicated by exact matrix, so the counts are traversal-independent.
// When `elements` is given it receives every element up to the cutoff.
GrowthSeries enumerate_by_length(const CartanMatrix& A, int max_length,
                                 std::vector<WeylElement>* elements = nullptr);

// Walks the orbit of a dominant vector until `threshold` distinct images
// are seen or the orbit is exhausted.
bool orbit_size_at_least(const CartanMatrix& A, const WeightVector& v, long long threshold);

std::string growth_to_json(const GrowthSeries& g);

}  // namespace kminv
