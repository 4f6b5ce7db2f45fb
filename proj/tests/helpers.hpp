#pragma once

#include "kminv/cartan.hpp"
#include "kminv/polynomial.hpp"
#include "kminv/weyl.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace kminv::testing {

inline std::string fixture(const std::string& name) {
  return std::string(KMINV_FIXTURE_DIR) + "/" + name;
}

inline CartanMatrix make_cartan(const std::vector<std::vector<long long>>& raw) {
  return CartanMatrix::validate(raw);
}

// A_{a,b} = [[2,-a],[-b,2]]
inline CartanMatrix rank2(long long a, long long b) { return make_cartan({{2, -a}, {-b, 2}}); }

// a w1^2 - ab w1 w2 + b w2^2
inline WeightPolynomial psi_rank2(long a, long b) {
  WeightPolynomial p(2);
  p.add_term({2, 0}, Rat(a));
  p.add_term({1, 1}, Rat(-a * b));
  p.add_term({0, 2}, Rat(b));
  return p;
}

// Seed-stable draws; standard distributions differ across platforms.
struct Rng {
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  long operator()(long lo, long hi) {
    return lo + static_cast<long>(engine() % static_cast<unsigned long>(hi - lo + 1));
  }
  std::mt19937_64 engine;
};

// Random valid Cartan matrix with off-diagonal entries in [-max_entry, 0].
inline CartanMatrix random_cartan(Rng& rng, int n, long max_entry = 3) {
  std::vector<std::vector<long long>> raw(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) raw[i][i] = 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng(0, 1)) {
        raw[i][j] = -rng(1, max_entry);
        raw[j][i] = -rng(1, max_entry);
      }
  return make_cartan(raw);
}

inline CartanMatrix random_indecomposable_cartan(Rng& rng, int n, long max_entry = 3) {
  for (;;) {
    CartanMatrix A = random_cartan(rng, n, max_entry);
    if (is_indecomposable(A)) return A;
  }
}

// Oracle for the growth counts: enumerate every word up to max_length and
// record the least length at which each matrix appears.
inline std::vector<long long> naive_growth_counts(const CartanMatrix& A, int max_length) {
  const int n = A.rank();
  std::map<RatMat, int> least;
  std::vector<RatMat> frontier{RatMat::identity(n)};
  least.emplace(frontier.front(), 0);
  std::vector<RatMat> refl(n);
  for (int i = 0; i < n; ++i) refl[i] = simple_reflection_matrix(A, i);
  for (int len = 1; len <= max_length; ++len) {
    std::vector<RatMat> next;
    for (const RatMat& m : frontier)
      for (int i = 0; i < n; ++i) {
        RatMat prod = m * refl[i];
        next.push_back(prod);
        least.emplace(prod, len);  // keeps the first (least) length
      }
    frontier = std::move(next);
  }
  std::vector<long long> counts(max_length + 1, 0);
  for (const auto& [m, len] : least) counts[len] += 1;
  return counts;
}

}  // namespace kminv::testing
