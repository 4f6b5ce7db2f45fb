#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include "kminv/weyl.hpp"

#include <map>

using namespace kminv;
using kminv::testing::Rng;
using kminv::testing::make_cartan;
using kminv::testing::naive_growth_counts;
using kminv::testing::rank2;

namespace {

// m with (sigma_i sigma_j)^m = e, from the entry product; 0 means infinite.
int coxeter_order(long long product) {
  switch (product) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

std::vector<Rat> rats(std::vector<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("simple reflection matrices") {
  // A_{a,b}: sigma_1(w1) = -w1 + b w2, sigma_1(w2) = w2
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b) {
      RatMat m = simple_reflection_matrix(rank2(a, b), 0);
      CHECK(m.at(0, 0) == -1);
      CHECK(m.at(1, 0) == b);
      CHECK(m.at(0, 1) == 0);
      CHECK(m.at(1, 1) == 1);
      CHECK(m * m == RatMat::identity(2));
    }
  RatMat s2 = simple_reflection_matrix(rank2(1, 1), 1);
  CHECK(s2.at(0, 1) == 1);   // w2 -> -w2 + w1
  CHECK(s2.at(1, 1) == -1);
  CHECK_THROWS_AS(simple_reflection_matrix(rank2(1, 1), 2), Error);
}

TEST_CASE("involution and braid relations") {
  Rng rng(6);
  for (int trial = 0; trial < 25; ++trial) {
    int n = static_cast<int>(rng(2, 4));
    CartanMatrix A = testing::random_cartan(rng, n);
    for (int i = 0; i < n; ++i) {
      RatMat s = simple_reflection_matrix(A, i);
      CHECK(s * s == RatMat::identity(n));
      for (int j = i + 1; j < n; ++j) {
        int m = coxeter_order(A.entry(i, j) * A.entry(j, i));
        if (m == 0) continue;
        RatMat prod = simple_reflection_matrix(A, i) * simple_reflection_matrix(A, j);
        RatMat power = RatMat::identity(n);
        for (int k = 0; k < m; ++k) power = power * prod;
        CHECK(power == RatMat::identity(n));
      }
    }
  }
}

TEST_CASE("acting on weight vectors") {
  CartanMatrix a22 = rank2(2, 2);
  WeylElement id = identity_element(a22);
  WeightVector v{rats({3, -5})};
  CHECK(act(id, v).coords == v.coords);

  WeylElement s1{{0}, simple_reflection_matrix(a22, 0)};
  WeightVector w1{rats({1, 0})};
  CHECK(act(s1, w1).coords == rats({-1, 2}));

  CartanMatrix a2 = rank2(1, 1);
  RatMat rot = word_matrix(a2, {0, 1});
  RatMat cube = rot * rot * rot;
  CHECK(cube == RatMat::identity(2));

  CHECK_THROWS_AS(act(s1, WeightVector{rats({1, 2, 3})}), Error);
}

TEST_CASE("growth counts for the standard small cases") {
  GrowthSeries a2 = enumerate_by_length(rank2(1, 1), 3);
  CHECK(a2.counts == std::vector<long long>{1, 2, 2, 1});

  GrowthSeries affine = enumerate_by_length(rank2(2, 2), 5);
  CHECK(affine.counts == std::vector<long long>{1, 2, 2, 2, 2, 2});

  CartanMatrix allinf = make_cartan({{2, -2, -2}, {-2, 2, -2}, {-2, -2, 2}});
  GrowthSeries free3 = enumerate_by_length(allinf, 4);
  CHECK(free3.counts == std::vector<long long>{1, 3, 6, 12, 24});
}

TEST_CASE("finite group is exhausted with the right totals") {
  std::vector<WeylElement> elements;
  GrowthSeries g = enumerate_by_length(rank2(1, 1), 6, &elements);
  CHECK(g.counts == std::vector<long long>{1, 2, 2, 1, 0, 0, 0});
  CHECK(elements.size() == 6);  // |W(A2)| = 6, top length 3 = positive roots
  long long total = 0;
  for (long long c : g.counts) total += c;
  CHECK(total == 6);

  // Dihedral orders 8 and 12 from the other finite rank-2 products.
  CHECK(enumerate_by_length(rank2(2, 1), 5).counts ==
        std::vector<long long>{1, 2, 2, 2, 1, 0});
  CHECK(enumerate_by_length(rank2(3, 1), 7).counts ==
        std::vector<long long>{1, 2, 2, 2, 2, 2, 1, 0});
}

TEST_CASE("words returned by enumeration are reduced and rebuild the matrix") {
  CartanMatrix A = make_cartan({{2, -1, -1}, {-1, 2, -1}, {-2, -1, 2}});
  std::vector<WeylElement> elements;
  GrowthSeries g = enumerate_by_length(A, 4, &elements);
  std::map<int, long long> by_length;
  for (const WeylElement& w : elements) {
    CHECK(word_matrix(A, w.word) == w.matrix);
    by_length[static_cast<int>(w.word.size())] += 1;
  }
  for (int l = 0; l <= 4; ++l) CHECK(by_length[l] == g.counts[l]);
}

TEST_CASE("counts agree with naive word enumeration") {
  Rng rng(45);
  for (int trial = 0; trial < 8; ++trial) {
    int n = static_cast<int>(rng(2, 3));
    CartanMatrix A = testing::random_indecomposable_cartan(rng, n);
    GrowthSeries g = enumerate_by_length(A, 5);
    CHECK(g.counts == naive_growth_counts(A, 5));
  }

  CartanMatrix cycle4 = make_cartan(
      {{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -3, 2, -1}, {-1, 0, -1, 2}});
  CHECK(enumerate_by_length(cycle4, 4).counts == naive_growth_counts(cycle4, 4));
}

TEST_CASE("counts are relabeling invariant") {
  CartanMatrix A = make_cartan({{2, -1, -1}, {-1, 2, -1}, {-2, -1, 2}});
  CartanMatrix B = make_cartan({{2, -1, -1}, {-1, 2, -2}, {-1, -1, 2}});  // cyclic relabel
  CHECK(enumerate_by_length(A, 6).counts == enumerate_by_length(B, 6).counts);
}

TEST_CASE("orbit threshold walk") {
  CartanMatrix a2 = rank2(1, 1);
  CHECK_FALSE(orbit_size_at_least(a2, WeightVector{rats({1, 0})}, 4));
  CHECK(orbit_size_at_least(a2, WeightVector{rats({1, 0})}, 3));

  CartanMatrix affine = rank2(2, 2);
  CHECK(orbit_size_at_least(affine, WeightVector{rats({1, 0})}, 100));

  CHECK_FALSE(orbit_size_at_least(a2, WeightVector{rats({0, 0})}, 2));
  CHECK_THROWS_AS(orbit_size_at_least(a2, WeightVector{rats({-1, 0})}, 2), Error);
}

TEST_CASE("growth series JSON") {
  GrowthSeries g = enumerate_by_length(rank2(1, 1), 2);
  CHECK(growth_to_json(g) == "{\"counts\":[1,2,2],\"truncation\":2}");
}
