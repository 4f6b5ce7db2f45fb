#include "kminv/weyl.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <set>

namespace kminv {

RatMat simple_reflection_matrix(const CartanMatrix& A, int i) {
  const int n = A.rank();
  if (i < 0 || i >= n) fail(errc::index_out_of_range, "generator index out of range");
  RatMat m = RatMat::identity(n);
  // Column i becomes e_i - alpha_i; alpha_i has weight coordinates a_ri.
  for (int r = 0; r < n; ++r) m.at(r, i) -= static_cast<long>(A.entry(r, i));
  return m;
}

RatMat simple_root_action_matrix(const CartanMatrix& A, int i) {
  const int n = A.rank();
  if (i < 0 || i >= n) fail(errc::index_out_of_range, "generator index out of range");
  RatMat m = RatMat::identity(n);
  for (int j = 0; j < n; ++j) m.at(i, j) -= static_cast<long>(A.entry(i, j));
  return m;
}

WeylElement identity_element(const CartanMatrix& A) {
  return WeylElement{{}, RatMat::identity(A.rank())};
}

RatMat word_matrix(const CartanMatrix& A, const std::vector<int>& word) {
  RatMat m = RatMat::identity(A.rank());
  for (int i : word) m = m * simple_reflection_matrix(A, i);
  return m;
}

WeightVector act(const WeylElement& w, const WeightVector& v) {
  if (w.matrix.cols() != static_cast<int>(v.coords.size()))
    fail(errc::dimension_mismatch, "element rank disagrees with the vector dimension");
  return WeightVector{w.matrix.apply(v.coords)};
}

namespace {

struct Node {
  RatMat weight;  // action on weight coordinates; the element's identity
  RatMat root;    // action on formal root coordinates
  std::vector<int> word;
};

bool column_nonnegative(const RatMat& m, int col) {
  for (int r = 0; r < m.rows(); ++r)
    if (m.at(r, col) < 0) return false;
  return true;
}

}  // namespace

GrowthSeries enumerate_by_length(const CartanMatrix& A, int max_length,
                                 std::vector<WeylElement>* elements) {
  const int n = A.rank();
  std::vector<RatMat> refl(n), root(n);
  for (int i = 0; i < n; ++i) {
    refl[i] = simple_reflection_matrix(A, i);
    root[i] = simple_root_action_matrix(A, i);
  }

  GrowthSeries g;
  g.truncation = max_length;
  g.counts.push_back(1);
  if (elements) elements->push_back(identity_element(A));

  std::vector<Node> level{{RatMat::identity(n), RatMat::identity(n), {}}};
  for (int len = 1; len <= max_length; ++len) {
    std::map<RatMat, Node> next;
    for (const Node& node : level)
      for (int i = 0; i < n; ++i) {
        // w(alpha_i) >= 0 means the word w*sigma_i is still reduced.
        if (!column_nonnegative(node.root, i)) continue;
        RatMat wm = node.weight * refl[i];
        if (next.contains(wm)) continue;
        std::vector<int> word = node.word;
        word.push_back(i);
        next.emplace(wm, Node{wm, node.root * root[i], std::move(word)});
      }
    g.counts.push_back(static_cast<long long>(next.size()));
    level.clear();
    level.reserve(next.size());
    for (auto& [mat, node] : next) {
      if (elements) elements->push_back(WeylElement{node.word, node.weight});
      level.push_back(std::move(node));
    }
    if (level.empty()) {
      // Finite group exhausted; the remaining counts are zero.
      while (static_cast<int>(g.counts.size()) <= max_length) g.counts.push_back(0);
      break;
    }
  }
  return g;
}

bool orbit_size_at_least(const CartanMatrix& A, const WeightVector& v, long long threshold) {
  const int n = A.rank();
  if (static_cast<int>(v.coords.size()) != n)
    fail(errc::dimension_mismatch, "vector dimension disagrees with the matrix rank");
  for (const Rat& c : v.coords)
    if (c < 0) fail(errc::not_dominant, "orbit walk needs a dominant vector");
  if (threshold <= 0) return true;

  std::vector<RatMat> refl(n);
  for (int i = 0; i < n; ++i) refl[i] = simple_reflection_matrix(A, i);

  std::set<std::vector<Rat>> seen{v.coords};
  std::vector<std::vector<Rat>> frontier{v.coords};
  while (!frontier.empty() && static_cast<long long>(seen.size()) < threshold) {
    std::vector<std::vector<Rat>> fresh;
    for (const auto& u : frontier)
      for (int i = 0; i < n; ++i) {
        std::vector<Rat> image = refl[i].apply(u);
        if (seen.insert(image).second) fresh.push_back(std::move(image));
      }
    frontier = std::move(fresh);
  }
  return static_cast<long long>(seen.size()) >= threshold;
}

std::string growth_to_json(const GrowthSeries& g) {
  nlohmann::json j;
  j["counts"] = g.counts;
  j["truncation"] = g.truncation;
  return j.dump();
}

}  // namespace kminv
