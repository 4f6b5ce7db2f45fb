#include "kminv/cartan.hpp"

#include "kminv/ratmat.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace kminv {

namespace {

std::string cell(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Fraction-free Bareiss determinant of the principal submatrix on `idx`.
Int principal_minor(const CartanMatrix& A, const std::vector<int>& idx) {
  const int n = static_cast<int>(idx.size());
  std::vector<Int> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[static_cast<std::size_t>(i) * n + j] = static_cast<long>(A.entry(idx[i], idx[j]));

  auto at = [&](int i, int j) -> Int& { return m[static_cast<std::size_t>(i) * n + j]; };
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) { swap_row = i; break; }
      if (swap_row < 0) return Int(0);
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

int integer_rank(const CartanMatrix& A) {
  RatMat m(A.rank(), A.rank());
  for (int i = 0; i < A.rank(); ++i)
    for (int j = 0; j < A.rank(); ++j) m.at(i, j) = static_cast<long>(A.entry(i, j));
  return m.rank();
}

std::vector<int> complement_of(int n, int k) {
  std::vector<int> idx;
  idx.reserve(n - 1);
  for (int i = 0; i < n; ++i)
    if (i != k) idx.push_back(i);
  return idx;
}

}  // namespace

CartanMatrix CartanMatrix::validate(const std::vector<std::vector<long long>>& raw) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) fail(errc::parse_error, "empty matrix");
  for (const auto& row : raw)
    if (static_cast<int>(row.size()) != n) fail(errc::parse_error, "matrix is not square");

  std::vector<long long> a;
  a.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : raw) a.insert(a.end(), row.begin(), row.end());

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long v = a[static_cast<std::size_t>(i) * n + j];
      long long w = a[static_cast<std::size_t>(j) * n + i];
      if (i == j && v != 2)
        fail(errc::diagonal_not_two, "diagonal entry " + std::to_string(v) + " at " + cell(i, j));
      if (i != j && v > 0)
        fail(errc::positive_off_diagonal,
             "positive off-diagonal entry " + std::to_string(v) + " at " + cell(i, j));
      if (i != j && v == 0 && w != 0)
        fail(errc::zero_asymmetry, "zero at " + cell(i, j) + " but nonzero at " + cell(j, i));
    }
  return CartanMatrix(n, std::move(a));
}

std::vector<std::vector<long long>> CartanMatrix::entries() const {
  std::vector<std::vector<long long>> rows(n_);
  for (int i = 0; i < n_; ++i)
    rows[i].assign(a_.begin() + static_cast<std::ptrdiff_t>(i) * n_,
                   a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * n_);
  return rows;
}

const char* kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::Finite: return "Finite";
    case MatrixKind::Affine: return "Affine";
    case MatrixKind::Indefinite: return "Indefinite";
  }
  return "?";
}

CartanMatrix principal_submatrix(const CartanMatrix& A, const std::vector<int>& indices) {
  if (indices.empty()) fail(errc::empty_index_set, "principal submatrix of an empty index set");
  for (int i : indices)
    if (i < 0 || i >= A.rank())
      fail(errc::index_out_of_range, "index " + std::to_string(i + 1) + " outside 1.." +
                                         std::to_string(A.rank()));
  std::vector<std::vector<long long>> raw(indices.size(), std::vector<long long>(indices.size()));
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j) raw[i][j] = A.entry(indices[i], indices[j]);
  // Submatrices of a valid matrix satisfy the axioms again.
  return CartanMatrix::validate(raw);
}

std::vector<std::vector<int>> indecomposable_blocks(const CartanMatrix& A) {
  const int n = A.rank();
  std::vector<int> component(n, -1);
  int next = 0;
  for (int start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    std::vector<int> stack{start};
    component[start] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u)
        if (component[u] < 0 && A.entry(v, u) != 0) {
          component[u] = next;
          stack.push_back(u);
        }
    }
    ++next;
  }
  std::vector<std::vector<int>> blocks(next);
  for (int i = 0; i < n; ++i) blocks[component[i]].push_back(i);
  return blocks;  // component ids already follow least members
}

bool is_indecomposable(const CartanMatrix& A) { return indecomposable_blocks(A).size() == 1; }

MatrixKind classify_indecomposable(const CartanMatrix& A) {
  const int n = A.rank();
  bool all_positive = true;
  bool proper_positive = true;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    Int minor = principal_minor(A, idx);
    if (minor <= 0) {
      all_positive = false;
      if (static_cast<int>(idx.size()) < n) {
        proper_positive = false;
        break;  // neither finite nor affine
      }
    }
  }
  if (all_positive) return MatrixKind::Finite;
  if (proper_positive) {
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i) full[i] = i;
    if (principal_minor(A, full) == 0 && integer_rank(A) == n - 1) return MatrixKind::Affine;
  }
  return MatrixKind::Indefinite;
}

MatrixType classify(const CartanMatrix& A) {
  MatrixType t;
  t.blocks = indecomposable_blocks(A);
  for (const auto& block : t.blocks)
    t.block_kinds.push_back(classify_indecomposable(principal_submatrix(A, block)));
  t.kind = MatrixKind::Finite;
  for (MatrixKind k : t.block_kinds) {
    if (k == MatrixKind::Indefinite) { t.kind = MatrixKind::Indefinite; break; }
    if (k == MatrixKind::Affine) t.kind = MatrixKind::Affine;
  }
  return t;
}

Symmetrizer symmetrize(const CartanMatrix& A) {
  const int n = A.rank();
  std::vector<Rat> d(n);
  // Spanning-tree propagation of a_ij d_j = a_ji d_i from each block root,
  // then the constraint is rechecked on every pair to catch bad cycles.
  for (const auto& block : indecomposable_blocks(A)) {
    std::vector<int> frontier{block.front()};
    d[block.front()] = 1;
    std::vector<bool> known(n, false);
    known[block.front()] = true;
    while (!frontier.empty()) {
      int i = frontier.back();
      frontier.pop_back();
      for (int j : block) {
        if (known[j] || A.entry(i, j) == 0) continue;
        d[j] = d[i] * make_rat(static_cast<long>(A.entry(j, i)), static_cast<long>(A.entry(i, j)));
        known[j] = true;
        frontier.push_back(j);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (static_cast<long>(A.entry(i, j)) * d[j] != static_cast<long>(A.entry(j, i)) * d[i])
        return Symmetrizer{};
  return Symmetrizer{true, std::move(d)};
}

bool is_hyperbolic(const CartanMatrix& A) {
  if (!is_indecomposable(A)) fail(errc::decomposable, "hyperbolicity needs an indecomposable matrix");
  if (classify_indecomposable(A) != MatrixKind::Indefinite)
    fail(errc::not_indefinite, "hyperbolicity is defined for indefinite matrices");
  // Checking the corank-1 submatrices blockwise covers all smaller subsets:
  // principal submatrices of finite or affine blocks stay finite or affine.
  for (int k = 0; k < A.rank(); ++k) {
    CartanMatrix sub = principal_submatrix(A, complement_of(A.rank(), k));
    for (const auto& block : indecomposable_blocks(sub))
      if (classify_indecomposable(principal_submatrix(sub, block)) == MatrixKind::Indefinite)
        return false;
  }
  return true;
}

int find_indefinite_principal(const CartanMatrix& A) {
  if (!is_indecomposable(A))
    fail(errc::precondition_violated, "vertex-removal search needs an indecomposable matrix");
  if (classify_indecomposable(A) != MatrixKind::Indefinite)
    fail(errc::precondition_violated, "vertex-removal search needs an indefinite matrix");
  if (is_hyperbolic(A))
    fail(errc::precondition_violated, "vertex-removal search needs a non-hyperbolic matrix");
  for (int k = 0; k < A.rank(); ++k) {
    CartanMatrix sub = principal_submatrix(A, complement_of(A.rank(), k));
    if (is_indecomposable(sub) && classify_indecomposable(sub) == MatrixKind::Indefinite) return k;
  }
  fail(errc::internal_error,
       "no single removal leaves an indecomposable indefinite matrix; "
       "this cannot happen for non-hyperbolic indefinite input");
}

// ---- serialization ----

std::string matrix_to_json(const CartanMatrix& A) {
  nlohmann::json j;
  j["n"] = A.rank();
  j["a"] = A.entries();
  return j.dump();
}

CartanMatrix matrix_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::parse_error, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("a"))
    fail(errc::parse_error, "expected an object with fields \"n\" and \"a\"");
  std::vector<std::vector<long long>> raw;
  try {
    raw = j.at("a").get<std::vector<std::vector<long long>>>();
  } catch (const nlohmann::json::exception&) {
    fail(errc::parse_error, "field \"a\" is not an integer matrix");
  }
  if (j.at("n") != static_cast<int>(raw.size()))
    fail(errc::parse_error, "field \"n\" disagrees with the row count");
  return CartanMatrix::validate(raw);
}

CartanMatrix matrix_from_text(const std::string& text) {
  std::vector<std::vector<long long>> raw;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::vector<long long> row;
    long long v;
    while (fields >> v) row.push_back(v);
    if (!fields.eof()) fail(errc::parse_error, "non-integer entry in row " + std::to_string(raw.size() + 1));
    if (!row.empty()) raw.push_back(std::move(row));
  }
  if (raw.empty()) fail(errc::parse_error, "no matrix rows found");
  return CartanMatrix::validate(raw);
}

CartanMatrix matrix_from_string(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? matrix_from_json(text) : matrix_from_text(text);
  }
  fail(errc::parse_error, "empty matrix input");
}

}  // namespace kminv
