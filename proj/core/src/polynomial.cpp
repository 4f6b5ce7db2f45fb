#include "kminv/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kminv {

bool MonomialOrder::operator()(const ExpVec& a, const ExpVec& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

WeightPolynomial WeightPolynomial::constant(int nvars, const Rat& c) {
  WeightPolynomial p(nvars);
  p.add_term(ExpVec(nvars, 0), c);
  return p;
}

WeightPolynomial WeightPolynomial::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) fail(errc::index_out_of_range, "variable index out of range");
  ExpVec e(nvars, 0);
  e[var] = 1;
  return monomial(e, Rat(1));
}

WeightPolynomial WeightPolynomial::monomial(const ExpVec& exponents, const Rat& c) {
  WeightPolynomial p(static_cast<int>(exponents.size()));
  p.add_term(exponents, c);
  return p;
}

int WeightPolynomial::total_degree() const {
  if (terms_.empty()) return -1;
  // Leading term has maximal degree under the graded order.
  const ExpVec& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

bool WeightPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree();
  const ExpVec& last = terms_.rbegin()->first;
  return std::accumulate(last.begin(), last.end(), 0) == d;
}

Rat WeightPolynomial::coefficient(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void WeightPolynomial::add_term(const ExpVec& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeightPolynomial& WeightPolynomial::operator+=(const WeightPolynomial& o) {
  if (nvars_ != o.nvars_) fail(errc::dimension_mismatch, "polynomial variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

WeightPolynomial& WeightPolynomial::operator-=(const WeightPolynomial& o) {
  if (nvars_ != o.nvars_) fail(errc::dimension_mismatch, "polynomial variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

WeightPolynomial WeightPolynomial::operator+(const WeightPolynomial& o) const {
  WeightPolynomial r = *this;
  r += o;
  return r;
}

WeightPolynomial WeightPolynomial::operator-(const WeightPolynomial& o) const {
  WeightPolynomial r = *this;
  r -= o;
  return r;
}

WeightPolynomial WeightPolynomial::operator-() const {
  WeightPolynomial r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

WeightPolynomial WeightPolynomial::operator*(const WeightPolynomial& o) const {
  if (nvars_ != o.nvars_) fail(errc::dimension_mismatch, "polynomial variable counts differ");
  WeightPolynomial r(nvars_);
  ExpVec e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

WeightPolynomial WeightPolynomial::scaled(const Rat& c) const {
  WeightPolynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, c * v);
  return r;
}

WeightPolynomial WeightPolynomial::pow(int e) const {
  if (e < 0) fail(errc::precondition_violated, "negative polynomial power");
  WeightPolynomial r = constant(nvars_, Rat(1));
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

bool WeightPolynomial::operator==(const WeightPolynomial& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

WeightPolynomial WeightPolynomial::derivative(int var, int order) const {
  if (var < 0 || var >= nvars_) fail(errc::index_out_of_range, "variable index out of range");
  WeightPolynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] < order) continue;
    Rat f = c;
    for (int k = 0; k < order; ++k) f *= e[var] - k;
    ExpVec e2 = e;
    e2[var] -= order;
    r.add_term(e2, f);
  }
  return r;
}

WeightPolynomial WeightPolynomial::substitute(const std::vector<WeightPolynomial>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    fail(errc::dimension_mismatch, "one image per variable required");
  for (const auto& img : images)
    if (img.nvars() != nvars_) fail(errc::dimension_mismatch, "image variable counts differ");

  // Image powers are shared across terms.
  std::vector<int> max_exp(nvars_, 0);
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < nvars_; ++i) max_exp[i] = std::max(max_exp[i], e[i]);
  std::vector<std::vector<WeightPolynomial>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    powers[i].push_back(constant(nvars_, Rat(1)));
    for (int k = 1; k <= max_exp[i]; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }

  WeightPolynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    WeightPolynomial term = constant(nvars_, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) term = term * powers[i][e[i]];
    r += term;
  }
  return r;
}

WeightPolynomial WeightPolynomial::homogeneous_component(int d) const {
  WeightPolynomial r(nvars_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == d) r.terms_.emplace(e, c);
  return r;
}

bool WeightPolynomial::divisible_by_variable(int var) const {
  if (var < 0 || var >= nvars_) fail(errc::index_out_of_range, "variable index out of range");
  for (const auto& [e, c] : terms_)
    if (e[var] == 0) return false;
  return true;  // vacuously true for zero
}

std::vector<ExpVec> monomials_of_degree(int nvars, int d) {
  std::vector<ExpVec> out;
  ExpVec cur(nvars, 0);
  // Leading variable gets the largest exponent first, matching the order.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      cur[var] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, remaining - e);
    }
  };
  if (nvars == 0) return out;
  rec(rec, 0, d);
  return out;
}

std::vector<WeightPolynomial> layer_decompose(const WeightPolynomial& p, int var) {
  if (var < 0 || var >= p.nvars()) fail(errc::index_out_of_range, "variable index out of range");
  if (!p.is_homogeneous()) fail(errc::not_homogeneous, "layer decomposition needs homogeneous input");
  if (p.is_zero()) return {p};
  const int l = p.total_degree();
  std::vector<WeightPolynomial> layers(l + 1, WeightPolynomial(p.nvars()));
  for (const auto& [e, c] : p.terms()) {
    ExpVec stripped = e;
    stripped[var] = 0;
    layers[l - e[var]].add_term(stripped, c);
  }
  return layers;
}

WeightPolynomial simple_root(const CartanMatrix& A, int i) {
  if (i < 0 || i >= A.rank()) fail(errc::index_out_of_range, "generator index out of range");
  WeightPolynomial alpha(A.rank());
  for (int j = 0; j < A.rank(); ++j)
    alpha.add_term([&] { ExpVec e(A.rank(), 0); e[j] = 1; return e; }(),
                   Rat(static_cast<long>(A.entry(j, i))));
  return alpha;
}

WeightPolynomial weyl_action(const CartanMatrix& A, int i, const WeightPolynomial& p) {
  const int n = A.rank();
  if (p.nvars() != n) fail(errc::dimension_mismatch, "polynomial does not match the matrix rank");
  if (i < 0 || i >= n) fail(errc::index_out_of_range, "generator index out of range");
  std::vector<WeightPolynomial> images;
  images.reserve(n);
  for (int j = 0; j < n; ++j) images.push_back(WeightPolynomial::variable(n, j));
  images[i] -= simple_root(A, i);
  return p.substitute(images);
}

bool proportional(const WeightPolynomial& p, const WeightPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  // Cross-multiplication by the leading coefficients avoids division.
  return p.scaled(q.terms().begin()->second) == q.scaled(p.terms().begin()->second);
}

std::string pretty(const WeightPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    for (int i = 0; i < p.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "w" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << to_string(mag);
    } else {
      if (mag != 1) out << to_string(mag) << "*";
      out << mono;
    }
  }
  return out.str();
}

std::string polynomial_to_json(const WeightPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json t;
    t["exp"] = e;
    t["num"] = to_int64(c.get_num());
    t["den"] = to_int64(c.get_den());
    terms.push_back(std::move(t));
  }
  return terms.dump();
}

WeightPolynomial polynomial_from_json(const std::string& text, int nvars) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::parse_error, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_array()) fail(errc::parse_error, "expected a JSON array of terms");
  WeightPolynomial p(nvars);
  for (const auto& t : j) {
    if (!t.contains("exp") || !t.contains("num") || !t.contains("den"))
      fail(errc::parse_error, "term needs fields \"exp\", \"num\", \"den\"");
    ExpVec e = t.at("exp").get<ExpVec>();
    if (static_cast<int>(e.size()) != nvars)
      fail(errc::parse_error, "exponent vector length disagrees with the variable count");
    long den = t.at("den").get<long>();
    if (den == 0) fail(errc::parse_error, "zero denominator");
    p.add_term(e, make_rat(t.at("num").get<long>(), den));
  }
  return p;
}

}  // namespace kminv
