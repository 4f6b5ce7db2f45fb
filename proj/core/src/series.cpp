#include "kminv/series.hpp"

#include "kminv/errors.hpp"

namespace kminv {

Series series_one(int order) {
  Series s(order + 1);
  s[0] = 1;
  return s;
}

Series series_from(std::vector<Rat> coeffs, int order) {
  coeffs.resize(order + 1);
  return coeffs;
}

Series series_mul(const Series& a, const Series& b, int order) {
  Series r(order + 1);
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series series_inverse(const Series& a, int order) {
  if (a.empty() || a[0] == 0)
    fail(errc::precondition_violated, "series inverse needs a unit constant term");
  Series r(order + 1);
  r[0] = 1 / a[0];
  for (int k = 1; k <= order; ++k) {
    Rat acc(0);
    for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j)
      if (a[j] != 0) acc += a[j] * r[k - j];
    r[k] = -acc / a[0];
  }
  return r;
}

Series series_pow(const Series& a, long long e, int order) {
  if (e < 0) fail(errc::precondition_violated, "negative series power");
  Series r = series_one(order);
  for (long long k = 0; k < e; ++k) r = series_mul(r, a, order);
  return r;
}

Series series_one_minus_tk(int k, int order) {
  Series s(order + 1);
  s[0] = 1;
  if (k <= order) s[k] = -1;
  return s;
}

Series series_one_plus_tk(int k, int order) {
  Series s(order + 1);
  s[0] = 1;
  if (k <= order) s[k] = 1;
  return s;
}

}  // namespace kminv
