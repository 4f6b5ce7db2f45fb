#pragma once

#include "kminv/rational.hpp"

#include <vector>

namespace kminv {

// Truncated power series over Rat; coeffs[k] is the t^k coefficient and
// every series carries order+1 coefficients.
using Series = std::vector<Rat>;

Series series_one(int order);
Series series_from(std::vector<Rat> coeffs, int order);  // pad or truncate
Series series_mul(const Series& a, const Series& b, int order);
// Requires a[0] != 0.
Series series_inverse(const Series& a, int order);
Series series_pow(const Series& a, long long e, int order);  // e >= 0
Series series_one_minus_tk(int k, int order);                // 1 - t^k
Series series_one_plus_tk(int k, int order);                 // 1 + t^k

}  // namespace kminv
