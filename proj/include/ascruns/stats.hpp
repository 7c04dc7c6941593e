#pragma once

#include <cstdint>
#include <vector>

namespace ascruns::stats {

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a).
/// Series expansion below x < a+1, Lentz continued fraction above; good to
/// ~1e-14 relative, far beyond what the significance tests here need.
double gamma_q(double a, double x);

/// Upper tail P(X >= stat) of a chi-square with df degrees of freedom.
double chi_square_tail(double stat, int df);

/// Pearson statistic sum (observed - expected)^2 / expected against a flat
/// expectation over the cells.
double pearson_uniform_stat(const std::vector<std::int64_t>& counts);

}  // namespace ascruns::stats
