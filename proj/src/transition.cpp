#include "ascruns/transition.hpp"

#include <cmath>

namespace ascruns {

double max_transition_row_sum_error(const RunKernel<double>& kernel) {
  const RunStateSpace space(kernel.m());
  const int count = space.size();
  const int initial = space.initial_index();
  double worst = 0.0;
  for (int from = 0; from < count; ++from) {
    const RunState src = space.state(from);
    const double denom = kernel.varphi(src.len, src.v);
    long double sum = 0.0L;
    for (int to = 0; to < count; ++to) {
      if (to == initial) continue;
      const RunState dst = space.state(to);
      sum += kernel.phi(src.len, src.v, dst.v) *
             kernel.varphi(dst.len, dst.v) / denom;
    }
    const double err = std::fabs(static_cast<double>(sum) - 1.0);
    if (err > worst) worst = err;
  }
  return worst;
}

}  // namespace ascruns
