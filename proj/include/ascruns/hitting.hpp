#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ascruns/budget.hpp"
#include "ascruns/kernel.hpp"

namespace ascruns {

struct HittingTableOptions {
  /// Keep every W_{h,r} vector. Off by default: the recursion only needs the
  /// r-1 most recent vectors per column, an O(m^2) working set.
  bool full_table = false;
  Budget budget{};
};

/// W_{h,r}(i) = P(T_r <= h | V_1 = i) = P(M_h >= r | V_1 = i) for h = 1..n,
/// r = 1..min(m,n), where T_r is the first time an ascending run of length
/// at least r has completed and M_h the maximal run length among X_1..X_h.
///
/// Filled column by column in r:
///   W_{h,1} = 1,  W_{h,r} = 0 for h < r,
///   W_{h,r} = psi_r + sum_{l=1}^{r-1} Phi_l W_{h-l,r}   for h >= r.
template <class T>
class HittingTable {
 public:
  int m() const { return m_; }
  int n() const { return n_; }
  int rmax() const { return rmax_; }
  bool has_full_table() const { return !full_.empty(); }

  /// W_{h,r}(i). Every (h,r,i) in full-table mode; compact mode keeps h = n.
  const T& w(int h, int r, int i) const {
    check_hr(h, r);
    if (h == n_) return final_[r - 1][i - 1];
    if (full_.empty()) {
      throw std::logic_error("h < n requires full_table mode");
    }
    return full_[r - 1][h - 1][i - 1];
  }

  /// sum_i W_{h,r}(i), available for every h in both modes.
  const T& column_sum(int h, int r) const {
    check_hr(h, r);
    return colsum_[(h - 1) * rmax_ + (r - 1)];
  }

  template <class U>
  friend HittingTable<U> hitting_table(const RunKernel<U>&, int,
                                       HittingTableOptions);

 private:
  void check_hr(int h, int r) const {
    if (h < 1 || h > n_ || r < 1 || r > rmax_) {
      throw std::out_of_range("hitting table index (h,r) out of range");
    }
  }

  int m_ = 0;
  int n_ = 0;
  int rmax_ = 0;
  std::vector<T> colsum_;                        // (h-1)*rmax + (r-1)
  std::vector<std::vector<T>> final_;            // [r-1] -> W_{n,r}
  std::vector<std::vector<std::vector<T>>> full_;  // [r-1][h-1] -> W_{h,r}
};

template <class T>
HittingTable<T> hitting_table(const RunKernel<T>& kernel, int n,
                              HittingTableOptions opt = {}) {
  if (n < 1) throw std::invalid_argument("sequence length n must be >= 1");
  const int m = kernel.m();
  opt.budget.check_table(m, n);

  HittingTable<T> table;
  table.m_ = m;
  table.n_ = n;
  const int rmax = table.rmax_ = std::min(m, n);
  table.colsum_.assign(static_cast<std::size_t>(n) * rmax, T(0));
  table.final_.assign(rmax, std::vector<T>(m, T(0)));
  if (opt.full_table) {
    table.full_.assign(rmax, {});
    for (auto& column : table.full_) {
      column.assign(n, std::vector<T>(m, T(0)));
    }
  }

  // r = 1: T_1 = 1, so W_{h,1} is all ones.
  for (int h = 1; h <= n; ++h) {
    table.colsum_[(h - 1) * rmax] = T(m);
  }
  std::fill(table.final_[0].begin(), table.final_[0].end(), T(1));
  if (opt.full_table) {
    for (int h = 1; h <= n; ++h) {
      std::fill(table.full_[0][h - 1].begin(), table.full_[0][h - 1].end(),
                T(1));
    }
  }

  std::vector<T> cur(m);
  for (int r = 2; r <= rmax; ++r) {
    // ring[h' mod (r-1)] = W_{h',r} for the r-1 most recent h'; vectors for
    // h' < r are zero, which the initial fill provides.
    std::vector<std::vector<T>> ring(r - 1, std::vector<T>(m, T(0)));
    for (int h = r; h <= n; ++h) {
      for (int i = 1; i <= m; ++i) cur[i - 1] = kernel.psi(r, i);
      for (int l = 1; l <= r - 1; ++l) {
        const std::vector<T>& prev = ring[(h - l) % (r - 1)];
        for (int i = 1; i <= m; ++i) {
          T acc = T(0);
          for (int j = 1; j <= m; ++j) {
            acc += kernel.phi(l, i, j) * prev[j - 1];
          }
          cur[i - 1] += acc;
        }
      }
      T sum = T(0);
      for (int i = 0; i < m; ++i) sum += cur[i];
      table.colsum_[(h - 1) * rmax + (r - 1)] = sum;
      if (opt.full_table) table.full_[r - 1][h - 1] = cur;
      if (h == n) table.final_[r - 1] = cur;
      ring[h % (r - 1)].swap(cur);
    }
  }
  return table;
}

/// Distribution of M_n read off the last row of the table:
/// P(M_n >= r) = (1/m) sum_i W_{n,r}(i), P(M_n = r) by differencing.
template <class T>
struct RunLengthDistribution {
  int m = 0;
  int n = 0;
  std::vector<T> p_ge;  // [r-1], r = 1..min(m,n)
  std::vector<T> p_eq;  // [r-1]
  std::vector<std::vector<T>> p_ge_given_first;  // [r-1][i-1]

  const T& p_ge_at(int r) const { return p_ge[r - 1]; }
  const T& p_eq_at(int r) const { return p_eq[r - 1]; }
};

template <class T>
RunLengthDistribution<T> run_length_distribution(const HittingTable<T>& table) {
  const int m = table.m();
  const int rmax = table.rmax();
  RunLengthDistribution<T> dist;
  dist.m = m;
  dist.n = table.n();
  dist.p_ge.resize(rmax);
  dist.p_eq.resize(rmax);
  dist.p_ge_given_first.assign(rmax, std::vector<T>(m));
  for (int r = 1; r <= rmax; ++r) {
    dist.p_ge[r - 1] = table.column_sum(table.n(), r) / T(m);
    for (int i = 1; i <= m; ++i) {
      dist.p_ge_given_first[r - 1][i - 1] = table.w(table.n(), r, i);
    }
  }
  for (int r = 1; r < rmax; ++r) {
    dist.p_eq[r - 1] = dist.p_ge[r - 1] - dist.p_ge[r];
  }
  dist.p_eq[rmax - 1] = dist.p_ge[rmax - 1];
  return dist;
}

/// E(M_h) = (1/m) sum_{r=1}^{min(m,h)} sum_i W_{h,r}(i) for h = 1..n.
template <class T>
std::vector<T> expected_max_run(const HittingTable<T>& table) {
  const int m = table.m();
  std::vector<T> expectation(table.n());
  for (int h = 1; h <= table.n(); ++h) {
    const int rtop = std::min(m, h);
    T sum = T(0);
    for (int r = 1; r <= rtop; ++r) sum += table.column_sum(h, r);
    expectation[h - 1] = sum / T(m);
  }
  return expectation;
}

}  // namespace ascruns
