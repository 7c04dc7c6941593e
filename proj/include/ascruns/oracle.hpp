#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ascruns/budget.hpp"
#include "ascruns/rational.hpp"
#include "ascruns/sequence.hpp"

// Ground truth for the exact computations, kept deliberately apart from the
// run-process kernel: everything here works on raw sequences. Enumeration
// covers tiny instances exactly; the prefix DP covers moderate ones.
namespace ascruns::oracle {

/// Exact distribution of M_n from the m*(m-1)^(n-1) equiprobable constrained
/// sequences, split by the first value.
struct EnumDistribution {
  int m = 0;
  int n = 0;
  std::uint64_t sequences_per_start = 0;  // (m-1)^(n-1)
  // counts[i-1][r-1] = #sequences with X_1 = i and M_n = r, r = 1..min(m,n)
  std::vector<std::vector<std::uint64_t>> counts;

  Rational p_eq_given_first(int r, int i) const;
  Rational p_ge_given_first(int r, int i) const;
  Rational p_eq(int r) const;
  Rational p_ge(int r) const;
  Rational expected_max() const;
};

EnumDistribution exact_distribution_enum(int m, int n,
                                         const Budget& budget = {});

/// P(M_n < r | X_1 = i) for i = 1..m by forward propagation over the prefix
/// state (last value, current ascending run length). Mass that completes a
/// run of length r is absorbed and dropped; what survives n steps is the
/// answer. T is double or Rational.
template <class T>
std::vector<T> exact_distribution_dp(int m, int n, int r,
                                     const Budget& budget = {});

/// P(M_n >= r | X_1 = i) via the DP.
template <class T>
std::vector<T> dp_p_ge_given_first(int m, int n, int r,
                                   const Budget& budget = {});

/// Unconditional P(M_n >= r) via the DP.
template <class T>
T dp_p_ge(int m, int n, int r, const Budget& budget = {});

/// E(M_n) = sum_{r=1}^{min(m,n)} P(M_n >= r) via the DP.
template <class T>
T dp_expected_max(int m, int n, const Budget& budget = {});

/// Exact joint weight of the first two completed ascending runs, tallied by
/// full enumeration. pair_weight[i][l1][j][l2] is P(first run = (i,l1),
/// second run = (j,l2)) scaled by m*(m-1)^(n-1); first_weight[i][l1] is the
/// matching marginal. n must be long enough that two runs always complete,
/// i.e. n >= 2(m-1)+... any n >= 2m+1 is safe.
struct FirstRunPairCounts {
  int m = 0;
  int n = 0;
  std::uint64_t total = 0;  // m*(m-1)^(n-1)
  std::vector<std::uint64_t> pair_weight;   // [((i-1)*(m+1)+l1)*(m*(m+2))+...]
  std::vector<std::uint64_t> first_weight;  // [(i-1)*(m+1)+l1]

  std::uint64_t pair(int i, int l1, int j, int l2) const;
  std::uint64_t first(int i, int l1) const;
  /// P(second run = (j,l2) | first run = (i,l1)) as exact count ratio.
  Rational conditional(int i, int l1, int j, int l2) const;
};

FirstRunPairCounts first_run_pair_counts(int m, int n,
                                         const Budget& budget = {});

// ---------------------------------------------------------------------------

template <class T>
std::vector<T> exact_distribution_dp(int m, int n, int r,
                                     const Budget& budget) {
  if (m < 2) throw std::invalid_argument("oracle DP needs m >= 2");
  if (n < 1) throw std::invalid_argument("oracle DP needs n >= 1");
  if (r < 1) throw std::invalid_argument("oracle DP needs r >= 1");
  budget.check_table(m, n);

  std::vector<T> survive(m, T(0));
  if (r == 1) return survive;  // every sequence has a run of length >= 1

  const int cap = r - 1;  // live run lengths; reaching r absorbs
  const T step = T(1) / T(m - 1);
  for (int first = 1; first <= m; ++first) {
    // mass[(v-1)*cap + (c-1)] = P(prefix ends at value v with current run
    // length c and no run of length >= r yet)
    std::vector<T> mass(static_cast<std::size_t>(m) * cap, T(0));
    std::vector<T> next(mass.size());
    mass[(first - 1) * cap] = T(1);
    for (int pos = 2; pos <= n; ++pos) {
      std::fill(next.begin(), next.end(), T(0));
      for (int v = 1; v <= m; ++v) {
        for (int c = 1; c <= cap; ++c) {
          const T& p = mass[(v - 1) * cap + (c - 1)];
          if (p == T(0)) continue;
          const T share = p * step;
          for (int w = 1; w <= m; ++w) {
            if (w == v) continue;
            if (w > v) {
              if (c + 1 < r) next[(w - 1) * cap + c] += share;
              // c + 1 == r: run of length r completed, mass absorbed
            } else {
              next[(w - 1) * cap] += share;
            }
          }
        }
      }
      mass.swap(next);
    }
    T total = T(0);
    for (const T& p : mass) total += p;
    survive[first - 1] = total;
  }
  return survive;
}

template <class T>
std::vector<T> dp_p_ge_given_first(int m, int n, int r, const Budget& budget) {
  std::vector<T> below = exact_distribution_dp<T>(m, n, r, budget);
  for (T& p : below) p = T(1) - p;
  return below;
}

template <class T>
T dp_p_ge(int m, int n, int r, const Budget& budget) {
  const std::vector<T> ge = dp_p_ge_given_first<T>(m, n, r, budget);
  T sum = T(0);
  for (const T& p : ge) sum += p;
  return sum / T(m);
}

template <class T>
T dp_expected_max(int m, int n, const Budget& budget) {
  const int rtop = std::min(m, n);
  T sum = T(0);
  for (int r = 1; r <= rtop; ++r) sum += dp_p_ge<T>(m, n, r, budget);
  return sum;
}

}  // namespace ascruns::oracle
