#include "ascruns/oracle.hpp"

#include <algorithm>

namespace ascruns::oracle {

namespace {

// Walks every constrained sequence of length n in lexicographic order. The
// leaf callback sees the full sequence plus its maximal run length.
template <class Leaf>
void enumerate_sequences(int m, int n, Leaf&& leaf) {
  std::vector<int> value(n), run_len(n), max_len(n), next(n);
  for (int first = 1; first <= m; ++first) {
    value[0] = first;
    run_len[0] = 1;
    max_len[0] = 1;
    if (n == 1) {
      leaf(value, 1);
      continue;
    }
    std::fill(next.begin(), next.end(), 1);
    int k = 1;  // position being chosen, 0-based
    while (k >= 1) {
      int j = next[k];
      if (j == value[k - 1]) ++j;  // consecutive repeat forbidden
      if (j > m) {
        next[k] = 1;
        --k;
        if (k >= 1) ++next[k];
        continue;
      }
      next[k] = j;
      value[k] = j;
      run_len[k] = (j > value[k - 1]) ? run_len[k - 1] + 1 : 1;
      max_len[k] = std::max(max_len[k - 1], run_len[k]);
      if (k == n - 1) {
        leaf(value, max_len[k]);
        ++next[k];
      } else {
        ++k;
      }
    }
  }
}

}  // namespace

EnumDistribution exact_distribution_enum(int m, int n, const Budget& budget) {
  if (m < 2) throw std::invalid_argument("enumeration needs m >= 2");
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  budget.check_enumeration(m, n);

  EnumDistribution dist;
  dist.m = m;
  dist.n = n;
  dist.sequences_per_start = enum_sequence_count(m, n) / m;
  dist.counts.assign(m, std::vector<std::uint64_t>(std::min(m, n), 0));
  enumerate_sequences(m, n, [&dist](const std::vector<int>& seq, int max_len) {
    ++dist.counts[seq[0] - 1][max_len - 1];
  });
  return dist;
}

Rational EnumDistribution::p_eq_given_first(int r, int i) const {
  return Rational(counts[i - 1][r - 1], sequences_per_start);
}

Rational EnumDistribution::p_ge_given_first(int r, int i) const {
  std::uint64_t acc = 0;
  for (int s = r; s <= static_cast<int>(counts[i - 1].size()); ++s) {
    acc += counts[i - 1][s - 1];
  }
  return Rational(acc, sequences_per_start);
}

Rational EnumDistribution::p_eq(int r) const {
  std::uint64_t acc = 0;
  for (int i = 1; i <= m; ++i) acc += counts[i - 1][r - 1];
  return Rational(acc, sequences_per_start * static_cast<std::uint64_t>(m));
}

Rational EnumDistribution::p_ge(int r) const {
  Rational sum = 0;
  for (int i = 1; i <= m; ++i) sum += p_ge_given_first(r, i);
  return sum / m;
}

Rational EnumDistribution::expected_max() const {
  BigInt weighted = 0;
  for (int i = 1; i <= m; ++i) {
    for (int r = 1; r <= static_cast<int>(counts[i - 1].size()); ++r) {
      weighted += BigInt(counts[i - 1][r - 1]) * r;
    }
  }
  return Rational(weighted, BigInt(sequences_per_start) * m);
}

std::uint64_t FirstRunPairCounts::pair(int i, int l1, int j, int l2) const {
  const std::size_t idx =
      ((static_cast<std::size_t>(i - 1) * (m + 1) + l1) * m + (j - 1)) *
          (m + 1) +
      l2;
  return pair_weight[idx];
}

std::uint64_t FirstRunPairCounts::first(int i, int l1) const {
  return first_weight[static_cast<std::size_t>(i - 1) * (m + 1) + l1];
}

Rational FirstRunPairCounts::conditional(int i, int l1, int j, int l2) const {
  const std::uint64_t denom = first(i, l1);
  if (denom == 0) {
    throw std::invalid_argument("first run (" + std::to_string(i) + "," +
                                std::to_string(l1) + ") never occurs");
  }
  return Rational(pair(i, l1, j, l2), denom);
}

FirstRunPairCounts first_run_pair_counts(int m, int n, const Budget& budget) {
  if (m < 2) throw std::invalid_argument("enumeration needs m >= 2");
  if (n < 2 * m + 1) {
    // shorter horizons can truncate the second run
    throw std::invalid_argument("first-run pair counts need n >= 2m+1");
  }
  budget.check_enumeration(m, n);

  FirstRunPairCounts tally;
  tally.m = m;
  tally.n = n;
  tally.total = enum_sequence_count(m, n);
  tally.pair_weight.assign(static_cast<std::size_t>(m) * (m + 1) * m * (m + 1),
                           0);
  tally.first_weight.assign(static_cast<std::size_t>(m) * (m + 1), 0);

  enumerate_sequences(m, n, [&tally, m](const std::vector<int>& seq, int) {
    const RunDecomposition dec = decompose_runs(ColorSequence(seq));
    const Run& r1 = dec.runs[0];
    const Run& r2 = dec.runs[1];
    const std::size_t fidx =
        static_cast<std::size_t>(r1.start_value - 1) * (m + 1) + r1.length;
    ++tally.first_weight[fidx];
    const std::size_t pidx =
        (fidx * m + (r2.start_value - 1)) * (m + 1) + r2.length;
    ++tally.pair_weight[pidx];
  });
  return tally;
}

}  // namespace ascruns::oracle
