#pragma once

#include <cstdint>
#include <vector>

#include "ascruns/rng.hpp"
#include "ascruns/sequence.hpp"

namespace ascruns::mc {

struct SimConfig {
  int m = 2;
  int n = 1;
  std::int64_t samples = 1;
  std::uint64_t seed = 0;
  int threads = 1;

  void validate() const;
};

/// Histogram of the maximal run length over independent replications.
/// Identical config (seed included) gives a bit-identical result no matter
/// how many threads ran it.
struct EmpiricalRunStats {
  int m = 0;
  int n = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> counts;  // counts[r-1], r = 1..min(m,n)
  double mean = 0.0;
  double std_error = 0.0;  // sample sd / sqrt(samples); 0 when samples == 1
};

/// One realization of the color process: X_1 uniform on 1..m, then each
/// symbol by the index-shift draw — u uniform on 1..m-1, emit u if
/// u < previous else u+1. Exactly one generator call per symbol.
ColorSequence sample_sequence(int m, int n, SplitMix64& stream);

EmpiricalRunStats estimate(const SimConfig& config);

}  // namespace ascruns::mc
