#include "ascruns/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <stdexcept>

namespace ascruns::mc {

namespace {

// Replications are split into fixed-size shards, each running its own
// substream; the shard layout is part of the output contract, not a tuning
// knob.
constexpr std::int64_t kShardSize = 4096;

std::vector<std::int64_t> run_shard(int m, int n, std::uint64_t shard_seed,
                                    std::int64_t count, int rmax) {
  std::vector<std::int64_t> counts(rmax, 0);
  SplitMix64 stream(shard_seed);
  for (std::int64_t s = 0; s < count; ++s) {
    const ColorSequence seq = sample_sequence(m, n, stream);
    ++counts[decompose_runs(seq).max_len - 1];
  }
  return counts;
}

}  // namespace

void SimConfig::validate() const {
  if (m < 2) throw std::invalid_argument("simulation needs m >= 2");
  if (n < 1) throw std::invalid_argument("simulation needs n >= 1");
  if (samples < 1) throw std::invalid_argument("simulation needs samples >= 1");
  if (threads < 1) throw std::invalid_argument("simulation needs threads >= 1");
}

ColorSequence sample_sequence(int m, int n, SplitMix64& stream) {
  std::vector<int> values(n);
  values[0] = static_cast<int>(stream.next_below(m)) + 1;
  for (int k = 1; k < n; ++k) {
    const int u = static_cast<int>(stream.next_below(m - 1)) + 1;
    values[k] = (u < values[k - 1]) ? u : u + 1;
  }
  return ColorSequence(std::move(values));
}

EmpiricalRunStats estimate(const SimConfig& config) {
  config.validate();
  const int rmax = std::min(config.m, config.n);
  const std::int64_t shards =
      (config.samples + kShardSize - 1) / kShardSize;

  std::vector<std::vector<std::int64_t>> partial(shards);
  auto shard_count = [&config, shards](std::int64_t shard) {
    return (shard + 1 < shards) ? kShardSize
                                : config.samples - shard * kShardSize;
  };

  auto process_shard = [&](std::int64_t shard) {
    partial[shard] =
        run_shard(config.m, config.n, substream_seed(config.seed, shard),
                  shard_count(shard), rmax);
  };

  if (config.threads <= 1 || shards == 1) {
    for (std::int64_t shard = 0; shard < shards; ++shard) {
      process_shard(shard);
    }
  } else {
    // Workers pull shard indices from a shared counter; every shard's result
    // lands in its own slot, so the merge below is schedule-independent.
    const auto workers =
        std::min<std::int64_t>(config.threads, shards);
    std::atomic<std::int64_t> queue{0};
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (std::int64_t w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&] {
        for (;;) {
          const std::int64_t shard = queue.fetch_add(1);
          if (shard >= shards) return;
          process_shard(shard);
        }
      }));
    }
    for (auto& f : futures) f.get();
  }

  EmpiricalRunStats stats;
  stats.m = config.m;
  stats.n = config.n;
  stats.samples = config.samples;
  stats.seed = config.seed;
  stats.counts.assign(rmax, 0);
  for (std::int64_t shard = 0; shard < shards; ++shard) {
    for (int r = 0; r < rmax; ++r) stats.counts[r] += partial[shard][r];
  }

  double mean = 0.0;
  for (int r = 1; r <= rmax; ++r) {
    mean += static_cast<double>(stats.counts[r - 1]) * r;
  }
  mean /= static_cast<double>(config.samples);
  stats.mean = mean;
  if (config.samples > 1) {
    double ss = 0.0;
    for (int r = 1; r <= rmax; ++r) {
      const double d = r - mean;
      ss += static_cast<double>(stats.counts[r - 1]) * d * d;
    }
    const double variance = ss / static_cast<double>(config.samples - 1);
    stats.std_error =
        std::sqrt(variance / static_cast<double>(config.samples));
  }
  return stats;
}

}  // namespace ascruns::mc
