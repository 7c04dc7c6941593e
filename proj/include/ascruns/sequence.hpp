#pragma once

#include <vector>

namespace ascruns {

/// A realization x_1..x_k of the color process: positive integer colors with
/// consecutive values always distinct. Construction validates both.
class ColorSequence {
 public:
  explicit ColorSequence(std::vector<int> values);

  const std::vector<int>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  int max_value() const;

 private:
  std::vector<int> values_;
};

/// One maximal strictly increasing block.
struct Run {
  int start_value = 0;
  int length = 0;

  bool operator==(const Run&) const = default;
};

struct RunDecomposition {
  std::vector<Run> runs;
  int max_len = 0;
};

/// Greedy left-to-right split into maximal strictly increasing contiguous
/// blocks; every strict descent closes a run.
RunDecomposition decompose_runs(const ColorSequence& seq);

}  // namespace ascruns
