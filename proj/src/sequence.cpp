#include "ascruns/sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ascruns {

ColorSequence::ColorSequence(std::vector<int> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("color sequence must be nonempty");
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] < 1) {
      throw std::invalid_argument("color at position " + std::to_string(k + 1) +
                                  " is not a positive integer");
    }
    if (k > 0 && values_[k] == values_[k - 1]) {
      throw std::invalid_argument("colors at positions " + std::to_string(k) +
                                  " and " + std::to_string(k + 1) +
                                  " repeat; consecutive values must differ");
    }
  }
}

int ColorSequence::max_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

RunDecomposition decompose_runs(const ColorSequence& seq) {
  const std::vector<int>& x = seq.values();
  RunDecomposition dec;
  Run cur{x[0], 1};
  for (std::size_t k = 1; k < x.size(); ++k) {
    if (x[k] > x[k - 1]) {
      ++cur.length;
    } else {
      dec.runs.push_back(cur);
      cur = Run{x[k], 1};
    }
  }
  dec.runs.push_back(cur);
  for (const Run& run : dec.runs) dec.max_len = std::max(dec.max_len, run.length);
  return dec;
}

}  // namespace ascruns
