#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ascruns/kernel.hpp"

namespace ascruns {

/// One state of the run process: first value of the current ascending run
/// and the run's length.
struct RunState {
  int v = 0;
  int len = 0;

  bool operator==(const RunState&) const = default;
};

/// The reachable states E = {(i,l) | 1 <= i <= m-1, 1 <= l <= m-i+1} \ {(1,1)}
/// plus the initial-only state (m,1), enumerated in (v,len) lexicographic
/// order with (m,1) last. (m,1) can occur as Y_1 but is never re-entered,
/// and (1,1) is impossible: a run starting at 1 always ascends at least once.
class RunStateSpace {
 public:
  explicit RunStateSpace(int m) : m_(m) {
    if (m < 2) throw std::invalid_argument("state space needs m >= 2");
    index_.assign(static_cast<std::size_t>(m + 1) * (m + 2), -1);
    for (int v = 1; v <= m - 1; ++v) {
      for (int len = 1; len <= m - v + 1; ++len) {
        if (v == 1 && len == 1) continue;
        index_[slot(v, len)] = static_cast<int>(states_.size());
        states_.push_back({v, len});
      }
    }
    index_[slot(m, 1)] = static_cast<int>(states_.size());
    states_.push_back({m, 1});
  }

  int m() const { return m_; }
  int size() const { return static_cast<int>(states_.size()); }
  RunState state(int idx) const { return states_[idx]; }

  /// Index of a state, or -1 when (v,len) is not part of E u {(m,1)}.
  int index(RunState s) const {
    if (s.v < 1 || s.v > m_ || s.len < 1 || s.len > m_ + 1) return -1;
    return index_[slot(s.v, s.len)];
  }

  /// Index of the initial-only state (m,1).
  int initial_index() const { return size() - 1; }

 private:
  std::size_t slot(int v, int len) const {
    return static_cast<std::size_t>(v) * (m_ + 2) + len;
  }

  int m_;
  std::vector<RunState> states_;
  std::vector<int> index_;
};

/// P_{(i,l),(j,lam)} = Phi_l(i,j) * varphi_lam(j) / varphi_l(i).
/// Every enumerated source state has varphi_l(i) > 0; a zero denominator
/// means the kernel and the state space disagree.
template <class T>
T transition_probability(const RunKernel<T>& kernel, RunState from,
                         RunState to) {
  const T& denom = kernel.varphi(from.len, from.v);
  if (denom == T(0)) {
    throw std::logic_error("varphi_" + std::to_string(from.len) + "(" +
                           std::to_string(from.v) +
                           ") = 0 for an enumerated state");
  }
  return kernel.phi(from.len, from.v, to.v) * kernel.varphi(to.len, to.v) /
         denom;
}

/// Dense transition matrix of the run process over E u {(m,1)}. Rows over
/// destinations in E sum to 1; the (m,1) column is identically zero since no
/// later run can start at m. Memory is O(|E|^2) = O(m^4).
template <class T>
struct TransitionMatrix {
  RunStateSpace states;
  std::vector<T> p;  // row-major, size() x size()

  const T& at(int from, int to) const {
    return p[static_cast<std::size_t>(from) * states.size() + to];
  }
};

template <class T>
TransitionMatrix<T> build_transition_matrix(const RunKernel<T>& kernel) {
  RunStateSpace space(kernel.m());
  const int count = space.size();
  TransitionMatrix<T> matrix{space, {}};
  matrix.p.assign(static_cast<std::size_t>(count) * count, T(0));
  for (int from = 0; from < count; ++from) {
    const RunState src = space.state(from);
    for (int to = 0; to < count; ++to) {
      if (to == space.initial_index()) continue;  // never re-entered
      matrix.p[static_cast<std::size_t>(from) * count + to] =
          transition_probability(kernel, src, space.state(to));
    }
  }
  return matrix;
}

/// Max |row sum - 1| over all source states, streaming entries so the dense
/// matrix never has to exist (used for invariant checks at large m).
double max_transition_row_sum_error(const RunKernel<double>& kernel);

}  // namespace ascruns
