#pragma once

#include <stdexcept>
#include <vector>

namespace ascruns {

/// Number of colors m; the process draws from {1,...,m} with consecutive
/// values forbidden to repeat.
struct AlphabetParams {
  int m;

  explicit AlphabetParams(int m_) : m(m_) {
    if (m < 2) throw std::invalid_argument("alphabet size m must be >= 2");
  }
};

/// Run statistics of the constrained uniform process, conditioned on the
/// first value of the current ascending run.
///
/// For a run starting at value i (1-based, i in 1..m):
///   psi_l(i)    = P(run length >= l)
///               = C(m-i, l-1) / (m-1)^(l-1)          if m-i >= l-1, else 0
///   varphi_l(i) = P(run length == l) = psi_l(i) - psi_{l+1}(i)
///   Phi_l(i,j)  = P(run length == l, next run starts at j)
///               = [ C(m-i, l-1)*1{m-i >= l-1}
///                 - C(j-i, l-1)*1{j-i >= l-1} ] / (m-1)^l
///
/// The binomial-over-power ratios are built by multiplying one bounded
/// factor per step, C(d,k)/(m-1)^k = C(d,k-1)/(m-1)^(k-1) * (d-k+1)/(k(m-1)),
/// so no coefficient or power is ever materialized on its own.
template <class T>
class RunKernel {
 public:
  int m() const { return m_; }

  /// Phi_l(i,j), 1-based, l in 1..m, i,j in 1..m.
  const T& phi(int l, int i, int j) const {
    return phi_[l - 1][(i - 1) * m_ + (j - 1)];
  }

  /// psi_l(i), l in 1..m+1 (psi_{m+1} is identically 0), i in 1..m.
  const T& psi(int l, int i) const { return psi_[l - 1][i - 1]; }

  /// varphi_l(i), l in 1..m, i in 1..m.
  const T& varphi(int l, int i) const { return varphi_[l - 1][i - 1]; }

  /// Self-check hook: shifts one Phi entry so that downstream consistency
  /// checks must notice. Not part of the computation API.
  void perturb_phi(int l, int i, int j, const T& delta) {
    phi_[l - 1][(i - 1) * m_ + (j - 1)] += delta;
  }

  template <class U>
  friend RunKernel<U> build_kernel(AlphabetParams params);

 private:
  int m_ = 0;
  std::vector<std::vector<T>> phi_;     // [l-1], row-major m x m
  std::vector<std::vector<T>> psi_;     // [l-1], length m, l = 1..m+1
  std::vector<std::vector<T>> varphi_;  // [l-1], length m
};

template <class T>
RunKernel<T> build_kernel(AlphabetParams params) {
  const int m = params.m;
  RunKernel<T> kernel;
  kernel.m_ = m;
  kernel.psi_.assign(m + 1, std::vector<T>(m, T(0)));
  kernel.varphi_.assign(m, std::vector<T>(m, T(0)));
  kernel.phi_.assign(m, std::vector<T>(static_cast<std::size_t>(m) * m, T(0)));

  // psi_l(i) = C(m-i, l-1) / (m-1)^(l-1), one factor per l step.
  for (int i = 1; i <= m; ++i) {
    const int d = m - i;
    T a = T(1);
    kernel.psi_[0][i - 1] = a;
    for (int l = 2; l <= m + 1; ++l) {
      const int k = l - 1;  // lower binomial index
      if (k > d) break;     // indicator fails from here on; entries stay 0
      a = a * T(d - k + 1) / T(k * (m - 1));
      kernel.psi_[l - 1][i - 1] = a;
    }
  }

  for (int l = 1; l <= m; ++l) {
    for (int i = 1; i <= m; ++i) {
      kernel.varphi_[l - 1][i - 1] =
          kernel.psi_[l - 1][i - 1] - kernel.psi_[l][i - 1];
    }
  }

  // Phi_l(i,j) = (C(m-i,l-1)/(m-1)^(l-1) - C(j-i,l-1)/(m-1)^(l-1)) / (m-1),
  // the second stream only while j - i >= l - 1.
  for (int i = 1; i <= m; ++i) {
    const int d = m - i;
    for (int j = 1; j <= m; ++j) {
      const int e = j - i;
      T a = T(1);
      T b = (e >= 0) ? T(1) : T(0);
      for (int l = 1; l <= m; ++l) {
        const int k = l - 1;
        if (k > 0) {
          a = (k <= d) ? a * T(d - k + 1) / T(k * (m - 1)) : T(0);
          b = (e >= 0 && k <= e) ? b * T(e - k + 1) / T(k * (m - 1)) : T(0);
        }
        if (a == T(0) && b == T(0)) break;
        kernel.phi_[l - 1][(i - 1) * m + (j - 1)] = (a - b) / T(m - 1);
      }
    }
  }

  return kernel;
}

}  // namespace ascruns
