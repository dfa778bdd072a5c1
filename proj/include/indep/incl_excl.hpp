#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "indep/errors.hpp"
#include "indep/sequences.hpp"
#include "indep/series_family.hpp"

namespace indep {

namespace detail {

// Neumaier variant of compensated summation.
class CompensatedSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace detail

/// Elementary symmetric sums S_1..S_N of the probabilities, by the one-pass
/// reverse-update recurrence (O(N^2)): after consuming x, e_k += x * e_{k-1}
/// for k descending.
template <class T>
[[nodiscard]] std::vector<T> elementary_sums(const ProbSeq<T>& x) {
  std::vector<T> e(x.size() + 1, T(0));
  e[0] = T(1);
  std::size_t used = 0;
  for (const T& p : x) {
    ++used;
    for (std::size_t k = used; k >= 1; --k) e[k] += p * e[k - 1];
  }
  return {e.begin() + 1, e.end()};
}

/// Partial alternating sums A_m = sum_{k <= m} (-1)^(k-1) S_k for m = 0..N;
/// A_N is the inclusion-exclusion value of P(union). Floating mode uses
/// compensated summation, exact mode is exact.
template <class T>
[[nodiscard]] std::vector<T> alternating_partials(const ProbSeq<T>& x) {
  std::vector<T> s = elementary_sums(x);
  std::vector<T> out;
  out.reserve(s.size() + 1);
  out.push_back(T(0));
  if constexpr (is_exact_v<T>) {
    T acc{0};
    bool positive = true;
    for (const T& sk : s) {
      if (positive)
        acc += sk;
      else
        acc -= sk;
      positive = !positive;
      out.push_back(acc);
    }
  } else {
    detail::CompensatedSum acc;
    bool positive = true;
    for (const T& sk : s) {
      acc.add(positive ? sk : -sk);
      positive = !positive;
      out.push_back(acc.value());
    }
  }
  return out;
}

/// P(union) of independent events by full inclusion-exclusion over the
/// symmetric sums. Agrees with union_prob up to roundoff (exactly, in exact
/// mode).
template <class T>
[[nodiscard]] T inclusion_exclusion(const ProbSeq<T>& x) {
  return alternating_partials(x).back();
}

template <class T>
struct BonferroniBounds {
  T lower_raw;  // alternating sum truncated after 2r terms
  T upper_raw;  // alternating sum truncated after 2r-1 terms
  T lower;      // lower_raw clamped into [0, 1]
  T upper;      // upper_raw clamped into [0, 1]
};

/// Truncated inclusion-exclusion sandwich for P(union):
///   sum_{k <= 2r} (-1)^(k-1) S_k  <=  P(union)  <=  sum_{k <= 2r-1} ...
/// Requires 1 <= 2r-1 <= N. Raw values can leave [0, 1]; clamped values are
/// reported alongside.
template <class T>
[[nodiscard]] BonferroniBounds<T> bonferroni(const ProbSeq<T>& x, std::size_t r) {
  if (r < 1) throw DomainError("bonferroni order must be >= 1");
  if (2 * r - 1 > x.size()) throw DomainError("bonferroni order exceeds sequence length");
  std::vector<T> partial = alternating_partials(x);
  std::size_t even_cut = std::min(2 * r, x.size());
  T lo = partial[even_cut];
  T hi = partial[2 * r - 1];
  auto clamp01 = [](const T& v) { return v < T(0) ? T(0) : (v > T(1) ? T(1) : v); };
  return {lo, hi, clamp01(lo), clamp01(hi)};
}

struct TailCertificate {
  double next_sum_upper;   // bound on S_{K+1} of the infinite family
  double remainder_bound;  // bound on sum_{k > K} S_k
  double decay_ratio;      // rho = certified tail sum after K
};

/// Certifies geometric decay of the symmetric sums of an infinite family
/// past index K: S_{K+1} <= S_K * rho and sum_{k > K} S_k <= S_K * rho/(1-rho)
/// with rho = sum_{n > K} x_n. Requires K >= 1, a convergent family, and
/// rho < 1.
[[nodiscard]] TailCertificate tail_certificate(const SeriesFamily& family,
                                               std::size_t k);

}  // namespace indep
