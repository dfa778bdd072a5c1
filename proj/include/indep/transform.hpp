#pragma once

#include <cfloat>
#include <cmath>
#include <cstddef>
#include <vector>

#include "indep/errors.hpp"
#include "indep/sequences.hpp"
#include "indep/series_family.hpp"

namespace indep {

/// Weights t_n = x_n * prod_{k < n} (1 - x_k): the probability that, among
/// independent events with probabilities x, the n-th is the first to occur.
/// Prefix identity: sum_{n <= N} t_n = 1 - prod_{n <= N} (1 - x_n).
template <class T>
[[nodiscard]] DisjointWeights<T> forward(const ProbSeq<T>& x) {
  std::vector<T> t;
  t.reserve(x.size());
  T survive{1};
  for (const T& p : x) {
    t.push_back(p * survive);
    survive *= T(1) - p;
  }
  return DisjointWeights<T>(std::move(t));
}

/// Probability that at least one event occurs: 1 - prod (1 - x_n).
template <class T>
[[nodiscard]] T union_prob(const ProbSeq<T>& x) {
  T miss{1};
  for (const T& p : x) miss *= T(1) - p;
  return T(1) - miss;
}

namespace detail {

template <class T>
bool prefix_saturated(const T& denom, std::size_t n) {
  if constexpr (is_exact_v<T>) {
    (void)n;
    return denom == 0;
  } else {
    return std::abs(denom) <= prefix_slack(n);
  }
}

}  // namespace detail

/// Recovers x from its weights: x_n = t_n / (1 - sum_{k < n} t_k).
///
/// Saturated prefix (sum already 1): a zero weight maps to x_n = 0; a
/// positive weight is impossible and throws InfeasibleWeights. A prefix
/// beyond 1 cannot pass DisjointWeights validation, so NegativeDenominator
/// here is purely defensive.
template <class T>
[[nodiscard]] ProbSeq<T> inverse(const DisjointWeights<T>& t) {
  std::vector<T> x;
  x.reserve(t.size());
  T prefix{0};
  std::size_t n = 0;
  for (const T& w : t) {
    T denom = T(1) - prefix;
    if (detail::prefix_saturated(denom, n)) {
      if (w > T(0)) throw InfeasibleWeights("positive weight after prefix sum 1");
      x.push_back(T(0));
    } else if (denom < T(0)) {
      throw NegativeDenominator("weight prefix sum exceeds 1");
    } else {
      T v = w / denom;
      if constexpr (!is_exact_v<T>) {
        // Roundoff can push an exactly-saturating weight a hair past 1.
        if (v > 1.0 && v <= 1.0 + 16.0 * DBL_EPSILON) v = 1.0;
      }
      x.push_back(v);
    }
    prefix += w;
    ++n;
  }
  return ProbSeq<T>(std::move(x));
}

enum class LimitStatus { converged_below_one, equals_one };

struct LimitResult {
  double value;
  LimitStatus status;
};

/// Limit of sum_n t_n over the whole infinite family: 1 - prod (1 - x_n),
/// truncated once the certified tail drops to eps (the tail of the t sum is
/// bounded by the tail of the x sum). The limit equals 1 exactly when the
/// series diverges or some term equals 1.
[[nodiscard]] inline LimitResult limit_sum_T(const SeriesFamily& family, double eps) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  if (family.divergent_sum()) return {1.0, LimitStatus::equals_one};

  // Smallest truncation whose certified tail is <= eps, by exponential plus
  // binary search (the tail is non-increasing in the index).
  constexpr std::size_t kMaxTerms = 50'000'000;
  std::size_t cut = 0;
  if (family.tail_sum_after(0) > eps) {
    std::size_t lo = 0, hi = 1;
    while (family.tail_sum_after(hi) > eps) {
      if (hi >= kMaxTerms)
        throw NoTailInfo("tail does not certify below eps within 5e7 terms");
      lo = hi;
      hi *= 2;
    }
    while (lo + 1 < hi) {
      std::size_t mid = lo + (hi - lo) / 2;
      (family.tail_sum_after(mid) > eps ? lo : hi) = mid;
    }
    cut = hi;
  }

  double miss = 1.0;
  bool saw_one = false;
  for (std::size_t n = 1; n <= cut; ++n) {
    double xn = family.term(n);
    if (xn == 1.0) saw_one = true;
    miss *= 1.0 - xn;
  }
  return {1.0 - miss,
          saw_one ? LimitStatus::equals_one : LimitStatus::converged_below_one};
}

}  // namespace indep
