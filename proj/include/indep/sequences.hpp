#pragma once

#include <cfloat>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "indep/errors.hpp"
#include "indep/rational.hpp"

namespace indep {

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

namespace detail {

// Slack for floating prefix-sum checks: a sum of n doubles that is
// mathematically <= 1 can exceed 1 by at most ~n ulps of roundoff.
inline double prefix_slack(std::size_t n) {
  return 64.0 * DBL_EPSILON * static_cast<double>(n + 1);
}

template <class T>
void require_unit_interval(const T& v) {
  // Written as a negated conjunction so NaN fails too.
  if (!(v >= T(0) && v <= T(1))) throw DomainError("value outside [0, 1]");
}

}  // namespace detail

/// A finite sequence of probabilities, each in [0, 1].
/// T is Rational (exact mode) or double (floating mode).
template <class T>
class ProbSeq {
 public:
  ProbSeq() = default;

  explicit ProbSeq(std::vector<T> values) : values_(std::move(values)) {
    for (const T& v : values_) detail::require_unit_interval(v);
  }

  [[nodiscard]] const std::vector<T>& values() const { return values_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] bool empty() const { return values_.empty(); }
  [[nodiscard]] const T& operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] auto begin() const { return values_.begin(); }
  [[nodiscard]] auto end() const { return values_.end(); }

  bool operator==(const ProbSeq&) const = default;

 private:
  std::vector<T> values_;
};

/// Weights of pairwise disjoint events: each in [0, 1], every prefix sum <= 1.
/// In floating mode the prefix check allows roundoff-scale overshoot.
template <class T>
class DisjointWeights {
 public:
  DisjointWeights() = default;

  explicit DisjointWeights(std::vector<T> values) : values_(std::move(values)) {
    T prefix{0};
    std::size_t i = 0;
    for (const T& v : values_) {
      detail::require_unit_interval(v);
      prefix += v;
      ++i;
      if constexpr (is_exact_v<T>) {
        if (prefix > T(1))
          throw NegativeDenominator("weight prefix sum exceeds 1");
      } else {
        if (prefix > 1.0 + detail::prefix_slack(i))
          throw NegativeDenominator("weight prefix sum exceeds 1");
      }
    }
  }

  [[nodiscard]] const std::vector<T>& values() const { return values_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] bool empty() const { return values_.empty(); }
  [[nodiscard]] const T& operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] auto begin() const { return values_.begin(); }
  [[nodiscard]] auto end() const { return values_.end(); }

  bool operator==(const DisjointWeights&) const = default;

 private:
  std::vector<T> values_;
};

}  // namespace indep
