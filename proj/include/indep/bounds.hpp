#pragma once

#include <cstdint>

namespace indep {

/// Sharp lower bound on P(union of N independent events) given the sum s of
/// their probabilities: 1 - (1 - s/N)^N, attained by the equal-probability
/// configuration. Domain: N >= 1, 0 <= s <= N.
[[nodiscard]] double lower_union_given_sum(std::uint64_t n_events, double s);

/// Sharp upper bound on the sum of N independent events' probabilities given
/// their union probability u: N * (1 - (1-u)^(1/N)). Inverse of
/// lower_union_given_sum in the (s, u) plane. Domain: N >= 1, 0 <= u <= 1.
[[nodiscard]] double upper_sum_given_union(std::uint64_t n_events, double u);

/// N -> infinity limit of lower_union_given_sum: 1 - e^-s, for s >= 0.
[[nodiscard]] double lower_union_given_sum_infinite(double s);

/// N -> infinity limit of upper_sum_given_union: ln(1/(1-u)).
/// Throws Diverges at u = 1.
[[nodiscard]] double upper_sum_given_union_infinite(double u);

struct Envelope {
  double value;
  std::uint64_t witness_n;  // number of events attaining the envelope
};

/// Best lower union bound over all admissible N (those with N >= s):
/// the N-indexed bounds decrease in N, so N = ceil(s) wins.
[[nodiscard]] Envelope best_lower_union(double s);

/// Infimum of sum x_n over independent events with union probability u.
/// Equals u for every N (one event carrying all the mass).
[[nodiscard]] double min_sum_given_union(std::uint64_t n_events, double u);
[[nodiscard]] double min_sum_given_union(double u);

/// Supremum of sum t_n (equivalently, of the union) given sum x_n = s:
/// min(s, 1).
[[nodiscard]] double max_union_given_sum(std::uint64_t n_events, double s);
[[nodiscard]] double max_union_given_sum(double s);

struct CounterexampleReport {
  double union_prob;  // P(union) for N identical copies of one event
  double bound_rhs;   // what the independent-events bound would assert
  bool violated;      // union_prob < bound_rhs
};

/// Fully dependent family (A_1 = ... = A_N, each of probability x): its union
/// probability x undercuts the independent-events lower bound 1 - (1-x)^N,
/// showing the bound needs independence. Domain: 0 < x < 1, N >= 1 (N >= 2
/// for a strict violation).
[[nodiscard]] CounterexampleReport dependent_counterexample(double x,
                                                            std::uint64_t n_events);

}  // namespace indep
