#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "indep/rational.hpp"
#include "indep/realizer.hpp"
#include "indep/sequences.hpp"
#include "indep/series_family.hpp"

namespace indep {

namespace rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Counter-based generator: every draw is a pure function of
/// (seed, stream, sample, draw), so the partition of samples into streams
/// and their execution order cannot change any value.
[[nodiscard]] constexpr std::uint64_t draw_bits(std::uint64_t seed, std::uint64_t stream,
                                                std::uint64_t sample, std::uint64_t draw) {
  std::uint64_t key = mix64(seed + kGolden);
  key = mix64(key ^ (stream + kGolden));
  key = mix64(key ^ (sample + kGolden));
  return mix64(key + (draw + 1) * kGolden);
}

/// Uniform double in [0, 1) from the top 53 bits.
[[nodiscard]] constexpr double uniform01(std::uint64_t seed, std::uint64_t stream,
                                         std::uint64_t sample, std::uint64_t draw) {
  return static_cast<double>(draw_bits(seed, stream, sample, draw) >> 11) * 0x1.0p-53;
}

}  // namespace rng

struct SampleConfig {
  std::uint64_t seed = 0;
  std::uint64_t n_samples = 10'000;
  std::uint32_t n_streams = 1;  // worked in parallel, merged in stream order
};

struct Estimate {
  double value;
  double standard_error;  // sqrt(p(1-p)/n) at the estimated p
  std::uint64_t n_samples;
};

/// P(union) for independent events with probabilities x, by simulating the
/// events coordinate-wise (one uniform per event, early exit on first hit).
[[nodiscard]] Estimate estimate_union_bernoulli(const ProbSeq<double>& x,
                                                const SampleConfig& cfg);

/// P(union) for a realized construction, by uniform points in the unit
/// square. Counts a hit when the point's atom has nonzero mask.
[[nodiscard]] Estimate estimate_union_geometric(const Construction& c,
                                                const SampleConfig& cfg);

struct ScanRow {
  std::size_t n_events;
  Rational exact_union;  // 1 - prod_{n <= N} (1 - x_n)
  double empirical;
  double standard_error;
};

/// Finite-truncation scan of P(union of first N) for N = 1..n_max: exact
/// values against one shared simulation (each sample's first-hit index serves
/// every N at once). Family terms must be exact rationals and < 1.
[[nodiscard]] std::vector<ScanRow> borel_cantelli_scan(const SeriesFamily& family,
                                                       std::size_t n_max,
                                                       const SampleConfig& cfg);

}  // namespace indep
