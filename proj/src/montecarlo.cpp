#include "indep/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <future>
#include <vector>

#include "indep/errors.hpp"

namespace indep {

namespace {

void require_config(const SampleConfig& cfg) {
  if (cfg.n_samples < 1) throw DomainError("need at least one sample");
  if (cfg.n_streams < 1) throw DomainError("need at least one stream");
}

// Samples are dealt round-robin-free: stream s takes a contiguous count,
// indexed 0..count-1 within the stream, so counts depend only on the config.
std::uint64_t stream_count(const SampleConfig& cfg, std::uint32_t s) {
  std::uint64_t base = cfg.n_samples / cfg.n_streams;
  return base + (s < cfg.n_samples % cfg.n_streams ? 1 : 0);
}

template <class PerStream>
std::uint64_t run_streams(const SampleConfig& cfg, PerStream per_stream) {
  std::vector<std::future<std::uint64_t>> futures;
  futures.reserve(cfg.n_streams);
  for (std::uint32_t s = 0; s < cfg.n_streams; ++s)
    futures.push_back(std::async(std::launch::async, per_stream, s));
  std::uint64_t hits = 0;
  for (auto& f : futures) hits += f.get();  // merged in stream order
  return hits;
}

Estimate to_estimate(std::uint64_t hits, std::uint64_t n) {
  double p = static_cast<double>(hits) / static_cast<double>(n);
  double se = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  return {p, se, n};
}

}  // namespace

Estimate estimate_union_bernoulli(const ProbSeq<double>& x, const SampleConfig& cfg) {
  require_config(cfg);
  const std::vector<double>& probs = x.values();
  auto per_stream = [&](std::uint32_t s) {
    std::uint64_t hits = 0;
    std::uint64_t count = stream_count(cfg, s);
    for (std::uint64_t j = 0; j < count; ++j) {
      for (std::size_t k = 0; k < probs.size(); ++k) {
        if (rng::uniform01(cfg.seed, s, j, k) < probs[k]) {
          ++hits;
          break;
        }
      }
    }
    return hits;
  };
  return to_estimate(run_streams(cfg, per_stream), cfg.n_samples);
}

namespace {

// The carved atoms are full-height vertical strips tiling [0, 1), so
// membership is a binary search over the left edges.
struct StripIndex {
  std::vector<double> lo;
  std::vector<AtomMask> mask;
  bool usable = false;
};

StripIndex build_strip_index(const Construction& c) {
  StripIndex idx;
  std::vector<std::pair<Rational, AtomMask>> strips;
  for (const auto& [mask, rects] : c.atoms) {
    for (const Rect& r : rects) {
      if (r.y_lo != 0 || r.y_hi != 1) return idx;  // not strip-shaped
      strips.emplace_back(r.x_lo, mask);
    }
  }
  std::sort(strips.begin(), strips.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  idx.lo.reserve(strips.size());
  idx.mask.reserve(strips.size());
  for (const auto& [lo, mask] : strips) {
    idx.lo.push_back(to_double(lo));
    idx.mask.push_back(mask);
  }
  idx.usable = !idx.lo.empty();
  return idx;
}

bool point_in_rect(const Rect& r, double px, double py) {
  return to_double(r.x_lo) <= px && px < to_double(r.x_hi) &&
         to_double(r.y_lo) <= py && py < to_double(r.y_hi);
}

}  // namespace

Estimate estimate_union_geometric(const Construction& c, const SampleConfig& cfg) {
  require_config(cfg);
  StripIndex idx = build_strip_index(c);

  auto hit = [&](double px, double py) -> bool {
    if (idx.usable) {
      auto it = std::upper_bound(idx.lo.begin(), idx.lo.end(), px);
      std::size_t at = static_cast<std::size_t>(it - idx.lo.begin()) - 1;
      return idx.mask[at] != 0;
    }
    for (const auto& [mask, rects] : c.atoms) {
      if (mask == 0) continue;
      for (const Rect& r : rects)
        if (point_in_rect(r, px, py)) return true;
    }
    return false;
  };

  auto per_stream = [&](std::uint32_t s) {
    std::uint64_t hits = 0;
    std::uint64_t count = stream_count(cfg, s);
    for (std::uint64_t j = 0; j < count; ++j) {
      double px = rng::uniform01(cfg.seed, s, j, 0);
      double py = rng::uniform01(cfg.seed, s, j, 1);
      if (hit(px, py)) ++hits;
    }
    return hits;
  };
  return to_estimate(run_streams(cfg, per_stream), cfg.n_samples);
}

std::vector<ScanRow> borel_cantelli_scan(const SeriesFamily& family,
                                         std::size_t n_max, const SampleConfig& cfg) {
  require_config(cfg);
  if (n_max < 1) throw DomainError("need at least one truncation");

  std::vector<Rational> xr(n_max);
  std::vector<double> xd(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    xr[n - 1] = family.term_rational(n);
    if (xr[n - 1] >= 1)
      throw DomainError("scan requires every term < 1");
    xd[n - 1] = to_double(xr[n - 1]);
  }

  // One simulation serves every truncation: record each sample's first-hit
  // index, then P(union of first N) ~ #{first hit <= N} / samples.
  auto per_stream = [&](std::uint32_t s) {
    std::vector<std::uint64_t> hist(n_max + 1, 0);
    std::uint64_t count = stream_count(cfg, s);
    for (std::uint64_t j = 0; j < count; ++j) {
      for (std::size_t n = 1; n <= n_max; ++n) {
        if (rng::uniform01(cfg.seed, s, j, n - 1) < xd[n - 1]) {
          ++hist[n];
          break;
        }
      }
    }
    return hist;
  };

  std::vector<std::future<std::vector<std::uint64_t>>> futures;
  futures.reserve(cfg.n_streams);
  for (std::uint32_t s = 0; s < cfg.n_streams; ++s)
    futures.push_back(std::async(std::launch::async, per_stream, s));
  std::vector<std::uint64_t> hist(n_max + 1, 0);
  for (auto& f : futures) {
    std::vector<std::uint64_t> part = f.get();
    for (std::size_t n = 0; n <= n_max; ++n) hist[n] += part[n];
  }

  std::vector<ScanRow> rows;
  rows.reserve(n_max);
  Rational miss = 1;
  std::uint64_t cumulative = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    miss *= 1 - xr[n - 1];
    cumulative += hist[n];
    Estimate est = to_estimate(cumulative, cfg.n_samples);
    rows.push_back({n, 1 - miss, est.value, est.standard_error});
  }
  return rows;
}

}  // namespace indep
