#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "indep/rational.hpp"
#include "indep/sequences.hpp"

namespace indep {

/// Axis-parallel rectangle [x_lo, x_hi) x [y_lo, y_hi) in the unit square,
/// with exact rational corners. Half-open on both axes, so translates of a
/// tiling stay disjoint and areas add exactly.
struct Rect {
  Rational x_lo, x_hi, y_lo, y_hi;

  [[nodiscard]] Rational width() const { return x_hi - x_lo; }
  [[nodiscard]] Rational height() const { return y_hi - y_lo; }
  [[nodiscard]] Rational area() const { return width() * height(); }

  bool operator==(const Rect&) const = default;
};

/// An event: a finite union of pairwise disjoint rectangles.
struct EventSet {
  std::vector<Rect> rects;

  [[nodiscard]] Rational measure() const;

  bool operator==(const EventSet&) const = default;
};

/// Bit i set = the atom lies inside event i (0-based).
using AtomMask = std::uint32_t;

/// Independent events realized inside the unit square under Lebesgue measure.
/// atoms maps each occurrence pattern to the rectangles carrying it; taken
/// together the atom rectangles partition the square. Zero-measure atoms are
/// omitted.
struct Construction {
  std::vector<Rational> probs;
  std::vector<EventSet> events;
  std::map<AtomMask, std::vector<Rect>> atoms;

  [[nodiscard]] std::size_t size() const { return probs.size(); }

  bool operator==(const Construction&) const = default;
};

inline constexpr std::size_t kDefaultMaxEvents = 16;
/// Atom masks are 32-bit and verification enumerates all 2^n subsets, so
/// constructions are refused beyond this many events regardless of overrides.
inline constexpr std::size_t kHardMaxEvents = 20;

/// Builds events with the given probabilities, mutually independent under
/// area. Event n+1 is carved as the leftmost vertical slice, of fractional
/// width x_{n+1}, of every atom rectangle of the first n events; every atom
/// therefore stays a single full-height vertical strip. Throws CapExceeded
/// past max_events (default 16, hard ceiling 20).
[[nodiscard]] Construction realize(const ProbSeq<Rational>& x,
                                   std::size_t max_events = kDefaultMaxEvents);

/// Exact measure of the intersection of the events in subset_mask
/// (empty mask = whole square, measure 1).
[[nodiscard]] Rational intersection_measure(const Construction& c, AtomMask subset_mask);
[[nodiscard]] Rational intersection_measure(const Construction& c,
                                            const std::vector<std::size_t>& subset);

struct IndependenceReport {
  bool ok;
  std::vector<AtomMask> failures;  // subsets where measure != product
};

/// Checks measure(intersection) == product of probabilities for every
/// nonempty subset of events, exactly.
[[nodiscard]] IndependenceReport verify_independence(const Construction& c);

[[nodiscard]] Rational union_measure(const Construction& c);

/// Measure of "event i occurs, none of events 0..i-1 do".
[[nodiscard]] Rational first_occurrence_measure(const Construction& c, std::size_t i);

}  // namespace indep
