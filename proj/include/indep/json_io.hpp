#pragma once

#include <json.hpp>

#include <vector>

#include "indep/rational.hpp"
#include "indep/realizer.hpp"

namespace indep {

enum class SeqMode { exact, floating };

/// A sequence document is a bare JSON array: rationals as "p/q" strings in
/// exact mode, plain numbers in floating mode. The two never mix.
struct ParsedSequence {
  SeqMode mode;
  std::vector<Rational> exact;   // filled in exact mode
  std::vector<double> floating;  // filled in floating mode
};

[[nodiscard]] nlohmann::json sequence_to_json(const std::vector<Rational>& values);
[[nodiscard]] nlohmann::json sequence_to_json(const std::vector<double>& values);
[[nodiscard]] ParsedSequence sequence_from_json(const nlohmann::json& doc);

/// Construction document:
/// {
///   "probs":  ["1/2", ...],
///   "events": [[rect, ...], ...],          one list per event
///   "atoms":  {"<mask>": [rect, ...], ...} mask as decimal string
/// }
/// with rect = {"x_lo": "p/q", "x_hi": ..., "y_lo": ..., "y_hi": ...}.
[[nodiscard]] nlohmann::json construction_to_json(const Construction& c);

/// Parses and fully validates a construction document: rationals well formed,
/// rectangles inside the unit square with positive extent, atom rectangles
/// pairwise disjoint with total area exactly 1, every event equal (as a rect
/// set) to the union of the atoms containing it. Independence itself is NOT
/// checked here; that is verify_independence's job.
[[nodiscard]] Construction construction_from_json(const nlohmann::json& doc);

}  // namespace indep
