#include "indep/json_io.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "indep/errors.hpp"

namespace indep {

using nlohmann::json;

nlohmann::json sequence_to_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const Rational& v : values) arr.push_back(to_fraction_string(v));
  return arr;
}

nlohmann::json sequence_to_json(const std::vector<double>& values) {
  json arr = json::array();
  for (double v : values) arr.push_back(v);
  return arr;
}

ParsedSequence sequence_from_json(const json& doc) {
  if (!doc.is_array()) throw ParseError("sequence document must be a JSON array");
  ParsedSequence out{SeqMode::exact, {}, {}};
  bool saw_string = false;
  bool saw_number = false;
  for (const json& item : doc) {
    if (item.is_string()) {
      saw_string = true;
      out.exact.push_back(parse_rational(item.get<std::string>()));
    } else if (item.is_number()) {
      saw_number = true;
      out.floating.push_back(item.get<double>());
    } else {
      throw ParseError("sequence entries must be strings or numbers");
    }
  }
  if (saw_string && saw_number)
    throw ModeError("sequence mixes exact and floating entries");
  out.mode = saw_number ? SeqMode::floating : SeqMode::exact;
  return out;
}

namespace {

json rect_to_json(const Rect& r) {
  return json{{"x_lo", to_fraction_string(r.x_lo)},
              {"x_hi", to_fraction_string(r.x_hi)},
              {"y_lo", to_fraction_string(r.y_lo)},
              {"y_hi", to_fraction_string(r.y_hi)}};
}

Rational rect_field(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_string())
    throw ParseError(std::string("rect field '") + key + "' missing or not a string");
  return parse_rational(obj[key].get<std::string>());
}

Rect rect_from_json(const json& obj) {
  if (!obj.is_object() || obj.size() != 4)
    throw ParseError("rect must be an object with exactly x_lo, x_hi, y_lo, y_hi");
  Rect r{rect_field(obj, "x_lo"), rect_field(obj, "x_hi"),
         rect_field(obj, "y_lo"), rect_field(obj, "y_hi")};
  if (r.x_lo < 0 || r.x_hi > 1 || r.y_lo < 0 || r.y_hi > 1)
    throw ParseError("rect outside the unit square");
  if (!(r.x_lo < r.x_hi) || !(r.y_lo < r.y_hi))
    throw ParseError("rect extents must be positive");
  return r;
}

std::vector<Rect> rect_list_from_json(const json& arr) {
  if (!arr.is_array()) throw ParseError("expected an array of rects");
  std::vector<Rect> out;
  out.reserve(arr.size());
  for (const json& item : arr) out.push_back(rect_from_json(item));
  return out;
}

bool rects_overlap(const Rect& a, const Rect& b) {
  return a.x_lo < b.x_hi && b.x_lo < a.x_hi && a.y_lo < b.y_hi && b.y_lo < a.y_hi;
}

// Disjoint rects inside the unit square with total area exactly 1 tile it:
// a finite union of half-open rects with a measure-zero complement has an
// empty complement.
void require_partition(const std::vector<Rect>& rects) {
  Rational total = 0;
  for (const Rect& r : rects) total += r.area();
  if (total != 1) throw ParseError("atom rectangles do not have total area 1");

  bool all_strips = std::all_of(rects.begin(), rects.end(), [](const Rect& r) {
    return r.y_lo == 0 && r.y_hi == 1;
  });
  if (all_strips) {
    std::vector<std::pair<Rational, Rational>> spans;
    spans.reserve(rects.size());
    for (const Rect& r : rects) spans.emplace_back(r.x_lo, r.x_hi);
    std::sort(spans.begin(), spans.end());
    for (std::size_t i = 1; i < spans.size(); ++i)
      if (spans[i].first < spans[i - 1].second)
        throw ParseError("atom rectangles overlap");
    return;
  }
  if (rects.size() > 4096)
    throw CapExceeded("too many free-form rectangles to cross-check");
  for (std::size_t i = 0; i < rects.size(); ++i)
    for (std::size_t j = i + 1; j < rects.size(); ++j)
      if (rects_overlap(rects[i], rects[j]))
        throw ParseError("atom rectangles overlap");
}

std::vector<Rect> sorted_rects(std::vector<Rect> rects) {
  auto key = [](const Rect& r) { return std::tie(r.x_lo, r.y_lo, r.x_hi, r.y_hi); };
  std::sort(rects.begin(), rects.end(),
            [&key](const Rect& a, const Rect& b) { return key(a) < key(b); });
  return rects;
}

}  // namespace

nlohmann::json construction_to_json(const Construction& c) {
  json events = json::array();
  for (const EventSet& ev : c.events) {
    json rects = json::array();
    for (const Rect& r : ev.rects) rects.push_back(rect_to_json(r));
    events.push_back(std::move(rects));
  }
  json atoms = json::object();
  for (const auto& [mask, rects] : c.atoms) {
    json arr = json::array();
    for (const Rect& r : rects) arr.push_back(rect_to_json(r));
    atoms[std::to_string(mask)] = std::move(arr);
  }
  std::vector<Rational> probs(c.probs.begin(), c.probs.end());
  return json{{"probs", sequence_to_json(probs)},
              {"events", std::move(events)},
              {"atoms", std::move(atoms)}};
}

Construction construction_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("construction document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "probs" && key != "events" && key != "atoms")
      throw ParseError("unknown construction key '" + key + "'");
  }
  if (!doc.contains("probs") || !doc.contains("events") || !doc.contains("atoms"))
    throw ParseError("construction needs probs, events and atoms");

  Construction c;
  ParsedSequence probs = sequence_from_json(doc["probs"]);
  if (probs.mode != SeqMode::exact)
    throw ModeError("construction probabilities must be exact rationals");
  c.probs = std::move(probs.exact);
  std::size_t n = c.probs.size();
  if (n > kHardMaxEvents)
    throw CapExceeded("construction larger than the supported event cap");
  for (const Rational& p : c.probs)
    if (p < 0 || p > 1) throw ParseError("probability outside [0, 1]");

  if (!doc["events"].is_array() || doc["events"].size() != n)
    throw ParseError("events must list exactly one rect set per probability");
  for (const json& ev : doc["events"]) c.events.push_back({rect_list_from_json(ev)});

  if (!doc["atoms"].is_object()) throw ParseError("atoms must be an object");
  std::vector<Rect> all_atom_rects;
  for (const auto& [key, value] : doc["atoms"].items()) {
    std::size_t pos = 0;
    unsigned long mask_value = 0;
    try {
      mask_value = std::stoul(key, &pos);
    } catch (const std::exception&) {
      throw ParseError("atom key '" + key + "' is not a mask");
    }
    if (pos != key.size()) throw ParseError("atom key '" + key + "' is not a mask");
    if (mask_value >> n) throw ParseError("atom mask '" + key + "' out of range");
    std::vector<Rect> rects = rect_list_from_json(value);
    if (rects.empty()) throw ParseError("atom '" + key + "' has no rectangles");
    all_atom_rects.insert(all_atom_rects.end(), rects.begin(), rects.end());
    c.atoms[static_cast<AtomMask>(mask_value)] = std::move(rects);
  }
  require_partition(all_atom_rects);

  // Each event must be exactly the union of the atoms that contain it.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rect> from_atoms;
    for (const auto& [mask, rects] : c.atoms)
      if (mask & (AtomMask{1} << i))
        from_atoms.insert(from_atoms.end(), rects.begin(), rects.end());
    if (sorted_rects(from_atoms) != sorted_rects(c.events[i].rects))
      throw ParseError("event " + std::to_string(i) +
                       " does not match the atoms containing it");
  }
  return c;
}

}  // namespace indep
