#include "indep/realizer.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "indep/errors.hpp"

namespace indep {

Rational EventSet::measure() const {
  Rational total = 0;
  for (const Rect& r : rects) total += r.area();
  return total;
}

Construction realize(const ProbSeq<Rational>& x, std::size_t max_events) {
  if (max_events > kHardMaxEvents)
    throw CapExceeded("max_events above hard ceiling " + std::to_string(kHardMaxEvents));
  if (x.size() > max_events)
    throw CapExceeded("sequence longer than max_events = " + std::to_string(max_events));

  Construction c;
  c.probs = x.values();
  c.atoms[0] = {Rect{0, 1, 0, 1}};

  for (std::size_t i = 0; i < x.size(); ++i) {
    const Rational& p = x[i];
    if (p == 0) continue;
    const AtomMask bit = AtomMask{1} << i;
    std::map<AtomMask, std::vector<Rect>> next;
    for (const auto& [mask, rects] : c.atoms) {
      for (const Rect& r : rects) {
        Rational cut = r.x_lo + p * r.width();
        Rect taken{r.x_lo, cut, r.y_lo, r.y_hi};
        Rect rest{cut, r.x_hi, r.y_lo, r.y_hi};
        if (taken.width() > 0) next[mask | bit].push_back(taken);
        if (rest.width() > 0) next[mask].push_back(rest);
      }
    }
    c.atoms = std::move(next);
  }

  // Each event is exactly the union of the final atoms containing it, so the
  // exported decomposition matches the atom map rect for rect.
  c.events.resize(x.size());
  for (const auto& [mask, rects] : c.atoms) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (mask & (AtomMask{1} << i))
        c.events[i].rects.insert(c.events[i].rects.end(), rects.begin(), rects.end());
  }
  return c;
}

namespace {

void require_mask(const Construction& c, AtomMask subset_mask) {
  if (c.size() >= 32) throw CapExceeded("too many events for 32-bit masks");
  if (subset_mask >> c.size())
    throw IndexError("subset refers to events beyond the construction");
}

}  // namespace

Rational intersection_measure(const Construction& c, AtomMask subset_mask) {
  require_mask(c, subset_mask);
  Rational total = 0;
  for (const auto& [mask, rects] : c.atoms) {
    if ((mask & subset_mask) != subset_mask) continue;
    for (const Rect& r : rects) total += r.area();
  }
  return total;
}

Rational intersection_measure(const Construction& c,
                              const std::vector<std::size_t>& subset) {
  AtomMask mask = 0;
  for (std::size_t i : subset) {
    if (i >= c.size()) throw IndexError("event index out of range");
    mask |= AtomMask{1} << i;
  }
  return intersection_measure(c, mask);
}

IndependenceReport verify_independence(const Construction& c) {
  std::size_t n = c.size();
  if (n > kHardMaxEvents)
    throw CapExceeded("refusing to enumerate more than 2^20 subsets");

  // Superset-sum (zeta) transform: start from atom measures, then fold each
  // bit upward so meas[s] becomes the measure of the intersection over s.
  std::vector<Rational> meas(std::size_t{1} << n, Rational(0));
  for (const auto& [mask, rects] : c.atoms)
    for (const Rect& r : rects) meas[mask] += r.area();
  for (std::size_t b = 0; b < n; ++b) {
    std::size_t bit = std::size_t{1} << b;
    for (std::size_t s = 0; s < meas.size(); ++s)
      if (!(s & bit)) meas[s] += meas[s | bit];
  }

  std::vector<Rational> expected(meas.size());
  expected[0] = 1;
  for (std::size_t s = 1; s < meas.size(); ++s) {
    std::size_t low = s & (~s + 1);
    std::size_t low_index = 0;
    while ((std::size_t{1} << low_index) != low) ++low_index;
    expected[s] = expected[s ^ low] * c.probs[low_index];
  }

  IndependenceReport report{true, {}};
  for (std::size_t s = 1; s < meas.size(); ++s) {
    if (meas[s] != expected[s]) {
      report.ok = false;
      report.failures.push_back(static_cast<AtomMask>(s));
    }
  }
  return report;
}

Rational union_measure(const Construction& c) {
  auto it = c.atoms.find(0);
  if (it == c.atoms.end()) return 1;
  Rational none = 0;
  for (const Rect& r : it->second) none += r.area();
  return 1 - none;
}

Rational first_occurrence_measure(const Construction& c, std::size_t i) {
  if (i >= c.size()) throw IndexError("event index out of range");
  const AtomMask bit = AtomMask{1} << i;
  const AtomMask earlier = bit - 1;
  Rational total = 0;
  for (const auto& [mask, rects] : c.atoms) {
    if (!(mask & bit) || (mask & earlier)) continue;
    for (const Rect& r : rects) total += r.area();
  }
  return total;
}

}  // namespace indep
