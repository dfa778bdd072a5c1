#include "indep/bounds.hpp"

#include <cmath>
#include <string>

#include "indep/errors.hpp"

namespace indep {

namespace {

void require_n(std::uint64_t n_events) {
  if (n_events < 1) throw DomainError("need at least one event");
}

void require_unit(double u, const char* what) {
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError(std::string(what) + " outside [0, 1]");
}

}  // namespace

double lower_union_given_sum(std::uint64_t n_events, double s) {
  require_n(n_events);
  double n = static_cast<double>(n_events);
  if (!(s >= 0.0 && s <= n)) throw DomainError("sum outside [0, N]");
  if (n_events == 1) return s;
  if (s == n) return 1.0;
  // 1 - (1 - s/n)^n, evaluated as -expm1(n log1p(-s/n)) to keep small s exact.
  return -std::expm1(n * std::log1p(-s / n));
}

double upper_sum_given_union(std::uint64_t n_events, double u) {
  require_n(n_events);
  require_unit(u, "union probability");
  if (n_events == 1) return u;
  if (u == 1.0) return static_cast<double>(n_events);
  double n = static_cast<double>(n_events);
  // n (1 - (1-u)^(1/n))
  return n * -std::expm1(std::log1p(-u) / n);
}

double lower_union_given_sum_infinite(double s) {
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("sum must be finite and >= 0");
  return -std::expm1(-s);
}

double upper_sum_given_union_infinite(double u) {
  require_unit(u, "union probability");
  if (u == 1.0) throw Diverges("sum bound is infinite at union probability 1");
  return -std::log1p(-u);
}

Envelope best_lower_union(double s) {
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("sum must be finite and >= 0");
  if (s == 0.0) return {0.0, 1};
  double c = std::ceil(s);
  if (c > 9e18) throw DomainError("sum too large");
  auto n = static_cast<std::uint64_t>(c);
  return {lower_union_given_sum(n, s), n};
}

double min_sum_given_union(std::uint64_t n_events, double u) {
  require_n(n_events);
  require_unit(u, "union probability");
  return u;
}

double min_sum_given_union(double u) {
  require_unit(u, "union probability");
  return u;
}

double max_union_given_sum(std::uint64_t n_events, double s) {
  require_n(n_events);
  double n = static_cast<double>(n_events);
  if (!(s >= 0.0 && s <= n)) throw DomainError("sum outside [0, N]");
  return s < 1.0 ? s : 1.0;
}

double max_union_given_sum(double s) {
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("sum must be finite and >= 0");
  return s < 1.0 ? s : 1.0;
}

CounterexampleReport dependent_counterexample(double x, std::uint64_t n_events) {
  require_n(n_events);
  if (!(x > 0.0 && x < 1.0)) throw DomainError("event probability outside (0, 1)");
  double n = static_cast<double>(n_events);
  double bound = -std::expm1(n * std::log1p(-x));  // 1 - (1-x)^n
  return {x, bound, x < bound};
}

}  // namespace indep
