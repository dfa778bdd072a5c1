#pragma once

#include <cstddef>
#include <vector>

#include "indep/rational.hpp"
#include "indep/sequences.hpp"

namespace indep {

enum class FamilyKind { constant, geometric, shifted_harmonic, power, explicit_list };

/// A parametric infinite series of probabilities x_1, x_2, ... together with
/// enough structure to answer tail questions:
///
///   constant(c)          x_n = c
///   geometric(a, r)      x_n = a * r^(n-1),  0 <= r <= 1
///   shifted_harmonic()   x_n = 1 / (n + 1)
///   power(c, p)          x_n = c / n^p,      p >= 0
///   explicit_list(xs)    x_n = xs[n-1], zero beyond the list
///
/// Indices are 1-based throughout.
class SeriesFamily {
 public:
  static SeriesFamily constant(Rational c);
  static SeriesFamily geometric(Rational a, Rational ratio);
  static SeriesFamily shifted_harmonic();
  static SeriesFamily power(Rational c, double p);
  static SeriesFamily explicit_list(ProbSeq<Rational> terms);

  [[nodiscard]] FamilyKind kind() const { return kind_; }

  [[nodiscard]] double term(std::size_t n) const;

  /// Exact value of x_n. Throws ModeError for the power kind with a
  /// non-integer exponent.
  [[nodiscard]] Rational term_rational(std::size_t n) const;
  [[nodiscard]] bool has_exact_terms() const;

  [[nodiscard]] bool divergent_sum() const;

  /// Upper bound on sum_{k > n} x_k, exact for the constant, geometric,
  /// shifted-harmonic and explicit kinds and an integral bound for the power
  /// kind. Throws NoTailInfo when the sum diverges.
  [[nodiscard]] double tail_sum_after(std::size_t n) const;

 private:
  SeriesFamily(FamilyKind kind, Rational a, Rational b, double p,
               ProbSeq<Rational> terms);

  FamilyKind kind_;
  Rational a_;  // constant c / geometric a / power c
  Rational b_;  // geometric ratio
  double p_ = 0.0;
  ProbSeq<Rational> terms_;
  std::vector<double> suffix_;  // explicit kind: suffix_[i] = sum of terms i..end
};

}  // namespace indep
