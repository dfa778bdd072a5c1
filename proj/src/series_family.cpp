#include "indep/series_family.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "indep/errors.hpp"

namespace indep {

namespace {

void require_unit(const Rational& v, const char* what) {
  if (v < 0 || v > 1) throw DomainError(std::string(what) + " outside [0, 1]");
}

bool is_nonneg_integer(double p) {
  return p >= 0.0 && p == std::floor(p) && p <= 1e9;
}

}  // namespace

SeriesFamily::SeriesFamily(FamilyKind kind, Rational a, Rational b, double p,
                           ProbSeq<Rational> terms)
    : kind_(kind), a_(std::move(a)), b_(std::move(b)), p_(p),
      terms_(std::move(terms)) {
  if (kind_ == FamilyKind::explicit_list) {
    suffix_.assign(terms_.size() + 1, 0.0);
    long double acc = 0.0L;
    for (std::size_t i = terms_.size(); i-- > 0;) {
      acc += static_cast<long double>(to_double(terms_[i]));
      suffix_[i] = static_cast<double>(acc);
    }
  }
}

SeriesFamily SeriesFamily::constant(Rational c) {
  require_unit(c, "constant term");
  return {FamilyKind::constant, std::move(c), 0, 0.0, ProbSeq<Rational>{}};
}

SeriesFamily SeriesFamily::geometric(Rational a, Rational ratio) {
  require_unit(a, "first term");
  require_unit(ratio, "ratio");
  return {FamilyKind::geometric, std::move(a), std::move(ratio), 0.0,
          ProbSeq<Rational>{}};
}

SeriesFamily SeriesFamily::shifted_harmonic() {
  return {FamilyKind::shifted_harmonic, 0, 0, 0.0, ProbSeq<Rational>{}};
}

SeriesFamily SeriesFamily::power(Rational c, double p) {
  require_unit(c, "coefficient");
  if (!(p >= 0.0) || !std::isfinite(p))
    throw DomainError("power exponent must be finite and >= 0");
  return {FamilyKind::power, std::move(c), 0, p, ProbSeq<Rational>{}};
}

SeriesFamily SeriesFamily::explicit_list(ProbSeq<Rational> terms) {
  return {FamilyKind::explicit_list, 0, 0, 0.0, std::move(terms)};
}

double SeriesFamily::term(std::size_t n) const {
  if (n == 0) throw DomainError("series indices start at 1");
  switch (kind_) {
    case FamilyKind::constant:
      return to_double(a_);
    case FamilyKind::geometric:
      return to_double(a_) * std::pow(to_double(b_), static_cast<double>(n - 1));
    case FamilyKind::shifted_harmonic:
      return 1.0 / static_cast<double>(n + 1);
    case FamilyKind::power:
      return to_double(a_) / std::pow(static_cast<double>(n), p_);
    case FamilyKind::explicit_list:
      return n <= terms_.size() ? to_double(terms_[n - 1]) : 0.0;
  }
  throw Error("unreachable");
}

Rational SeriesFamily::term_rational(std::size_t n) const {
  if (n == 0) throw DomainError("series indices start at 1");
  switch (kind_) {
    case FamilyKind::constant:
      return a_;
    case FamilyKind::geometric:
      return a_ * rational_pow(b_, static_cast<unsigned long>(n - 1));
    case FamilyKind::shifted_harmonic:
      return make_rational(1, static_cast<long>(n + 1));
    case FamilyKind::power: {
      if (!is_nonneg_integer(p_))
        throw ModeError("power kind with non-integer exponent has no exact terms");
      mpz_class den;
      mpz_class base(static_cast<unsigned long>(n));
      mpz_pow_ui(den.get_mpz_t(), base.get_mpz_t(),
                 static_cast<unsigned long>(p_));
      Rational r = a_ / Rational(den);
      r.canonicalize();
      return r;
    }
    case FamilyKind::explicit_list:
      return n <= terms_.size() ? terms_[n - 1] : Rational(0);
  }
  throw Error("unreachable");
}

bool SeriesFamily::has_exact_terms() const {
  return kind_ != FamilyKind::power || is_nonneg_integer(p_);
}

bool SeriesFamily::divergent_sum() const {
  switch (kind_) {
    case FamilyKind::constant:
      return a_ > 0;
    case FamilyKind::geometric:
      return a_ > 0 && b_ >= 1;
    case FamilyKind::shifted_harmonic:
      return true;
    case FamilyKind::power:
      return a_ > 0 && p_ <= 1.0;
    case FamilyKind::explicit_list:
      return false;
  }
  throw Error("unreachable");
}

double SeriesFamily::tail_sum_after(std::size_t n) const {
  if (divergent_sum()) throw NoTailInfo("series sum diverges");
  if (n == 0) return term(1) + tail_sum_after(1);
  switch (kind_) {
    case FamilyKind::constant:
      return 0.0;  // only c = 0 is convergent
    case FamilyKind::geometric: {
      double a = to_double(a_);
      double r = to_double(b_);
      if (a == 0.0 || r == 0.0) return 0.0;
      // sum_{k > n} a r^(k-1) = a r^n / (1 - r)
      return a * std::pow(r, static_cast<double>(n)) / (1.0 - r);
    }
    case FamilyKind::shifted_harmonic:
      throw NoTailInfo("series sum diverges");
    case FamilyKind::power: {
      double c = to_double(a_);
      if (c == 0.0) return 0.0;
      // sum_{k > n} c k^-p <= c * integral_n^inf t^-p dt
      return c * std::pow(static_cast<double>(n), 1.0 - p_) / (p_ - 1.0);
    }
    case FamilyKind::explicit_list:
      return n >= terms_.size() ? 0.0 : suffix_[n];
  }
  throw Error("unreachable");
}

}  // namespace indep
