#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "indep/errors.hpp"
#include "indep/incl_excl.hpp"
#include "indep/sequences.hpp"
#include "indep/series_family.hpp"
#include "indep/transform.hpp"
#include "support/oracles.hpp"

using indep::ProbSeq;
using indep::Rational;
using indep::SeriesFamily;

namespace {
Rational rat(long p, long q) { return indep::make_rational(p, q); }
}

TEST_CASE("symmetric sums on worked examples") {
  auto s = indep::elementary_sums(ProbSeq<Rational>({rat(1, 2), rat(1, 3)}));
  CHECK(s == std::vector<Rational>{rat(5, 6), rat(1, 6)});

  auto s3 = indep::elementary_sums(
      ProbSeq<Rational>({rat(1, 2), rat(1, 2), rat(1, 2)}));
  CHECK(s3 == std::vector<Rational>{rat(3, 2), rat(3, 4), rat(1, 8)});

  auto s1 = indep::elementary_sums(ProbSeq<Rational>({rat(2, 7)}));
  CHECK(s1 == std::vector<Rational>{rat(2, 7)});

  CHECK(indep::elementary_sums(ProbSeq<Rational>()).empty());
}

TEST_CASE("symmetric sums match subset enumeration") {
  oracle::TestRng rng(101);
  for (int rep = 0; rep < 60; ++rep) {
    std::size_t n = 1 + rng.below(10);
    std::vector<Rational> x = oracle::random_rational_seq(rng, n);
    auto got = indep::elementary_sums(ProbSeq<Rational>(x));
    REQUIRE(got.size() == n);
    for (std::size_t k = 1; k <= n; ++k)
      CHECK(got[k - 1] == oracle::symmetric_sum_subsets(x, k));
  }
}

TEST_CASE("symmetric sums are permutation invariant") {
  oracle::TestRng rng(103);
  for (int rep = 0; rep < 40; ++rep) {
    std::size_t n = 1 + rng.below(9);
    std::vector<Rational> x = oracle::random_rational_seq(rng, n);
    std::vector<Rational> shuffled = x;
    for (std::size_t i = n; i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    CHECK(indep::elementary_sums(ProbSeq<Rational>(x)) ==
          indep::elementary_sums(ProbSeq<Rational>(shuffled)));
  }
}

TEST_CASE("alternating partials walk through the sandwich") {
  ProbSeq<Rational> x({rat(1, 2), rat(1, 3), rat(1, 4)});
  auto partial = indep::alternating_partials(x);
  REQUIRE(partial.size() == 4);
  CHECK(partial[0] == 0);
  CHECK(partial[1] == rat(13, 12));
  CHECK(partial[2] == rat(17, 24));
  CHECK(partial[3] == rat(3, 4));
  CHECK(partial.back() == indep::union_prob(x));

  // Odd prefixes overshoot the union, even prefixes undershoot.
  Rational u = indep::union_prob(x);
  for (std::size_t m = 1; m < partial.size(); ++m) {
    if (m % 2 == 1)
      CHECK(partial[m] >= u);
    else
      CHECK(partial[m] <= u);
  }
}

TEST_CASE("inclusion-exclusion equals the union exactly in exact mode") {
  CHECK(indep::inclusion_exclusion(ProbSeq<Rational>({rat(1, 2), rat(1, 3)})) ==
        rat(2, 3));
  CHECK(indep::inclusion_exclusion(
            ProbSeq<Rational>({rat(1, 2), rat(1, 2), rat(1, 2)})) == rat(7, 8));
  CHECK(indep::inclusion_exclusion(ProbSeq<Rational>({rat(0, 1), rat(0, 1)})) == 0);

  oracle::TestRng rng(107);
  for (int rep = 0; rep < 80; ++rep) {
    std::size_t n = rng.below(13);
    ProbSeq<Rational> x(oracle::random_rational_seq(rng, n));
    CHECK(indep::inclusion_exclusion(x) == indep::union_prob(x));
  }
}

TEST_CASE("inclusion-exclusion stays near the union in float mode") {
  // The intermediate symmetric sums grow combinatorially, so the achievable
  // accuracy depends on how big the terms get. These envelopes hold with an
  // order of magnitude to spare; larger N * x blows past 1e-12 no matter how
  // the alternating sum is accumulated.
  struct Range {
    std::size_t n_max;
    double x_max;
  };
  const Range ranges[] = {{50, 0.2}, {20, 0.5}, {12, 0.9}};
  oracle::TestRng rng(109);
  for (const auto& range : ranges) {
    for (int rep = 0; rep < 120; ++rep) {
      std::size_t n = 1 + rng.below(range.n_max);
      std::vector<double> x;
      x.reserve(n);
      for (std::size_t i = 0; i < n; ++i) x.push_back(rng.uniform() * range.x_max);
      double truth = static_cast<double>(oracle::union_direct(x));
      CHECK(std::abs(indep::inclusion_exclusion(ProbSeq<double>(x)) - truth) <= 1e-12);
    }
    std::vector<double> worst(range.n_max, range.x_max);
    double truth = static_cast<double>(oracle::union_direct(worst));
    CHECK(std::abs(indep::inclusion_exclusion(ProbSeq<double>(worst)) - truth) <= 1e-12);
  }
}

TEST_CASE("truncation bounds on worked examples") {
  auto b = indep::bonferroni(ProbSeq<Rational>({rat(1, 2), rat(1, 2), rat(1, 2)}), 1);
  CHECK(b.lower_raw == rat(3, 4));
  CHECK(b.upper_raw == rat(3, 2));
  CHECK(b.lower == rat(3, 4));
  CHECK(b.upper == rat(1, 1));  // clamped

  auto b2 = indep::bonferroni(ProbSeq<Rational>({rat(1, 2), rat(1, 3)}), 1);
  CHECK(b2.lower == rat(2, 3));  // here the truncation is already exact
  CHECK(b2.upper == rat(5, 6));

  // Single event: both cut points land on S_1.
  auto b1 = indep::bonferroni(ProbSeq<Rational>({rat(3, 7)}), 1);
  CHECK(b1.lower == rat(3, 7));
  CHECK(b1.upper == rat(3, 7));

  // Ten events of 9/10 at r = 1: the raw lower bound goes negative.
  ProbSeq<Rational> ten(std::vector<Rational>(10, rat(9, 10)));
  auto braw = indep::bonferroni(ten, 1);
  CHECK(braw.lower_raw == rat(-549, 20));  // 9 - 45*(81/100)
  CHECK(braw.upper_raw == rat(9, 1));
  CHECK(braw.lower == 0);
  CHECK(braw.upper == 1);
}

TEST_CASE("truncation bounds sandwich the union at every order") {
  oracle::TestRng rng(113);
  for (int rep = 0; rep < 60; ++rep) {
    std::size_t n = 1 + rng.below(11);
    ProbSeq<Rational> x(oracle::random_rational_seq(rng, n));
    Rational u = indep::union_prob(x);
    for (std::size_t r = 1; 2 * r - 1 <= n; ++r) {
      auto b = indep::bonferroni(x, r);
      CHECK(b.lower_raw <= u);
      CHECK(u <= b.upper_raw);
      CHECK(b.lower <= u);
      CHECK(u <= b.upper);
      CHECK(b.lower >= 0);
      CHECK(b.upper <= 1);
    }
  }
}

TEST_CASE("truncation order is validated") {
  ProbSeq<Rational> x({rat(1, 2), rat(1, 3)});
  CHECK_THROWS_AS((void)indep::bonferroni(x, 0), indep::DomainError);
  CHECK_THROWS_AS((void)indep::bonferroni(x, 2), indep::DomainError);  // 2r-1 = 3 > N
  CHECK_NOTHROW((void)indep::bonferroni(ProbSeq<Rational>({rat(1, 2), rat(1, 3), rat(1, 5)}), 2));
}

TEST_CASE("quotient criterion: each symmetric sum is tail-dominated") {
  // S_k <= S_{k-1} * sum_{n >= k} x_n, with S_0 = 1.
  oracle::TestRng rng(127);
  for (int rep = 0; rep < 40; ++rep) {
    std::size_t n = 1 + rng.below(10);
    std::vector<Rational> x = oracle::random_rational_seq(rng, n);
    auto s = indep::elementary_sums(ProbSeq<Rational>(x));
    Rational tail = 0;
    for (const Rational& v : x) tail += v;
    for (std::size_t k = 1; k <= n; ++k) {
      // tail now holds sum_{n >= k} x_n
      Rational prev = (k == 1) ? Rational(1) : s[k - 2];
      CHECK(s[k - 1] <= prev * tail);
      tail -= x[k - 1];
    }
  }
}

TEST_CASE("top symmetric sum of a geometric family decays super-geometrically") {
  for (long num : {1L, 9L}) {
    long den = (num == 1) ? 2 : 10;  // q = 1/2 and q = 9/10
    Rational q = rat(num, den);
    for (std::size_t n = 15; n <= 30; ++n) {
      std::vector<Rational> x;
      for (std::size_t i = 1; i <= n; ++i) x.push_back(indep::rational_pow(q, i));
      auto s = indep::elementary_sums(ProbSeq<Rational>(x));
      CHECK(s.back() == indep::rational_pow(q, n * (n + 1) / 2));
    }
    // S_N / (q/2)^N shrinks with N: the decay beats every fixed geometric rate.
    Rational prev_scaled = -1;
    for (std::size_t n = 15; n <= 30; ++n) {
      Rational top = indep::rational_pow(q, n * (n + 1) / 2);
      Rational scale = indep::rational_pow(q / 2, n);
      Rational scaled = top / scale;
      if (prev_scaled >= 0) CHECK(scaled < prev_scaled);
      prev_scaled = scaled;
    }
  }
}

TEST_CASE("tail certificate for a geometric family") {
  auto fam = SeriesFamily::geometric(rat(1, 2), rat(1, 2));

  SUBCASE("pinned K = 3 values") {
    auto cert = indep::tail_certificate(fam, 3);
    CHECK(cert.decay_ratio == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(cert.next_sum_upper == doctest::Approx(0.005952380952).epsilon(1e-9));
    CHECK(cert.remainder_bound == doctest::Approx(0.006802721088).epsilon(1e-9));
    CHECK(cert.remainder_bound ==
          doctest::Approx(cert.next_sum_upper / (1.0 - 0.125)).epsilon(1e-13));
  }

  SUBCASE("certificate dominates the true tail sums") {
    // True symmetric sums from a long truncation; terms beyond 300 contribute
    // less than 2^-300.
    std::vector<long double> terms;
    for (int n = 1; n <= 300; ++n) terms.push_back(std::pow(0.5L, n));
    for (std::size_t k = 5; k <= 20; ++k) {
      auto e = oracle::esf_table(terms, k + 40);
      auto cert = indep::tail_certificate(fam, k);
      double true_next = static_cast<double>(e[k + 1]);
      long double true_rest = 0.0L;
      for (std::size_t j = k + 1; j <= k + 40; ++j) true_rest += e[j];

      CHECK(true_next <= cert.next_sum_upper);
      CHECK(static_cast<double>(true_rest) <= cert.remainder_bound);

      // ... without being loose: the upper bound hugs S_K * rho.
      double ideal = static_cast<double>(e[k]) * cert.decay_ratio;
      CHECK(cert.next_sum_upper <= ideal * (1.0 + 1e-5));
    }
  }
}

TEST_CASE("tail certificate edge cases") {
  // Finite explicit family: past its end every symmetric sum vanishes.
  auto fin = SeriesFamily::explicit_list(ProbSeq<Rational>({rat(1, 2), rat(1, 4)}));
  auto cert = indep::tail_certificate(fin, 2);
  CHECK(cert.next_sum_upper == 0.0);
  CHECK(cert.remainder_bound == 0.0);
  CHECK(cert.decay_ratio == 0.0);

  CHECK_THROWS_AS((void)indep::tail_certificate(fin, 0), indep::DomainError);
  CHECK_THROWS_AS(
      (void)indep::tail_certificate(SeriesFamily::shifted_harmonic(), 3),
      indep::NotConvergent);
  // Convergent, but the tail after K still sums past 1: no certificate.
  CHECK_THROWS_AS(
      (void)indep::tail_certificate(SeriesFamily::geometric(rat(1, 1), rat(99, 100)), 1),
      indep::RatioTooLarge);
}
