#include "indep/incl_excl.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

#include "indep/errors.hpp"
#include "indep/series_family.hpp"

namespace indep {

// Bounds S_K of the *infinite* family by splitting terms at an index M >= K:
// with e_j the symmetric sums of terms 1..M and tau = tail sum after M,
//   S_K <= sum_{j=0..K} e_{K-j} * tau^j
// because the j-th symmetric sum of the tail terms is at most tau^j / j!
// <= tau^j. M is pushed out until tau is negligible next to rho.
TailCertificate tail_certificate(const SeriesFamily& family, std::size_t k) {
  if (k < 1) throw DomainError("truncation index must be >= 1");
  if (family.divergent_sum()) throw NotConvergent("series sum diverges");

  double rho = family.tail_sum_after(k);
  if (!(rho < 1.0)) throw RatioTooLarge("tail sum after K is >= 1");
  if (rho == 0.0) return {0.0, 0.0, 0.0};

  constexpr std::size_t kMaxExtra = 2'000'000;
  std::size_t m = k;
  double tau = rho;
  while (tau > rho * 1e-6 && m < k + kMaxExtra) {
    ++m;
    tau = family.tail_sum_after(m);
  }

  std::vector<double> e(k + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 1; i <= m; ++i) {
    double xi = family.term(i);
    if (xi == 0.0) continue;
    for (std::size_t j = std::min(i, k); j >= 1; --j) e[j] += xi * e[j - 1];
  }

  double s_k_upper = 0.0;
  for (std::size_t i = 0; i <= k; ++i) s_k_upper = s_k_upper * tau + e[i];

  double next = s_k_upper * rho;
  double remainder = next / (1.0 - rho);
  return {next, remainder, rho};
}

}  // namespace indep
