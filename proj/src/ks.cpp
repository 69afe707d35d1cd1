#include "bnc/ks.hpp"

#include <algorithm>
#include <cmath>

namespace bnc {

const char* alternative_symbol(Alternative alt) {
  switch (alt) {
    case Alternative::kNotEqual: return "!=";
    case Alternative::kGreater: return ">";
    case Alternative::kLess: return "<";
  }
  return "?";
}

Ecdf::Ecdf(std::vector<double> sample) : sorted_(std::move(sample)) {
  if (sorted_.empty()) throw StatsError("empty sample");
  std::sort(sorted_.begin(), sorted_.end());
}

double Ecdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(std::distance(sorted_.begin(), it)) /
         static_cast<double>(sorted_.size());
}

KsDistances ks_distances(std::span<const double> s1,
                         std::span<const double> s2) {
  if (s1.empty() || s2.empty()) throw StatsError("empty sample");

  std::vector<double> a(s1.begin(), s1.end());
  std::vector<double> b(s2.begin(), s2.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());

  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());

  KsDistances dist;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    // Next merged support point; consume every tied value from both sides
    // so the CDFs are compared right-continuously.
    const double x = (j >= b.size() || (i < a.size() && a[i] <= b[j])) ? a[i]
                                                                       : b[j];
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    const double f1 = static_cast<double>(i) / n1;
    const double f2 = static_cast<double>(j) / n2;
    dist.d_plus = std::max(dist.d_plus, f1 - f2);
    dist.d_minus = std::max(dist.d_minus, f2 - f1);
  }
  return dist;
}

double ks_statistic(std::span<const double> s1, std::span<const double> s2,
                    Alternative alt) {
  const KsDistances dist = ks_distances(s1, s2);
  switch (alt) {
    case Alternative::kNotEqual: return std::max(dist.d_plus, dist.d_minus);
    case Alternative::kGreater: return dist.d_minus;
    case Alternative::kLess: return dist.d_plus;
  }
  return 0;
}

double ks_pvalue(double d, std::size_t n1, std::size_t n2, Alternative alt) {
  if (!(d >= 0.0 && d <= 1.0))
    throw StatsError("statistic outside [0, 1]");
  if (n1 == 0 || n2 == 0) throw StatsError("sample sizes must be positive");
  if (d == 0.0) return 1.0;

  const double n_eff = static_cast<double>(n1) * static_cast<double>(n2) /
                       static_cast<double>(n1 + n2);

  if (alt != Alternative::kNotEqual)
    return std::exp(-2.0 * n_eff * d * d);

  const double lambda = std::sqrt(n_eff) * d;
  // Below 0.05 the survival function is 1 to far beyond double precision.
  if (lambda < 0.05) return 1.0;

  if (lambda < 1.0) {
    // Theta-transformed form of the same series; near p = 1 it is accurate
    // and monotone where the direct alternating sum oscillates at the
    // truncation scale.
    constexpr double kPiSquared = 9.869604401089358;
    constexpr double kSqrtTwoPi = 2.5066282746310002;
    const double z = -kPiSquared / (8.0 * lambda * lambda);
    double sum = 0.0;
    for (int k = 1;; k += 2) {
      const double term =
          std::exp(z * static_cast<double>(k) * static_cast<double>(k));
      sum += term;
      if (term < 1e-10 * sum || term <= 0.0) break;
    }
    return std::clamp(1.0 - kSqrtTwoPi / lambda * sum, 0.0, 1.0);
  }

  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1;; ++k) {
    const double term =
        std::exp(-2.0 * static_cast<double>(k) * static_cast<double>(k) *
                 lambda * lambda);
    if (term < 1e-10) break;
    sum += sign * term;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsOutcome ks_test(std::span<const double> s1, std::span<const double> s2,
                  Alternative alt) {
  KsOutcome outcome;
  outcome.n1 = s1.size();
  outcome.n2 = s2.size();
  outcome.alternative = alt;
  outcome.statistic = ks_statistic(s1, s2, alt);
  outcome.p_value = ks_pvalue(outcome.statistic, outcome.n1, outcome.n2, alt);
  return outcome;
}

double ks_permutation_pvalue(std::span<const double> s1,
                             std::span<const double> s2, Alternative alt,
                             std::size_t max_pool) {
  if (s1.empty() || s2.empty()) throw StatsError("empty sample");
  const std::size_t n1 = s1.size();
  const std::size_t n2 = s2.size();
  if (n1 + n2 > max_pool)
    throw StatsError("pooled sample too large for exact permutation test");

  const double observed = ks_statistic(s1, s2, alt);

  std::vector<double> pooled(s1.begin(), s1.end());
  pooled.insert(pooled.end(), s2.begin(), s2.end());
  std::sort(pooled.begin(), pooled.end());

  // Walk the sorted pool once per labeling; the selector marks which
  // positions belong to sample 1. prev_permutation enumerates every
  // distinct selector exactly once.
  std::vector<char> selector(n1 + n2, 0);
  std::fill(selector.begin(), selector.begin() + static_cast<long>(n1), 1);

  const double dn1 = static_cast<double>(n1);
  const double dn2 = static_cast<double>(n2);
  std::uint64_t at_least = 0;
  std::uint64_t labelings = 0;
  do {
    ++labelings;
    std::size_t c1 = 0, c2 = 0;
    double d_plus = 0, d_minus = 0;
    std::size_t i = 0;
    while (i < pooled.size()) {
      const double x = pooled[i];
      while (i < pooled.size() && pooled[i] == x) {
        if (selector[i]) ++c1; else ++c2;
        ++i;
      }
      const double diff = static_cast<double>(c1) / dn1 -
                          static_cast<double>(c2) / dn2;
      d_plus = std::max(d_plus, diff);
      d_minus = std::max(d_minus, -diff);
    }
    double stat = 0;
    switch (alt) {
      case Alternative::kNotEqual: stat = std::max(d_plus, d_minus); break;
      case Alternative::kGreater: stat = d_minus; break;
      case Alternative::kLess: stat = d_plus; break;
    }
    if (stat >= observed - 1e-12) ++at_least;
  } while (std::prev_permutation(selector.begin(), selector.end()));

  return static_cast<double>(at_least) / static_cast<double>(labelings);
}

}  // namespace bnc
