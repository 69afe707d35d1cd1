#ifndef BNC_KS_HPP_
#define BNC_KS_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bnc {

/// Alternate hypothesis of the two-sample test. Greater means the first
/// sample's values are stochastically larger (its CDF lies below).
enum class Alternative : std::uint8_t { kNotEqual, kGreater, kLess };

const char* alternative_symbol(Alternative alt);  // "!=", ">", "<"

struct KsOutcome {
  double statistic = 0;
  double p_value = 1;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  Alternative alternative = Alternative::kNotEqual;
};

struct StatsError : std::runtime_error {
  explicit StatsError(const std::string& what) : std::runtime_error(what) {}
};

/// Empirical CDF: F(x) = (number of sample values <= x) / n.
/// Right-continuous step function.
class Ecdf {
 public:
  explicit Ecdf(std::vector<double> sample);

  double operator()(double x) const;
  std::size_t size() const { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
};

/// One-sided suprema of the ECDF difference, evaluated over the merged
/// sample support: d_plus = sup(F1 - F2), d_minus = sup(F2 - F1).
struct KsDistances {
  double d_plus = 0;
  double d_minus = 0;
};

KsDistances ks_distances(std::span<const double> s1, std::span<const double> s2);

/// The K-S statistic under the chosen alternative: max(d+, d-) for the
/// two-sided test, d- when testing sample 1 greater, d+ when testing it
/// less.
double ks_statistic(std::span<const double> s1, std::span<const double> s2,
                    Alternative alt);

/// Asymptotic p-value. Two-sided: Q(sqrt(n_eff) * d) with the alternating
/// exponential series; one-sided: exp(-2 * n_eff * d^2). n_eff is
/// n1*n2/(n1+n2). d = 0 yields 1 under every alternative.
double ks_pvalue(double d, std::size_t n1, std::size_t n2, Alternative alt);

KsOutcome ks_test(std::span<const double> s1, std::span<const double> s2,
                  Alternative alt);

/// Exact permutation p-value: the fraction of all C(n1+n2, n1) labelings of
/// the pooled sample whose statistic is >= the observed one. Only feasible
/// for small pools; throws when n1+n2 exceeds max_pool.
double ks_permutation_pvalue(std::span<const double> s1,
                             std::span<const double> s2, Alternative alt,
                             std::size_t max_pool = 24);

}  // namespace bnc

#endif  // BNC_KS_HPP_
