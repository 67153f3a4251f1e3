#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ergm {

/// Probability mass function on a contiguous integer window.
/// probabilities[i] is the mass at support_offset + i; mass outside the
/// window is zero. validate() checks the total is 1 within 1e-9.
struct Pmf {
  long long support_offset = 0;
  std::vector<double> probabilities;

  long long min_k() const { return support_offset; }
  long long max_k() const {
    return support_offset + static_cast<long long>(probabilities.size()) - 1;
  }
  double at(long long k) const;
  double total() const;
  /// Throws std::invalid_argument when empty, negative, or off by more
  /// than 1e-9 from total mass 1.
  void validate() const;

  /// Exact integer binning of samples (relative frequencies).
  static Pmf from_samples(const std::vector<long long>& samples);
  /// Binomial(trials, p) computed stably through log factorials.
  static Pmf binomial(long long trials, double p);
  /// Integer-rounded normal law, windowed to mu ± 12 sigma (mass outside is
  /// far below double precision).
  static Pmf discretized_normal(double mu, double sigma2);
  static Pmf point_mass(long long k);
};

/// sup_k |cdf_a(k) - cdf_b(k)| over the union of supports.
double kolmogorov_distance(const Pmf& a, const Pmf& b);
/// Convenience overload binning integer samples first.
double kolmogorov_distance(const std::vector<long long>& samples, const Pmf& b);

/// sup_k |pmf_a(k) - pmf_b(k)| over the union of supports.
double pointwise_distance(const Pmf& a, const Pmf& b);

/// Total variation of second differences: sum_i |p(i+2) - 2 p(i+1) + p(i)|,
/// the pmf-smoothness functional (4 for a point mass; small for laws close
/// to a discretized normal).
double second_difference_norm(const Pmf& pmf);

/// Both sides of the smoothing inequality
///   pointwise_distance <= c * sqrt(kolmogorov * (D(U) + D(V)))
/// so experiments can fit/check the universal constant c.
struct SmoothingSides {
  double pointwise = 0.0;     ///< left-hand side
  double bound_factor = 0.0;  ///< sqrt(d_K * (D(U) + D(V))), no constant
};
SmoothingSides smoothing_inequality_sides(const Pmf& u, const Pmf& v);

/// Normality diagnostics of samples standardized by (mu, sigma).
struct NormalityDiagnostics {
  double ks_stat = 0.0;      ///< one-sample KS against the standard normal
  double wasserstein = 0.0;  ///< quantile-coupling Wasserstein-1 estimate
  double mean = 0.0;         ///< of the standardized samples
  double variance = 0.0;
  double skewness = 0.0;
  double mean_se = 0.0;      ///< i.i.d. standard errors; correlated-sample
  double variance_se = 0.0;  ///< callers should budget via batch means
  long long count = 0;
};
/// Requires sigma > 0 and at least 2 samples.
NormalityDiagnostics normality_diagnostics(const std::vector<double>& samples,
                                           double mu, double sigma);

/// Half-width of the Dvoretzky–Kiefer–Wolfowitz band:
/// sqrt(log(2/alpha)/(2 sample_count)). The empirical cdf of sample_count
/// i.i.d. draws stays within this of the true cdf with probability 1-alpha.
double dkw_band(long long sample_count, double alpha);

/// Least-squares fit of log err against log n.
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;  ///< in log space
  double r_squared = 0.0;
};
/// Requires at least 3 pairs with positive coordinates.
RateFit fit_power_law(const std::vector<std::pair<double, double>>& n_err);

/// Sample Pearson correlation; inputs of equal length >= 2.
double pearson_correlation(const std::vector<double>& x,
                           const std::vector<double>& y);

/// Batch-means mean/standard-error estimate for (possibly autocorrelated)
/// chain output: batch size floor(sqrt(count)), error from the spread of
/// batch means.
struct BatchMeans {
  double mean = 0.0;
  double standard_error = 0.0;
  long long batch_count = 0;
  long long batch_size = 0;
};
BatchMeans batch_means(const std::vector<double>& samples);

/// Standard normal cdf via std::erfc (double accuracy).
double standard_normal_cdf(double x);
/// Inverse standard normal cdf (rational initial guess + one Halley
/// refinement; ~1e-14 over (0,1)).
double standard_normal_quantile(double u);

}  // namespace ergm
