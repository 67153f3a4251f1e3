#include "ergmlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ergm {

double Pmf::at(long long k) const {
  if (k < min_k() || k > max_k()) return 0.0;
  return probabilities[static_cast<std::size_t>(k - support_offset)];
}

double Pmf::total() const {
  double sum = 0.0;
  for (double p : probabilities) sum += p;
  return sum;
}

void Pmf::validate() const {
  if (probabilities.empty()) {
    throw std::invalid_argument("pmf has empty support");
  }
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw std::invalid_argument("pmf has negative mass");
  }
  if (std::abs(total() - 1.0) > 1e-9) {
    throw std::invalid_argument("pmf mass is not 1 within 1e-9");
  }
}

Pmf Pmf::from_samples(const std::vector<long long>& samples) {
  if (samples.empty()) {
    throw std::invalid_argument("cannot bin an empty sample set");
  }
  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  const long long lo = *lo_it;
  const long long hi = *hi_it;
  Pmf pmf;
  pmf.support_offset = lo;
  pmf.probabilities.assign(static_cast<std::size_t>(hi - lo + 1), 0.0);
  const double weight = 1.0 / static_cast<double>(samples.size());
  for (long long x : samples) {
    pmf.probabilities[static_cast<std::size_t>(x - lo)] += weight;
  }
  return pmf;
}

Pmf Pmf::binomial(long long trials, double p) {
  if (trials < 0 || !(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("bad binomial parameters");
  }
  Pmf pmf;
  pmf.support_offset = 0;
  pmf.probabilities.resize(static_cast<std::size_t>(trials + 1));
  if (p == 0.0 || p == 1.0) {
    std::fill(pmf.probabilities.begin(), pmf.probabilities.end(), 0.0);
    pmf.probabilities[p == 0.0 ? 0 : static_cast<std::size_t>(trials)] = 1.0;
    return pmf;
  }
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double log_fact_n = std::lgamma(static_cast<double>(trials) + 1.0);
  for (long long k = 0; k <= trials; ++k) {
    const double log_choose = log_fact_n -
                              std::lgamma(static_cast<double>(k) + 1.0) -
                              std::lgamma(static_cast<double>(trials - k) + 1.0);
    pmf.probabilities[static_cast<std::size_t>(k)] =
        std::exp(log_choose + k * log_p + (trials - k) * log_q);
  }
  return pmf;
}

Pmf Pmf::discretized_normal(double mu, double sigma2) {
  if (!(sigma2 > 0.0)) {
    throw std::invalid_argument("discretized normal needs sigma2 > 0");
  }
  const double sigma = std::sqrt(sigma2);
  const long long lo = static_cast<long long>(std::floor(mu - 12.0 * sigma));
  const long long hi = static_cast<long long>(std::ceil(mu + 12.0 * sigma));
  Pmf pmf;
  pmf.support_offset = lo;
  pmf.probabilities.resize(static_cast<std::size_t>(hi - lo + 1));
  for (long long k = lo; k <= hi; ++k) {
    const double hi_z = (static_cast<double>(k) + 0.5 - mu) / sigma;
    const double lo_z = (static_cast<double>(k) - 0.5 - mu) / sigma;
    pmf.probabilities[static_cast<std::size_t>(k - lo)] =
        standard_normal_cdf(hi_z) - standard_normal_cdf(lo_z);
  }
  return pmf;
}

Pmf Pmf::point_mass(long long k) {
  Pmf pmf;
  pmf.support_offset = k;
  pmf.probabilities = {1.0};
  return pmf;
}

double kolmogorov_distance(const Pmf& a, const Pmf& b) {
  const long long lo = std::min(a.min_k(), b.min_k());
  const long long hi = std::max(a.max_k(), b.max_k());
  double cdf_a = 0.0;
  double cdf_b = 0.0;
  double sup = 0.0;
  for (long long k = lo; k <= hi; ++k) {
    cdf_a += a.at(k);
    cdf_b += b.at(k);
    sup = std::max(sup, std::abs(cdf_a - cdf_b));
  }
  return sup;
}

double kolmogorov_distance(const std::vector<long long>& samples,
                           const Pmf& b) {
  return kolmogorov_distance(Pmf::from_samples(samples), b);
}

double pointwise_distance(const Pmf& a, const Pmf& b) {
  const long long lo = std::min(a.min_k(), b.min_k());
  const long long hi = std::max(a.max_k(), b.max_k());
  double sup = 0.0;
  for (long long k = lo; k <= hi; ++k) {
    sup = std::max(sup, std::abs(a.at(k) - b.at(k)));
  }
  return sup;
}

double second_difference_norm(const Pmf& pmf) {
  // Second differences are nonzero only within two positions of the support
  // window; scanning [min-2, max] covers every term.
  double total = 0.0;
  for (long long i = pmf.min_k() - 2; i <= pmf.max_k(); ++i) {
    total += std::abs(pmf.at(i + 2) - 2.0 * pmf.at(i + 1) + pmf.at(i));
  }
  return total;
}

SmoothingSides smoothing_inequality_sides(const Pmf& u, const Pmf& v) {
  SmoothingSides sides;
  sides.pointwise = pointwise_distance(u, v);
  const double dk = kolmogorov_distance(u, v);
  sides.bound_factor =
      std::sqrt(dk * (second_difference_norm(u) + second_difference_norm(v)));
  return sides;
}

NormalityDiagnostics normality_diagnostics(const std::vector<double>& samples,
                                           double mu, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  if (samples.size() < 2) {
    throw std::invalid_argument("need at least 2 samples");
  }
  const std::size_t count = samples.size();
  std::vector<double> z(count);
  for (std::size_t i = 0; i < count; ++i) {
    z[i] = (samples[i] - mu) / sigma;
  }
  std::sort(z.begin(), z.end());

  NormalityDiagnostics diag;
  diag.count = static_cast<long long>(count);

  const double inv = 1.0 / static_cast<double>(count);
  double ks = 0.0;
  double wasserstein = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double cdf = standard_normal_cdf(z[i]);
    ks = std::max(ks, std::max(cdf - i * inv, (i + 1) * inv - cdf));
    wasserstein +=
        std::abs(z[i] - standard_normal_quantile((i + 0.5) * inv));
  }
  diag.ks_stat = ks;
  diag.wasserstein = wasserstein * inv;

  double mean = 0.0;
  for (double x : z) mean += x;
  mean *= inv;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double x : z) {
    const double d = x - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 *= inv;
  m3 *= inv;
  m4 *= inv;
  diag.mean = mean;
  diag.variance = m2 * static_cast<double>(count) /
                  static_cast<double>(count - 1);
  diag.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
  diag.mean_se = std::sqrt(diag.variance * inv);
  // Standard error of the sample variance from the fourth central moment.
  diag.variance_se = std::sqrt(std::max(0.0, m4 - m2 * m2) * inv);
  return diag;
}

double dkw_band(long long sample_count, double alpha) {
  if (sample_count < 1 || !(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("bad DKW band parameters");
  }
  return std::sqrt(std::log(2.0 / alpha) /
                   (2.0 * static_cast<double>(sample_count)));
}

RateFit fit_power_law(const std::vector<std::pair<double, double>>& n_err) {
  if (n_err.size() < 3) {
    throw std::invalid_argument("need at least 3 points for a rate fit");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [n, err] : n_err) {
    if (!(n > 0.0) || !(err > 0.0)) {
      throw std::invalid_argument("rate-fit points must be positive");
    }
    const double x = std::log(n);
    const double y = std::log(err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double m = static_cast<double>(n_err.size());
  const double var_x = sxx - sx * sx / m;
  const double var_y = syy - sy * sy / m;
  const double cov = sxy - sx * sy / m;
  if (!(var_x > 0.0)) {
    throw std::invalid_argument("rate-fit points need distinct n");
  }
  RateFit fit;
  fit.slope = cov / var_x;
  fit.intercept = (sy - fit.slope * sx) / m;
  fit.r_squared = var_y > 0.0 ? (cov * cov) / (var_x * var_y) : 1.0;
  return fit;
}

double pearson_correlation(const std::vector<double>& x,
                           const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("correlation needs equal lengths >= 2");
  }
  const double m = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

BatchMeans batch_means(const std::vector<double>& samples) {
  if (samples.size() < 4) {
    throw std::invalid_argument("batch means needs at least 4 samples");
  }
  const long long count = static_cast<long long>(samples.size());
  const long long batch_size =
      std::max<long long>(1, static_cast<long long>(std::sqrt(
                                 static_cast<double>(count))));
  const long long batch_count = count / batch_size;

  BatchMeans result;
  result.batch_size = batch_size;
  result.batch_count = batch_count;

  // Grand mean over the used prefix (whole batches only).
  const long long used = batch_count * batch_size;
  double grand = 0.0;
  for (long long i = 0; i < used; ++i) grand += samples[static_cast<std::size_t>(i)];
  grand /= static_cast<double>(used);
  result.mean = grand;

  double var = 0.0;
  for (long long b = 0; b < batch_count; ++b) {
    double bm = 0.0;
    for (long long i = b * batch_size; i < (b + 1) * batch_size; ++i) {
      bm += samples[static_cast<std::size_t>(i)];
    }
    bm /= static_cast<double>(batch_size);
    var += (bm - grand) * (bm - grand);
  }
  var /= static_cast<double>(batch_count - 1);
  result.standard_error = std::sqrt(var / static_cast<double>(batch_count));
  return result;
}

double standard_normal_cdf(double x) {
  return 0.5 * std::erfc(-x * (1.0 / std::numbers::sqrt2_v<double>));
}

double standard_normal_quantile(double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::invalid_argument("quantile argument must be in (0,1)");
  }
  // Rational approximation (central + tail branches), then one Halley step
  // against the erfc-based cdf brings the result to full double accuracy.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double low = 0.02425;
  double x;
  if (u < low) {
    const double q = std::sqrt(-2.0 * std::log(u));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (u <= 1.0 - low) {
    const double q = u - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-u));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // Halley refinement: e = cdf(x) - u, with pdf derivative structure.
  const double e = standard_normal_cdf(x) - u;
  const double pdf =
      std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi_v<double>);
  const double w = e / pdf;
  return x - w / (1.0 + 0.5 * x * w);
}

}  // namespace ergm
