#include "ergmlab/theory.hpp"

#include <cmath>
#include <stdexcept>

#include "ergmlab/errors.hpp"

namespace ergm {
namespace {

void require_open_unit(double density) {
  if (!(density > 0.0 && density < 1.0)) {
    throw std::invalid_argument("edge density must be strictly inside (0,1)");
  }
}

}  // namespace

ConditionalMoments two_star_conditional_moments(const Model& model,
                                                double edge_density) {
  require_open_unit(edge_density);
  const double d = edge_density;
  const double q = 1.0 - d;
  const double n = static_cast<double>(model.n());
  const double pairs = static_cast<double>(model.pair_count());

  // Interaction sums over non-edge terms, weighted by each motif's two-star
  // count.
  double s_pow_em1 = 0.0;  // sum beta_l s_l d^{e_l - 1}
  double s_pow_e = 0.0;    // sum beta_l s_l d^{e_l}
  const auto& terms = model.terms();
  for (std::size_t l = 1; l < terms.size(); ++l) {
    const double s = static_cast<double>(terms[l].motif.two_star_count());
    const int e = terms[l].motif.edge_count();
    s_pow_em1 += terms[l].beta * s * std::pow(d, e - 1);
    s_pow_e += terms[l].beta * s * std::pow(d, e);
  }

  ConditionalMoments moments;
  moments.edge_density = d;
  moments.correction_denominator = 1.0 - 2.0 * q * s_pow_em1;
  if (!(moments.correction_denominator > 0.0)) {
    throw DegenerateParametersError(
        "two-star correction denominator is not positive; the closed forms "
        "do not apply at these parameters");
  }
  moments.two_star_centered_mean =
      2.0 * pairs * q * q * s_pow_e / moments.correction_denominator;
  moments.two_star_mean =
      pairs * (n - 2.0) * d * d + moments.two_star_centered_mean;
  moments.two_star_variance = pairs * n * d * d * q * q /
                              (moments.correction_denominator *
                               moments.correction_denominator);

  const TriangleMoments triangle = triangle_conditional_moments(model, d);
  moments.triangle_centered_mean = triangle.centered_mean;
  moments.triangle_centered_variance = triangle.variance;
  return moments;
}

TriangleMoments triangle_conditional_moments(const Model& model,
                                             double edge_density) {
  require_open_unit(edge_density);
  const double d = edge_density;
  const double q = 1.0 - d;
  const double n = static_cast<double>(model.n());
  const double pairs = static_cast<double>(model.pair_count());

  double t_pow_e = 0.0;  // sum beta_l t_l d^{e_l}
  const auto& terms = model.terms();
  for (std::size_t l = 1; l < terms.size(); ++l) {
    const double t = static_cast<double>(terms[l].motif.triangle_count());
    const int e = terms[l].motif.edge_count();
    t_pow_e += terms[l].beta * t * std::pow(d, e);
  }

  TriangleMoments moments;
  moments.centered_mean = 2.0 * pairs * q * q * q * t_pow_e;
  moments.variance = pairs * n * d * d * d * q * q * q / 3.0;
  return moments;
}

SubgraphMoments subgraph_count_moments(const Motif& motif, const Model& model,
                                       double edge_density) {
  require_open_unit(edge_density);
  const double d = edge_density;
  const double n = static_cast<double>(model.n());
  const double s = static_cast<double>(motif.two_star_count());
  const double t = static_cast<double>(motif.triangle_count());
  const double aut = static_cast<double>(motif.automorphism_count());
  const int e = motif.edge_count();
  const int v = motif.vertex_count();

  SubgraphMoments result;
  result.conjectural = true;
  result.mean = falling_factorial(n, v) / aut * std::pow(d, e);
  if (s == 0.0 && t == 0.0) {
    // No two-stars or triangles in the motif (e.g. the single edge): the
    // correction vanishes and the conditional count has no fluctuation
    // sourced from them.
    result.variance = 0.0;
    return result;
  }

  const ConditionalMoments cm = two_star_conditional_moments(model, d);
  const double prefactor = falling_factorial(n - 3.0, v - 3) / aut;
  result.mean += prefactor * (2.0 * s * std::pow(d, e - 2) *
                                  cm.two_star_centered_mean +
                              6.0 * t * std::pow(d, e - 3) *
                                  cm.triangle_centered_mean);
  result.variance =
      prefactor * prefactor *
      (4.0 * s * s * std::pow(d, 2 * e - 4) * cm.two_star_variance +
       36.0 * t * t * std::pow(d, 2 * e - 6) *
           cm.triangle_centered_variance);
  return result;
}

EdgeCountClt edge_count_clt(const Model& model) {
  const FixedPointReport report = solve_fixed_point(model);
  if (!report.p.has_value()) {
    throw DegenerateParametersError(
        "edge-count limit needs a subcritical model (phase: " +
        to_string(report.phase) + ")");
  }
  const double p = *report.p;
  const double q = 1.0 - p;

  double denominator = 1.0;
  for (const Term& term : model.terms()) {
    const int e = term.motif.edge_count();
    if (e >= 2) {
      denominator -=
          term.beta * e * (e - 1) * 2.0 * std::pow(p, e - 1) * q;
    }
  }
  if (!(denominator > 0.0)) {
    throw DegenerateParametersError(
        "edge-count variance denominator is not positive");
  }
  EdgeCountClt clt;
  clt.p = p;
  clt.variance = static_cast<double>(model.pair_count()) * p * q / denominator;
  return clt;
}

double density_shift_coefficient(const Model& model, double p) {
  require_open_unit(p);
  const double q = 1.0 - p;
  const auto& terms = model.terms();

  // Interaction sums over the non-edge terms.
  double s_pow_e = 0.0;    // sum beta_r s_r p^{e_r}
  double s_pow_em1 = 0.0;  // sum beta_r s_r p^{e_r - 1}
  double t_pow_e = 0.0;    // sum beta_r t_r p^{e_r}
  double s_pow_em2 = 0.0;  // sum beta_r s_r p^{e_r - 2}
  double t_pow_em2 = 0.0;  // sum beta_r t_r p^{e_r - 2}
  for (std::size_t l = 1; l < terms.size(); ++l) {
    const double beta = terms[l].beta;
    const double s = static_cast<double>(terms[l].motif.two_star_count());
    const double t = static_cast<double>(terms[l].motif.triangle_count());
    const int e = terms[l].motif.edge_count();
    s_pow_e += beta * s * std::pow(p, e);
    s_pow_em1 += beta * s * std::pow(p, e - 1);
    t_pow_e += beta * t * std::pow(p, e);
    s_pow_em2 += beta * s * std::pow(p, e - 2);
    t_pow_em2 += beta * t * std::pow(p, e - 2);
  }
  const double denom = 1.0 - 2.0 * q * s_pow_em1;

  // Group 1: per-term, per-deleted-edge recounts. Deleting an edge keeps the
  // vertex set, so the reduced counts come from the motif itself.
  double group_deleted = 0.0;
  for (const Term& term : terms) {
    const int e = term.motif.edge_count();
    double inner = 0.0;
    for (int edge_index = 0; edge_index < e; ++edge_index) {
      const Motif::ReducedCounts reduced =
          term.motif.counts_without_edge(edge_index);
      if (reduced.two_stars != 0) {
        inner += 4.0 * static_cast<double>(reduced.two_stars) *
                 std::pow(p, e - 3) * q * q * s_pow_e / denom;
      }
      if (reduced.triangles != 0) {
        inner += 12.0 * static_cast<double>(reduced.triangles) *
                 std::pow(p, e - 4) * q * q * q * t_pow_e;
      }
    }
    group_deleted += term.beta * inner;
  }

  // Group 2: fluctuation contribution of the conditional log-odds, carrying
  // the second-order response curvature (1-2p)/2.
  const double group_fluctuation =
      (1.0 - 2.0 * p) / 2.0 *
      (8.0 * s_pow_em2 * s_pow_em2 * p * q / denom +
       36.0 * t_pow_em2 * t_pow_em2 * q * q);

  // Group 3: depletion from counting injective placements of the v-2 free
  // vertices of each motif around a pinned pair.  The count is
  // (n-2)(n-3)...(n-v+1) / n^{v-2} = 1 - (v-2)(v+1)/(2n) + O(n^-2),
  // since the free vertices must avoid both pinned endpoints as well as
  // each other; each motif edge contributes one pinned-pair term.
  double group_depletion = 0.0;
  for (std::size_t l = 1; l < terms.size(); ++l) {
    const int e = terms[l].motif.edge_count();
    const int v = terms[l].motif.vertex_count();
    group_depletion -= terms[l].beta * e * std::pow(p, e - 1) *
                       static_cast<double>((v - 2) * (v + 1));
  }

  const double response_slope =
      2.0 * p * q * mean_field_exponent_derivative(model, p);
  return p * q / (1.0 - response_slope) *
         (group_deleted + group_fluctuation + group_depletion);
}

double centered_two_star_count(int n, double edge_density, double two_stars) {
  const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
  return two_stars - pairs * (n - 2.0) * edge_density * edge_density;
}

double centered_triangle_count(int n, double edge_density, double two_stars,
                               double triangles) {
  const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
  const double d = edge_density;
  return triangles - d * two_stars +
         2.0 / 3.0 * pairs * (n - 2.0) * d * d * d;
}

double discretized_normal_pmf(double mu, double sigma2, long long k) {
  if (!(sigma2 > 0.0)) {
    throw std::invalid_argument("discretized normal needs sigma2 > 0");
  }
  const double sigma = std::sqrt(sigma2);
  // Evaluate on the side of the mean where erfc is small, so the difference
  // of tails keeps full relative precision.
  double lo = (static_cast<double>(k) - 0.5 - mu) / sigma;
  double hi = (static_cast<double>(k) + 0.5 - mu) / sigma;
  if (lo + hi < 0.0) {
    const double new_lo = -hi;
    hi = -lo;
    lo = new_lo;
  }
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  return 0.5 * (std::erfc(lo * inv_sqrt2) - std::erfc(hi * inv_sqrt2));
}

double falling_factorial(double n, int k) {
  if (k < 0) throw std::invalid_argument("falling factorial needs k >= 0");
  double product = 1.0;
  for (int i = 0; i < k; ++i) product *= n - i;
  return product;
}

}  // namespace ergm
