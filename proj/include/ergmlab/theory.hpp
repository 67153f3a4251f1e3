#pragma once

#include "ergmlab/model.hpp"
#include "ergmlab/motif.hpp"

namespace ergm {

/// Closed-form conditional moments at a given conditioned edge density.
///
/// All fields are evaluated at edge_density = k/pair_count, the density of
/// the edge-count slice being conditioned on (distinct from the mean-field
/// fixed point, which governs the unconditional law).
struct ConditionalMoments {
  double edge_density = 0.0;  ///< the conditioned density this was built at
  /// Mean and variance of the two-star count given the edge count.
  double two_star_mean = 0.0;
  double two_star_variance = 0.0;
  /// Mean of the centered two-star count (the correction part of the mean).
  double two_star_centered_mean = 0.0;
  /// Mean and variance of the centered triangle count given the edge count.
  double triangle_centered_mean = 0.0;
  double triangle_centered_variance = 0.0;
  /// 1 - 2(1-d) * sum over non-edge terms of beta_l s_l d^{e_l - 1};
  /// must be positive for the expressions above to be meaningful.
  double correction_denominator = 1.0;
};

/// Evaluates every ConditionalMoments field at the given density.
/// Requires 0 < edge_density < 1 (std::invalid_argument) and a positive
/// correction denominator (DegenerateParametersError).
ConditionalMoments two_star_conditional_moments(const Model& model,
                                                double edge_density);

/// Centered triangle-count conditional moments alone (no denominator is
/// involved; the variance does not depend on the couplings).
struct TriangleMoments {
  double centered_mean = 0.0;
  double variance = 0.0;
};
TriangleMoments triangle_conditional_moments(const Model& model,
                                             double edge_density);

/// Conditional mean/variance of the number of copies of an arbitrary motif,
/// assembled from the two-star and triangle moments via the motif's own
/// two-star count s, triangle count t, and automorphism count. These
/// expressions are conjectural for motifs beyond the edge/two-star; results
/// carry the flag so reports can label them.
struct SubgraphMoments {
  double mean = 0.0;
  double variance = 0.0;
  bool conjectural = true;
};
/// For the single edge the correction term is taken as zero and the
/// variance is exactly zero (the conditioning fixes the edge count).
SubgraphMoments subgraph_count_moments(const Motif& motif, const Model& model,
                                       double edge_density);

/// Unconditional edge-count limit parameters: the mean-field fixed point p
/// and the variance N p(1-p) / (1 - sum_l beta_l e_l (e_l-1) 2 p^{e_l-1}(1-p)).
struct EdgeCountClt {
  double p = 0.0;
  double variance = 0.0;
};
/// Throws DegenerateParametersError when the model is not subcritical or the
/// variance denominator is not positive.
EdgeCountClt edge_count_clt(const Model& model);

/// First-order coefficient of the finite-size shift of the mean edge density
/// away from the fixed point: mean density ≈ p + coefficient / n. Motif
/// edge-deletion subcounts are recomputed per edge (vertices retained).
/// Zero for edge-only models.
double density_shift_coefficient(const Model& model, double p);

/// Centered counts on the fixed-edge-count slice. With d = k/N these are the
/// exact slice restrictions of the counts built from centered indicators
/// Y - d:
///   centered two-star  = V - N (n-2) d^2
///   centered triangle  = T - d V + (2/3) N (n-2) d^3
/// They are the quantities whose joint law the conditional limit describes;
/// correlations should be computed on these, not on raw (V, T).
double centered_two_star_count(int n, double edge_density, double two_stars);
double centered_triangle_count(int n, double edge_density, double two_stars,
                               double triangles);

/// Probability that a normal variable with the given mean/variance rounds to
/// the integer k: cdf(k + 1/2) - cdf(k - 1/2), evaluated via std::erf.
/// Requires sigma2 > 0.
double discretized_normal_pmf(double mu, double sigma2, long long k);

/// n(n-1)...(n-k+1); k = 0 gives 1.
double falling_factorial(double n, int k);

}  // namespace ergm
