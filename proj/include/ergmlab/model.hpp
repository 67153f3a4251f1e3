#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ergmlab/motif.hpp"

namespace ergm {

/// One interaction term: a coupling strength and its motif.
struct Term {
  double beta = 0.0;
  Motif motif;
};

/// An exponential random graph model on n labeled vertices.
///
/// The measure weights a graph g by exp(n^2 * sum_l beta_l * density_l(g))
/// where density_l is the injective homomorphism count of motif l divided by
/// n^{v_l}. Conventions enforced at construction:
///   - the first term's motif is a single edge (its coupling is the
///     edge-propensity parameter and may have any sign),
///   - all later couplings are strictly positive,
///   - n is at least the largest motif vertex count.
class Model {
 public:
  Model(int n, std::vector<Term> terms);

  int n() const { return n_; }
  /// Number of vertex pairs, n(n-1)/2.
  long long pair_count() const {
    return static_cast<long long>(n_) * (n_ - 1) / 2;
  }
  const std::vector<Term>& terms() const { return terms_; }
  double edge_beta() const { return terms_.front().beta; }
  /// True when every non-edge coupling is zero (the model is a product
  /// Bernoulli law and the edge count is Binomial).
  bool is_edge_only() const;

  /// Same terms, different graph size (used by size sweeps).
  Model with_n(int n) const;
  /// Same model with the edge coupling replaced (used by sufficiency checks).
  Model with_edge_beta(double beta) const;

  /// Serialization: {"n": int, "terms": [{"beta": real,
  /// "edges": [[u,v], ...]}, ...]}. The string forms parse/emit JSON.
  static Model from_json_text(const std::string& text);
  std::string to_json_text(int indent = -1) const;

 private:
  int n_;
  std::vector<Term> terms_;
};

/// Mean-field exponent of the model at ambient edge density a:
///   sum_l beta_l * e_l * a^{e_l - 1}.
/// Twice this value is the limiting conditional log-odds of an edge.
double mean_field_exponent(const Model& model, double a);

/// Derivative of mean_field_exponent in a.
double mean_field_exponent_derivative(const Model& model, double a);

/// Mean-field response map: sigmoid(2 * mean_field_exponent(a)).
/// Its fixed point is the limiting edge density. Evaluated in a form that
/// does not overflow for large exponents.
double mean_field_response(const Model& model, double a);

/// Phase classification of the response map's fixed-point structure.
enum class Phase {
  kSubcritical,           ///< unique fixed point p with response slope < 1
  kDobrushinSubcritical,  ///< subcritical and exponent derivative at 1 is < 2
  kNotSubcritical,        ///< multiple fixed points, or slope >= 1
  kIndeterminate,         ///< slope within tol_margin of 1: not decided
};

std::string to_string(Phase phase);

/// Result of the fixed-point scan of the response map.
struct FixedPointReport {
  /// The fixed point; present iff the phase is (Dobrushin)Subcritical.
  std::optional<double> p;
  Phase phase = Phase::kIndeterminate;
  /// Response-map slope at the reported root, computed as
  /// 2 p (1-p) * mean_field_exponent_derivative(p). With several roots this
  /// is the largest slope over the roots found.
  double response_slope_at_root = 0.0;
  /// Exponent derivative at a=1 (Dobrushin uniqueness test value).
  double exponent_derivative_at_one = 0.0;
  /// Sign changes of response(a) - a found on the scan grid.
  int root_count_on_grid = 0;
};

/// Scans response(a) - a for sign changes on a fixed grid (step 1e-4),
/// refines each bracket by bisection until |response(p) - p| <= tol, then
/// classifies the phase. Roots with slope within 1e-6 of 1 yield
/// kIndeterminate rather than a forced call.
/// Throws std::invalid_argument for tol <= 0.
FixedPointReport solve_fixed_point(const Model& model, double tol = 1e-12);

}  // namespace ergm
