#include "ergmlab/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "ergmlab/errors.hpp"

namespace ergm {

Model::Model(int n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw std::invalid_argument("model needs at least the edge term");
  }
  if (!(terms_.front().motif == Motif::single_edge())) {
    throw std::invalid_argument("the first model term must be a single edge");
  }
  for (std::size_t l = 1; l < terms_.size(); ++l) {
    if (!(terms_[l].beta > 0.0)) {
      throw std::invalid_argument(
          "non-edge couplings must be strictly positive");
    }
  }
  int max_v = 0;
  for (const Term& term : terms_) {
    max_v = std::max(max_v, term.motif.vertex_count());
  }
  if (n_ < max_v) {
    throw std::invalid_argument(
        "graph size n is smaller than a motif vertex count");
  }
}

bool Model::is_edge_only() const { return terms_.size() == 1; }

Model Model::with_n(int n) const { return Model(n, terms_); }

Model Model::with_edge_beta(double beta) const {
  std::vector<Term> terms = terms_;
  terms.front().beta = beta;
  return Model(n_, terms);
}

Model Model::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("model JSON does not parse: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw ConfigError("model JSON: missing or non-integer key \"n\"");
  }
  if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty()) {
    throw ConfigError("model JSON: missing or empty key \"terms\"");
  }
  std::vector<Term> terms;
  for (const auto& jt : j["terms"]) {
    if (!jt.is_object() || !jt.contains("beta") || !jt["beta"].is_number()) {
      throw ConfigError("model JSON: term missing numeric key \"beta\"");
    }
    if (!jt.contains("edges") || !jt["edges"].is_array() ||
        jt["edges"].empty()) {
      throw ConfigError("model JSON: term missing non-empty key \"edges\"");
    }
    std::vector<std::pair<int, int>> edges;
    int max_vertex = 0;
    for (const auto& je : jt["edges"]) {
      if (!je.is_array() || je.size() != 2 || !je[0].is_number_integer() ||
          !je[1].is_number_integer()) {
        throw ConfigError(
            "model JSON: key \"edges\" must hold [u, v] integer pairs");
      }
      const int u = je[0].get<int>();
      const int v = je[1].get<int>();
      edges.emplace_back(u, v);
      max_vertex = std::max({max_vertex, u, v});
    }
    try {
      terms.push_back(
          Term{jt["beta"].get<double>(),
               Motif::from_edges(max_vertex + 1, std::move(edges))});
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("model JSON: bad \"edges\" value: ") +
                        e.what());
    }
  }
  try {
    return Model(j["n"].get<int>(), std::move(terms));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("model JSON: ") + e.what());
  }
}

std::string Model::to_json_text(int indent) const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["terms"] = nlohmann::ordered_json::array();
  for (const Term& term : terms_) {
    nlohmann::ordered_json jt;
    jt["beta"] = term.beta;
    jt["edges"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : term.motif.edges()) {
      jt["edges"].push_back({u, v});
    }
    j["terms"].push_back(std::move(jt));
  }
  return j.dump(indent);
}

double mean_field_exponent(const Model& model, double a) {
  double total = 0.0;
  for (const Term& term : model.terms()) {
    const int e = term.motif.edge_count();
    total += term.beta * e * std::pow(a, e - 1);
  }
  return total;
}

double mean_field_exponent_derivative(const Model& model, double a) {
  double total = 0.0;
  for (const Term& term : model.terms()) {
    const int e = term.motif.edge_count();
    if (e >= 2) {
      total += term.beta * e * (e - 1) * std::pow(a, e - 2);
    }
  }
  return total;
}

double mean_field_response(const Model& model, double a) {
  const double x = 2.0 * mean_field_exponent(model, a);
  // Logistic function without overflow for either sign of x.
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double ex = std::exp(x);
  return ex / (1.0 + ex);
}

std::string to_string(Phase phase) {
  switch (phase) {
    case Phase::kSubcritical:
      return "subcritical";
    case Phase::kDobrushinSubcritical:
      return "dobrushin_subcritical";
    case Phase::kNotSubcritical:
      return "not_subcritical";
    case Phase::kIndeterminate:
      return "indeterminate";
  }
  return "unknown";
}

FixedPointReport solve_fixed_point(const Model& model, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  constexpr double kGridStep = 1e-4;
  constexpr int kGridPoints = 10000;  // [0, 1] inclusive in kGridStep steps
  constexpr double kSlopeMargin = 1e-6;

  const auto gap = [&](double a) { return mean_field_response(model, a) - a; };

  // Bracket sign changes of response(a) - a on the grid. The gap is positive
  // at 0 and negative at 1 (the response stays inside (0,1)), so at least
  // one bracket always exists; tangency roots without a sign change are
  // outside this scheme's contract.
  std::vector<double> roots;
  double prev_a = 0.0;
  double prev_gap = gap(0.0);
  for (int i = 1; i <= kGridPoints; ++i) {
    const double a = (i == kGridPoints) ? 1.0 : i * kGridStep;
    const double g = gap(a);
    if ((prev_gap > 0.0) != (g > 0.0)) {
      double lo = prev_a;
      double hi = a;
      double glo = prev_gap;
      double mid = 0.5 * (lo + hi);
      for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (lo + hi);
        const double gm = gap(mid);
        if (std::abs(gm) <= tol) break;
        if ((glo > 0.0) == (gm > 0.0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(mid);
    }
    prev_a = a;
    prev_gap = g;
  }

  FixedPointReport report;
  report.exponent_derivative_at_one = mean_field_exponent_derivative(model, 1.0);
  report.root_count_on_grid = static_cast<int>(roots.size());

  double max_slope = 0.0;
  bool near_marginal = false;
  for (double r : roots) {
    const double slope =
        2.0 * r * (1.0 - r) * mean_field_exponent_derivative(model, r);
    max_slope = std::max(max_slope, slope);
    if (std::abs(slope - 1.0) <= kSlopeMargin) near_marginal = true;
  }
  report.response_slope_at_root = max_slope;

  if (near_marginal) {
    report.phase = Phase::kIndeterminate;
  } else if (roots.size() == 1 && max_slope < 1.0) {
    report.p = roots.front();
    report.phase = (report.exponent_derivative_at_one < 2.0)
                       ? Phase::kDobrushinSubcritical
                       : Phase::kSubcritical;
  } else {
    report.phase = Phase::kNotSubcritical;
  }
  return report;
}

}  // namespace ergm
