#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ergmlab/errors.hpp"
#include "ergmlab/model.hpp"
#include "ergmlab/motif.hpp"

using ergm::Model;
using ergm::Motif;
using ergm::Phase;
using ergm::Term;

namespace {

Model edge_only(int n, double beta1) {
  return Model(n, {{beta1, Motif::single_edge()}});
}

Model edge_plus(int n, double beta1, double beta2, const Motif& motif) {
  return Model(n, {{beta1, Motif::single_edge()}, {beta2, motif}});
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

TEST_CASE("construction enforces the term conventions") {
  CHECK_NOTHROW(edge_only(10, -3.0));
  CHECK_NOTHROW(edge_plus(10, 0.0, 0.1, Motif::triangle()));
  // first term must be the single edge
  CHECK_THROWS_AS(Model(10, {{0.5, Motif::triangle()}}), std::invalid_argument);
  CHECK_THROWS_AS(Model(10, {}), std::invalid_argument);
  // later couplings must be strictly positive
  CHECK_THROWS_AS(edge_plus(10, 0.0, -0.1, Motif::two_star()),
                  std::invalid_argument);
  CHECK_THROWS_AS(edge_plus(10, 0.0, 0.0, Motif::two_star()),
                  std::invalid_argument);
  // n must fit the largest motif
  CHECK_THROWS_AS(edge_plus(3, 0.0, 0.1, Motif::complete(4)),
                  std::invalid_argument);
  CHECK_NOTHROW(edge_plus(4, 0.0, 0.1, Motif::complete(4)));
}

TEST_CASE("pair count and edge-only detection") {
  CHECK(edge_only(10, 0.2).pair_count() == 45);
  CHECK(edge_only(48, 0.2).pair_count() == 1128);
  CHECK(edge_only(7, -1.0).is_edge_only());
  CHECK(!edge_plus(7, -1.0, 0.3, Motif::two_star()).is_edge_only());
}

TEST_CASE("mean-field exponent evaluates the coupling polynomial") {
  // edge term alone is constant in the density
  CHECK(ergm::mean_field_exponent(edge_only(10, 0.3), 0.7) ==
        doctest::Approx(0.3).epsilon(1e-15));
  CHECK(ergm::mean_field_exponent(edge_only(10, 0.0), 0.25) == 0.0);
  // triangle term: beta * e * a^(e-1) = 0.1 * 3 * 0.25
  CHECK(ergm::mean_field_exponent(edge_plus(10, 0.0, 0.1, Motif::triangle()),
                                  0.5) == doctest::Approx(0.075).epsilon(1e-15));
  // two-star term: 0.2 * 2 * a
  CHECK(ergm::mean_field_exponent(edge_plus(10, 0.0, 0.2, Motif::two_star()),
                                  0.5) == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("mean-field exponent derivative") {
  CHECK(ergm::mean_field_exponent_derivative(edge_only(10, 5.0), 0.4) == 0.0);
  // triangle: beta * e * (e-1) * a^(e-2) = 0.1 * 3 * 2 * 1 at a = 1
  CHECK(ergm::mean_field_exponent_derivative(
            edge_plus(10, 0.0, 0.1, Motif::triangle()), 1.0) ==
        doctest::Approx(0.6).epsilon(1e-15));
  // two-star: constant derivative 2 * beta
  CHECK(ergm::mean_field_exponent_derivative(
            edge_plus(10, 0.0, 0.2, Motif::two_star()), 0.5) ==
        doctest::Approx(0.4).epsilon(1e-15));

  // finite-difference cross-check on a mixed model
  const Model m(12, {{-0.4, Motif::single_edge()},
                     {0.2, Motif::two_star()},
                     {0.05, Motif::complete(4)}});
  const double a = 0.63, h = 1e-6;
  const double fd = (ergm::mean_field_exponent(m, a + h) -
                     ergm::mean_field_exponent(m, a - h)) /
                    (2 * h);
  CHECK(ergm::mean_field_exponent_derivative(m, a) ==
        doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("response map values and numerical stability") {
  CHECK(ergm::mean_field_response(edge_only(10, 0.0), 0.3) == 0.5);
  CHECK(ergm::mean_field_response(edge_only(10, 1.0), 0.9) ==
        doctest::Approx(sigmoid(2.0)).epsilon(1e-15));
  CHECK(ergm::mean_field_response(edge_plus(10, 0.0, 0.1, Motif::triangle()),
                                  0.5) ==
        doctest::Approx(std::exp(0.15) / (1 + std::exp(0.15))).epsilon(1e-15));
  // extreme couplings must saturate, not overflow
  CHECK(ergm::mean_field_response(edge_only(10, 400.0), 0.5) == 1.0);
  CHECK(ergm::mean_field_response(edge_only(10, -400.0), 0.5) == 0.0);
}

TEST_CASE("response map is nondecreasing in the density") {
  const Model m(12, {{-0.6, Motif::single_edge()},
                     {0.4, Motif::two_star()},
                     {0.2, Motif::triangle()}});
  double prev = ergm::mean_field_response(m, 0.0);
  for (int i = 1; i <= 100; ++i) {
    const double cur = ergm::mean_field_response(m, i / 100.0);
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("fixed point of the edge-only model is the closed-form density") {
  SUBCASE("symmetric case") {
    const ergm::FixedPointReport r = ergm::solve_fixed_point(edge_only(10, 0.0));
    REQUIRE(r.p.has_value());
    CHECK(*r.p == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.phase == Phase::kDobrushinSubcritical);
    CHECK(r.response_slope_at_root == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.exponent_derivative_at_one == 0.0);
    CHECK(r.root_count_on_grid == 1);
  }
  SUBCASE("tilted case") {
    const ergm::FixedPointReport r = ergm::solve_fixed_point(edge_only(10, 1.0));
    REQUIRE(r.p.has_value());
    CHECK(*r.p == doctest::Approx(0.8807970779778823).epsilon(1e-12));
    CHECK(r.phase == Phase::kDobrushinSubcritical);
  }
  SUBCASE("any edge coupling stays uniquely solvable") {
    for (double b1 : {-3.0, -0.7, 0.3, 2.5}) {
      const ergm::FixedPointReport r = ergm::solve_fixed_point(edge_only(8, b1));
      REQUIRE(r.p.has_value());
      CHECK(*r.p == doctest::Approx(sigmoid(2 * b1)).epsilon(1e-12));
    }
  }
}

TEST_CASE("fixed-point residual honors the tolerance") {
  const Model m = edge_plus(16, -0.6, 0.4, Motif::two_star());
  const ergm::FixedPointReport r = ergm::solve_fixed_point(m, 1e-12);
  REQUIRE(r.p.has_value());
  CHECK(std::fabs(ergm::mean_field_response(m, *r.p) - *r.p) <= 1e-12);
  CHECK(r.response_slope_at_root ==
        doctest::Approx(2 * *r.p * (1 - *r.p) *
                        ergm::mean_field_exponent_derivative(m, *r.p))
            .epsilon(1e-12));
}

TEST_CASE("strong triangle coupling leaves the subcritical region") {
  const ergm::FixedPointReport r =
      ergm::solve_fixed_point(edge_plus(10, 0.0, 2.0, Motif::triangle()));
  CHECK(r.phase == Phase::kNotSubcritical);
  CHECK(!r.p.has_value());
  // the sign-change scan must actually see the multiple crossings
  CHECK(r.root_count_on_grid > 1);
}

TEST_CASE("dobrushin classification implies the subcritical test") {
  // sweep a family of couplings; every Dobrushin report must also satisfy
  // the plain subcritical conditions
  for (double b2 : {0.05, 0.1, 0.2, 0.3, 0.4}) {
    for (double b1 : {-0.8, -0.3, 0.0}) {
      const ergm::FixedPointReport r =
          ergm::solve_fixed_point(edge_plus(12, b1, b2, Motif::two_star()));
      if (r.phase == Phase::kDobrushinSubcritical) {
        REQUIRE(r.p.has_value());
        CHECK(r.response_slope_at_root < 1.0);
        CHECK(r.exponent_derivative_at_one < 2.0);
        CHECK(r.root_count_on_grid == 1);
      }
    }
  }
}

TEST_CASE("non-positive tolerance is rejected") {
  CHECK_THROWS_AS(ergm::solve_fixed_point(edge_only(8, 0.0), 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(ergm::solve_fixed_point(edge_only(8, 0.0), -1e-9),
                  std::invalid_argument);
}

TEST_CASE("phase names") {
  CHECK(ergm::to_string(Phase::kSubcritical) == "subcritical");
  CHECK(ergm::to_string(Phase::kDobrushinSubcritical) ==
        "dobrushin_subcritical");
  CHECK(ergm::to_string(Phase::kNotSubcritical) == "not_subcritical");
  CHECK(ergm::to_string(Phase::kIndeterminate) == "indeterminate");
}

TEST_CASE("size and edge-coupling rebinds preserve the other terms") {
  const Model m = edge_plus(10, -0.4, 0.25, Motif::triangle());
  const Model wider = m.with_n(32);
  CHECK(wider.n() == 32);
  REQUIRE(wider.terms().size() == 2);
  CHECK(wider.terms()[1].beta == 0.25);
  const Model retilted = m.with_edge_beta(1.5);
  CHECK(retilted.edge_beta() == 1.5);
  CHECK(retilted.n() == 10);
  CHECK(retilted.terms()[1].motif == Motif::triangle());
}

TEST_CASE("json round-trip preserves the model") {
  const Model m(14, {{-0.6, Motif::single_edge()},
                     {0.4, Motif::two_star()},
                     {0.05, Motif::complete(4)}});
  const Model back = Model::from_json_text(m.to_json_text());
  CHECK(back.n() == 14);
  REQUIRE(back.terms().size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(back.terms()[i].beta == m.terms()[i].beta);
    CHECK(back.terms()[i].motif == m.terms()[i].motif);
  }
}

TEST_CASE("malformed json is reported as a config error") {
  CHECK_THROWS_AS(Model::from_json_text("not json at all"), ergm::ConfigError);
  CHECK_THROWS_AS(Model::from_json_text("{}"), ergm::ConfigError);
  CHECK_THROWS_AS(Model::from_json_text(R"({"n": 5})"), ergm::ConfigError);
  CHECK_THROWS_AS(
      Model::from_json_text(R"({"n": 5, "terms": [{"edges": [[0,1]]}]})"),
      ergm::ConfigError);
  // schema errors should name the offending key
  try {
    Model::from_json_text(R"({"n": 5})");
    FAIL("expected a config error");
  } catch (const ergm::ConfigError& e) {
    CHECK(std::string(e.what()).find("terms") != std::string::npos);
  }
}
