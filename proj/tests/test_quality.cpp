#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "grasscub/cubature.hpp"
#include "grasscub/errors.hpp"
#include "grasscub/quality.hpp"
#include "grasscub/zonal.hpp"
#include "oracles.hpp"

using namespace grasscub;

namespace {

WeightedCubature uniform_cubature(std::vector<Projector> points, int t) {
  WeightedCubature c;
  c.d = points[0].dim();
  c.k = points[0].rank();
  c.degree = t;
  c.weights =
      Eigen::VectorXd::Constant(static_cast<Eigen::Index>(points.size()),
                                1.0 / static_cast<double>(points.size()));
  c.points = std::move(points);
  c.certificate_residual = ffp(c.points, c.weights, t) - ffp_lower_bound(t, c.k, c.d);
  return c;
}

std::vector<Projector> equiangular_lines() {
  return {oracles::line_projector(0.0), oracles::line_projector(M_PI / 3),
          oracles::line_projector(2 * M_PI / 3)};
}

}  // namespace

TEST_CASE("covering radius on the projective line") {
  Rng rng(100);
  const std::vector<Projector> single = {oracles::line_projector(0.3)};
  const CoveringEstimate est = covering_radius_estimate(single, 20000, rng);
  // sup over the circle of sqrt(2)|sin theta| = sqrt(2).
  CHECK(est.rho_hat <= std::sqrt(2.0) + 1e-12);
  CHECK(est.rho_hat > std::sqrt(2.0) - 5e-3);

  Rng rng2(101);
  const CoveringEstimate three = covering_radius_estimate(equiangular_lines(), 20000, rng2);
  CHECK(three.rho_hat <= std::sqrt(2.0) / 2 + 1e-12);
  CHECK(three.rho_hat > std::sqrt(2.0) / 2 - 5e-3);

  CHECK_THROWS_AS(covering_radius_estimate({}, 10, rng), ParameterError);
}

TEST_CASE("probe set equal to the points gives zero") {
  const auto lines = equiangular_lines();
  CHECK(covering_radius_against(lines, lines) == 0.0);
}

TEST_CASE("polish never reports less than the raw estimate") {
  Rng rng(4);
  std::vector<Projector> pts;
  for (int i = 0; i < 4; ++i) pts.push_back(sample_uniform(3, 1, rng));
  Rng probe_rng(5);
  const CoveringEstimate raw = covering_radius_estimate(pts, 2000, probe_rng);
  Rng probe_rng2(5);
  const CoveringEstimate polished = covering_radius_estimate(pts, 2000, probe_rng2, 100);
  CHECK(polished.rho_hat == raw.rho_hat);
  CHECK(polished.rho_polished >= raw.rho_hat);
}

TEST_CASE("adding points never increases the covering radius") {
  Rng rng(6);
  std::vector<Projector> probes;
  for (int i = 0; i < 500; ++i) probes.push_back(sample_uniform(3, 1, rng));
  std::vector<Projector> pts;
  double prev = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 8; ++i) {
    pts.push_back(sample_uniform(3, 1, rng));
    const double rho = covering_radius_against(pts, probes);
    CHECK(rho <= prev + 1e-15);
    prev = rho;
  }
}

TEST_CASE("integration against cubatures") {
  const WeightedCubature lines = uniform_cubature(equiangular_lines(), 2);
  CHECK(integrate_with_cubature(lines, [](const Projector&) { return 1.0; }) ==
        doctest::Approx(1.0).epsilon(1e-15));

  // f = trace(A P) integrates to (k/d) trace(A) at any certified t >= 1.
  Eigen::Matrix2d a;
  a << 0.7, 0.2, 0.2, -1.3;
  const double integral = integrate_with_cubature(
      lines, [&](const Projector& p) { return (a * p.mat()).trace(); });
  CHECK(integral == doctest::Approx(0.5 * a.trace()).epsilon(1e-10));

  // f = trace(A P)^2 with A = diag(1,0): the fourth moment of cos.
  Eigen::Matrix2d diag = Eigen::Matrix2d::Zero();
  diag(0, 0) = 1.0;
  const double fourth = integrate_with_cubature(lines, [&](const Projector& p) {
    const double v = (diag * p.mat()).trace();
    return v * v;
  });
  CHECK(fourth == doctest::Approx(3.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("certified cubatures of different seeds agree on low-degree monomials") {
  MinimizeOptions opts;
  opts.restarts = 3;
  opts.max_iter = 20000;
  Rng ra(7), rb(1234);
  const WeightedCubature ca = minimize_ffp(3, 1, 2, 2, opts, ra);
  const WeightedCubature cb = minimize_ffp(3, 1, 2, 2, opts, rb);
  REQUIRE(ca.certificate_residual <= 1e-10);
  REQUIRE(cb.certificate_residual <= 1e-10);
  for (int i = 0; i < 2; ++i)
    for (int j = i; j < 2; ++j)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = i2; j2 < 2; ++j2) {
          const auto f = [&](const Projector& p) {
            return p.mat()(i, j) * p.mat()(i2, j2);
          };
          CHECK(integrate_with_cubature(ca, f) ==
                doctest::Approx(integrate_with_cubature(cb, f)).epsilon(1e-9));
        }
}

TEST_CASE("error experiment separates cubature from random baseline") {
  const WeightedCubature lines = uniform_cubature(equiangular_lines(), 2);
  Eigen::Matrix2d diag = Eigen::Matrix2d::Zero();
  diag(0, 0) = 1.0;
  const ProjectorFunction f = [&](const Projector& p) {
    const double v = (diag * p.mat()).trace();
    return v * v;
  };
  Rng rng(55);
  const auto reports =
      integration_error_experiment({lines}, f, "poly2", 3.0 / 8.0, 0.0, 100, rng);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].cubature_error <= 1e-10);       // exact on Hom_2
  CHECK(reports[0].random_mean > 1e-3);            // Monte Carlo noise floor
  CHECK(reports[0].random_std >= 0.0);
}

TEST_CASE("random baseline scales like n^{-1/2}") {
  Eigen::Matrix2d diag = Eigen::Matrix2d::Zero();
  diag(0, 0) = 1.0;
  const ProjectorFunction f = [&](const Projector& p) {
    const double v = (diag * p.mat()).trace();
    return std::exp(v);
  };
  // Reference by direct 1-D quadrature over the angle.
  double reference = 0.0;
  const int nq = 4000;
  for (int i = 0; i < nq; ++i) {
    const double theta = M_PI * (i + 0.5) / nq;
    reference += std::exp(std::cos(theta) * std::cos(theta)) / nq;
  }
  std::vector<double> ns = {100, 400, 1600};
  std::vector<double> errs;
  Rng rng(808);
  for (double n : ns) {
    const RandomBaseline b = random_integration_baseline(
        2, 1, static_cast<int>(n), f, reference, 60, rng);
    errs.push_back(b.mean_abs_error);
  }
  const SlopeFit fit = fit_log_log_slope(ns, errs);
  CHECK(fit.slope == doctest::Approx(-0.5).epsilon(0.35));
}

TEST_CASE("crossed polytopes of lines certify degree n-1 and cover at rate 1/n") {
  // n equiangular lines in the plane are a degree-(n-1) design; their
  // covering radius scales like n^{-1} (k(d-k) = 1).
  std::vector<WeightedCubature> family;
  for (int t = 1; t <= 6; ++t) {
    const int n = t + 1;
    std::vector<Projector> lines;
    for (int j = 0; j < n; ++j) lines.push_back(oracles::line_projector(j * M_PI / n));
    WeightedCubature c = uniform_cubature(std::move(lines), t);
    REQUIRE(certify_cubature(c, t, 1e-12).certified);
    family.push_back(std::move(c));
  }
  Rng rng(2222);
  const SlopeFit fit = covering_rate_experiment(family, 20000, rng);
  CHECK(fit.slope == doctest::Approx(-1.0).epsilon(0.2));
}

TEST_CASE("integration error decreases with the design degree on smooth functions") {
  Eigen::Matrix2d a;
  a << 0.4, 0.1, 0.1, -0.2;
  const ProjectorFunction f = [&](const Projector& p) {
    return std::exp(a.cwiseProduct(p.mat()).sum());
  };
  // Reference by dense angular quadrature.
  double reference = 0.0;
  const int nq = 20000;
  for (int i = 0; i < nq; ++i) {
    const double theta = M_PI * (i + 0.5) / nq;
    reference += f(oracles::line_projector(theta)) / nq;
  }

  std::vector<WeightedCubature> family;
  for (int t = 1; t <= 5; ++t) {
    std::vector<Projector> lines;
    for (int j = 0; j <= t; ++j)
      lines.push_back(oracles::line_projector(j * M_PI / (t + 1)));
    family.push_back(uniform_cubature(std::move(lines), t));
  }
  Rng rng(909);
  const auto reports =
      integration_error_experiment(family, f, "exp_trace", reference, 1e-12, 100, rng);
  int inversions = 0;
  for (std::size_t i = 1; i < reports.size(); ++i)
    if (reports[i].cubature_error > reports[i - 1].cubature_error) ++inversions;
  CHECK(inversions <= 1);
  CHECK(reports.back().cubature_error < reports.front().cubature_error);
}

TEST_CASE("probe estimate is monotone in the probe count under a shared seed") {
  const auto lines = equiangular_lines();
  double prev = 0.0;
  for (int n_probe : {500, 1000, 2000, 4000}) {
    Rng rng(31337);  // same stream: probe sets are nested
    const double rho = covering_radius_estimate(lines, n_probe, rng).rho_hat;
    CHECK(rho >= prev);
    prev = rho;
  }
}

TEST_CASE("covering rate experiment requires three members and sees flat families") {
  const WeightedCubature lines = uniform_cubature(equiangular_lines(), 2);
  Rng rng(3);
  CHECK_THROWS_AS(covering_rate_experiment({lines, lines}, 100, rng), ParameterError);

  // Nested identical point sets: the covering radius cannot improve, and with
  // common probes the fitted slope is exactly zero.
  auto repeat = [&](int copies) {
    std::vector<Projector> pts;
    for (int c = 0; c < copies; ++c)
      for (const Projector& p : equiangular_lines()) pts.push_back(p);
    return uniform_cubature(std::move(pts), 2);
  };
  const std::vector<WeightedCubature> nested = {repeat(1), repeat(2), repeat(4)};
  Rng rng2(17);
  const SlopeFit fit = covering_rate_experiment(nested, 2000, rng2);
  CHECK(std::abs(fit.slope) <= 1e-12);
}
