#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "grasscub/cubature.hpp"
#include "grasscub/errors.hpp"
#include "grasscub/phase.hpp"
#include "grasscub/zonal.hpp"
#include "oracles.hpp"

using namespace grasscub;

namespace {

std::vector<Projector> equiangular_lines() {
  return {oracles::line_projector(0.0), oracles::line_projector(M_PI / 3),
          oracles::line_projector(2 * M_PI / 3)};
}

WeightedCubature g24_design() {
  MinimizeOptions opts;
  opts.restarts = 2;
  opts.max_iter = 30000;
  Rng rng(1);
  WeightedCubature c = minimize_ffp(45, 2, 4, 2, opts, rng);
  REQUIRE(c.certificate_residual <= 1e-10);
  return c;
}

}  // namespace

TEST_CASE("magnitude measurements") {
  Eigen::Vector2d e1(1.0, 0.0);
  const MeasurementSet ms = measure(e1, equiangular_lines());
  CHECK(ms.values(0) == doctest::Approx(1.0).epsilon(1e-14));   // line at 0
  CHECK(ms.values(1) == doctest::Approx(0.25).epsilon(1e-12));  // cos^2 60
  CHECK_FALSE(ms.norm_known);

  Eigen::Vector2d x(0.6, -1.1);
  const MeasurementSet with_norm = measure(x, equiangular_lines(), true);
  CHECK(with_norm.norm_known);
  CHECK(with_norm.norm_value == doctest::Approx(x.squaredNorm()).epsilon(1e-14));

  // Measurements see only x x^T: invariant under the global sign.
  const MeasurementSet neg = measure(-x, equiangular_lines(), true);
  CHECK((ms.values - measure(-e1, equiangular_lines()).values).norm() == 0.0);
  CHECK((with_norm.values - neg.values).norm() == 0.0);
}

TEST_CASE("second moment constants") {
  const AlphaBeta ab12 = alpha_beta(1, 2);
  CHECK(ab12.alpha == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(ab12.beta == doctest::Approx(0.125).epsilon(1e-15));

  const AlphaBeta ab24 = alpha_beta(2, 4);
  CHECK(ab24.alpha == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  CHECK(ab24.beta == doctest::Approx(2.0 / 9.0).epsilon(1e-15));

  for (int d = 3; d <= 7; ++d)
    for (int k = 1; k < d; ++k) {
      CHECK(alpha_beta(k, d).alpha ==
            doctest::Approx(alpha_beta(d - k, d).alpha).epsilon(1e-15));
      if (2 * k != d)
        CHECK(alpha_beta(k, d).beta != alpha_beta(d - k, d).beta);
    }
  CHECK_THROWS_AS(alpha_beta(1, 1), ParameterError);
}

TEST_CASE("closed-form reconstruction on the three-line design") {
  const auto lines = equiangular_lines();
  const Eigen::VectorXd thirds = Eigen::VectorXd::Constant(3, 1.0 / 3.0);

  Eigen::Vector2d e1(1.0, 0.0);
  const ClosedFormResult res = reconstruct_closed_form(measure(e1, lines), thirds);
  CHECK(std::abs(res.candidate(0, 0) - 1.0) <= 1e-14);
  CHECK(std::abs(res.candidate(0, 1)) <= 1e-14);
  CHECK(std::abs(res.candidate(1, 1)) <= 1e-14);
  CHECK_FALSE(res.cubature_warning);

  const ClosedFormResult zero =
      reconstruct_closed_form(measure(Eigen::Vector2d::Zero(), lines), thirds);
  CHECK(zero.candidate.mat().norm() == 0.0);

  // Exactness for arbitrary-scale x: error well under 1e-8 ||x||^2.
  Rng rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    Eigen::Vector2d x(3.0 * rng.normal(), 3.0 * rng.normal());
    const ClosedFormResult r = reconstruct_closed_form(measure(x, lines), thirds);
    CHECK((r.candidate.mat() - x * x.transpose()).norm() <=
          1e-8 * std::max(1e-12, x.squaredNorm()));
  }
}

TEST_CASE("closed form warns when the point set is not a 2-design") {
  Rng rng(9);
  std::vector<Projector> random_lines;
  for (int i = 0; i < 3; ++i) random_lines.push_back(sample_uniform(2, 1, rng));
  const Eigen::VectorXd thirds = Eigen::VectorXd::Constant(3, 1.0 / 3.0);
  Eigen::Vector2d x(0.3, 0.8);
  const ClosedFormResult res = reconstruct_closed_form(measure(x, random_lines), thirds);
  CHECK(res.cubature_warning);
  CHECK(res.cubature_residual > 0.0);
}

TEST_CASE("closed-form reconstruction on a computed design in G_{2,4}") {
  const WeightedCubature c = g24_design();
  Rng rng(44);
  for (int rep = 0; rep < 20; ++rep) {
    Eigen::VectorXd x(4);
    for (int i = 0; i < 4; ++i) x(i) = rng.normal();
    const ClosedFormResult res = reconstruct_closed_form(measure(x, c.points), c.weights);
    const double rel =
        (res.candidate.mat() - x * x.transpose()).norm() / x.squaredNorm();
    CHECK(rel <= 1e-6);
  }
}

TEST_CASE("rank one extraction") {
  Eigen::Matrix2d e11 = Eigen::Matrix2d::Zero();
  e11(0, 0) = 1.0;
  const RankOneExtract ex = rank_one_extract(SymMatrix::from_full(e11));
  CHECK((ex.x - Eigen::Vector2d(1.0, 0.0)).norm() <= 1e-14);
  CHECK(ex.residual <= 1e-14);

  const RankOneExtract id = rank_one_extract(
      SymMatrix::from_full(Eigen::Matrix2d::Identity()));
  CHECK(id.residual == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

  Rng rng(12);
  Eigen::Vector3d x(0.5, -1.2, 0.7);
  Eigen::Matrix3d noise;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) noise(i, j) = rng.normal();
  const Eigen::Matrix3d a =
      x * x.transpose() + 1e-8 * 0.5 * (noise + noise.transpose());
  const RankOneExtract perturbed = rank_one_extract(SymMatrix::from_full(a));
  CHECK(std::min((perturbed.x - x).norm(), (perturbed.x + x).norm()) <= 1e-6);
}

TEST_CASE("pocs solves the determined three-line system") {
  const auto lines = equiangular_lines();
  Eigen::Vector2d e1(1.0, 0.0);
  const PocsResult res = feasibility_pocs(measure(e1, lines));
  CHECK(res.converged);
  Eigen::Matrix2d expected = Eigen::Matrix2d::Zero();
  expected(0, 0) = 1.0;
  CHECK((res.a.mat() - expected).norm() <= 1e-6);

  const PocsResult zero = feasibility_pocs(measure(Eigen::Vector2d::Zero(), lines));
  CHECK(zero.converged);
  CHECK(zero.a.mat().norm() <= 1e-12);
  CHECK(zero.iterations <= 2);
}

TEST_CASE("pocs flags redundant constraints and still solves") {
  auto lines = equiangular_lines();
  lines.push_back(lines[0]);  // duplicate constraint
  Eigen::Vector2d e1(1.0, 0.0);
  const PocsResult res = feasibility_pocs(measure(e1, lines));
  CHECK(res.redundant_constraints);
  CHECK(res.converged);
  Eigen::Matrix2d expected = Eigen::Matrix2d::Zero();
  expected(0, 0) = 1.0;
  CHECK((res.a.mat() - expected).norm() <= 1e-6);
}

TEST_CASE("pocs iterates are Fejer monotone and end feasible") {
  Rng rng(77);
  const int d = 6, k = 2, n = 12;
  Eigen::VectorXd x(d);
  for (int i = 0; i < d; ++i) x(i) = rng.normal();
  x.normalize();
  std::vector<Projector> ps;
  for (int j = 0; j < n; ++j) ps.push_back(sample_uniform(d, k, rng));

  PocsOptions opts;
  opts.record_trace = true;
  const PocsResult res = feasibility_pocs(measure(x, ps, true), opts);
  REQUIRE(res.trace.size() >= 2);
  for (std::size_t i = 1; i < res.trace.size(); ++i) {
    const double prev = res.trace[i - 1].first + res.trace[i - 1].second;
    const double curr = res.trace[i].first + res.trace[i].second;
    CHECK(curr <= prev + 1e-12);
  }
  if (res.converged) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(res.a.mat());
    CHECK(eig.eigenvalues()(0) >= -opts.tol);
    double res_norm_sq = 0.0;
    for (std::size_t j = 0; j < ps.size(); ++j) {
      const double r = ps[j].mat().cwiseProduct(res.a.mat()).sum() -
                       x.dot(ps[j].mat() * x);
      res_norm_sq += r * r;
    }
    CHECK(std::sqrt(res_norm_sq) <= opts.tol * 2);
  }
}

TEST_CASE("sampling from a cubature measure") {
  WeightedCubature c;
  c.d = 2;
  c.k = 1;
  c.degree = 2;
  c.points = equiangular_lines();
  c.weights = Eigen::VectorXd::Constant(3, 1.0 / 3.0);
  c.certificate_residual = 0.0;

  Rng rng(3);
  const auto single = sample_from_cubature_measure(c, 5, rng);
  CHECK(single.size() == 5);

  // Degenerate weights select only the first point.
  WeightedCubature first = c;
  first.weights << 1.0, 0.0, 0.0;
  for (const Projector& p : sample_from_cubature_measure(first, 100, rng))
    CHECK((p.mat() - c.points[0].mat()).norm() == 0.0);

  // Frequencies concentrate at the weights.
  Rng rng2(8);
  const auto draws = sample_from_cubature_measure(c, 30000, rng2);
  Eigen::Vector3d counts = Eigen::Vector3d::Zero();
  for (const Projector& p : draws)
    for (int j = 0; j < 3; ++j)
      if ((p.mat() - c.points[static_cast<std::size_t>(j)].mat()).norm() == 0.0)
        counts(j) += 1.0;
  for (int j = 0; j < 3; ++j)
    CHECK(std::abs(counts(j) / 30000.0 - 1.0 / 3.0) < 0.01);

  WeightedCubature negative = c;
  negative.weights << 0.5, 0.75, -0.25;
  CHECK_THROWS_AS(sample_from_cubature_measure(negative, 3, rng), ParameterError);
}

TEST_CASE("success experiment endpoints") {
  Rng rng(2025);
  // One constraint in d >= 2 is hopeless.
  const SweepRow none = success_experiment(4, 1, 1, ProjectorSource::haar, nullptr, 10, rng);
  CHECK(none.success_rate <= 0.05);

  // n >= d(d+1)/2 generic constraints plus the norm determine A outright.
  Rng rng2(2026);
  const SweepRow full =
      success_experiment(5, 1, 16, ProjectorSource::haar, nullptr, 10, rng2);
  CHECK(full.success_rate >= 0.9);

  // Success is monotone along the sweep (shared seeds).
  Rng rng3(2027);
  double prev = -1.0;
  int increases = 0;
  for (int n : {2, 8, 16}) {
    Rng row_rng = rng3.fork(static_cast<std::uint64_t>(n));
    const SweepRow row =
        success_experiment(5, 1, n, ProjectorSource::haar, nullptr, 10, row_rng);
    if (row.success_rate >= prev) ++increases;
    prev = row.success_rate;
  }
  CHECK(increases >= 2);

  // Cubature-sampled projectors drive the same pipeline.
  MinimizeOptions opts;
  opts.restarts = 2;
  opts.max_iter = 20000;
  Rng crng(10);
  const WeightedCubature c = minimize_ffp(6, 1, 3, 3, opts, crng);
  Rng rng4(2028);
  const SweepRow cub =
      success_experiment(3, 1, 9, ProjectorSource::cubature, &c, 10, rng4);
  CHECK(cub.source == "cubature");
  CHECK(cub.success_rate >= 0.8);
}
