#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>

#include "grasscub/errors.hpp"
#include "grasscub/grassmann.hpp"
#include "oracles.hpp"

using namespace grasscub;

TEST_CASE("sym matrix is symmetric by construction") {
  Eigen::MatrixXd m(2, 2);
  m << 1.0, 2.0, 7.0, 3.0;  // lower triangle inconsistent on purpose
  const SymMatrix s = SymMatrix::from_full(m);
  CHECK(s(0, 1) == s(1, 0));
  CHECK(s(0, 1) == 2.0);
}

TEST_CASE("sampled projectors satisfy the invariants to machine precision") {
  Rng rng(12345);
  for (int rep = 0; rep < 50; ++rep) {
    const Projector p = sample_uniform(2, 1, rng);
    CHECK((p.mat() * p.mat() - p.mat()).norm() <= 1e-12);
    CHECK(std::abs(p.mat().trace() - 1.0) <= 1e-12);
  }
  for (int rep = 0; rep < 50; ++rep) {
    const Projector p = sample_uniform(5, 3, rng);
    CHECK((p.mat() * p.mat() - p.mat()).norm() <= 1e-12);
    CHECK(std::abs(p.mat().trace() - 3.0) <= 1e-12);
  }
}

TEST_CASE("uniform sampling has mean (k/d) I") {
  // E[P] = (k/d) I by orthogonal invariance; Monte Carlo oracle.
  struct Case {
    int d, k;
  };
  for (const auto& c : {Case{2, 1}, Case{4, 2}}) {
    Rng rng(987);
    Eigen::MatrixXd mean = Eigen::MatrixXd::Zero(c.d, c.d);
    const int n = 100000;
    for (int i = 0; i < n; ++i) mean += sample_uniform(c.d, c.k, rng).mat();
    mean /= n;
    const Eigen::MatrixXd target =
        (static_cast<double>(c.k) / c.d) * Eigen::MatrixXd::Identity(c.d, c.d);
    CHECK((mean - target).cwiseAbs().maxCoeff() < 0.01);
  }
}

TEST_CASE("uniform sampling rejects bad parameters") {
  Rng rng(1);
  CHECK_THROWS_AS(sample_uniform(2, 0, rng), ParameterError);
  CHECK_THROWS_AS(sample_uniform(2, 2, rng), ParameterError);
  CHECK_THROWS_AS(sample_uniform(1, 1, rng), ParameterError);
}

TEST_CASE("chordal distance closed forms") {
  const Projector p0 = oracles::line_projector(0.0);
  CHECK(chordal_distance(p0, p0) == 0.0);

  const Projector e1 = oracles::line_projector(0.0);
  const Projector e2 = oracles::line_projector(M_PI / 2);
  CHECK(chordal_distance(e1, e2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  for (double theta : {0.1, 0.7, 1.3}) {
    const double expected = std::sqrt(2.0) * std::abs(std::sin(theta));
    CHECK(chordal_distance(p0, oracles::line_projector(theta)) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("chordal distance is a metric on random triples") {
  Rng rng(55);
  for (int rep = 0; rep < 30; ++rep) {
    const Projector a = sample_uniform(4, 2, rng);
    const Projector b = sample_uniform(4, 2, rng);
    const Projector c = sample_uniform(4, 2, rng);
    CHECK(chordal_distance(a, b) == chordal_distance(b, a));  // exact symmetry
    CHECK(chordal_distance(a, c) <=
          chordal_distance(a, b) + chordal_distance(b, c) + 1e-12);
  }
  const Projector p2 = sample_uniform(3, 1, rng);
  const Projector p4 = sample_uniform(4, 1, rng);
  CHECK_THROWS_AS(chordal_distance(p2, p4), ParameterError);
}

TEST_CASE("stiefel to projector") {
  Eigen::MatrixXd q(1, 2);
  q << 1.0, 0.0;
  CHECK(stiefel_to_projector(StiefelFrame(q)).mat()(0, 0) == 1.0);

  q << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const Projector p = stiefel_to_projector(StiefelFrame(q));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(p.mat()(i, j) == doctest::Approx(0.5).epsilon(1e-14));

  Eigen::MatrixXd top = Eigen::MatrixXd::Identity(5, 5).topRows(2);
  const Projector pk = stiefel_to_projector(StiefelFrame(top));
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(5, 5);
  expected(0, 0) = expected(1, 1) = 1.0;
  CHECK((pk.mat() - expected).norm() == 0.0);

  Eigen::MatrixXd bad(1, 2);
  bad << 1.0, 0.5;
  CHECK_THROWS_AS(StiefelFrame{bad}, ValidationError);
}

TEST_CASE("projector to stiefel round trips") {
  Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(2, 2);
  diag(0, 0) = 1.0;
  const StiefelFrame q = projector_to_stiefel(Projector(SymMatrix::from_full(diag), 1));
  CHECK(std::abs(std::abs(q.mat()(0, 0)) - 1.0) <= 1e-14);
  CHECK(std::abs(q.mat()(0, 1)) <= 1e-14);

  Rng rng(77);
  for (int rep = 0; rep < 20; ++rep) {
    const Projector p = sample_uniform(6, 3, rng);
    const StiefelFrame frame = projector_to_stiefel(p);
    CHECK((frame.mat() * frame.mat().transpose() - Eigen::MatrixXd::Identity(3, 3))
              .norm() <= 1e-12);
    CHECK(chordal_distance(stiefel_to_projector(frame), p) <= 1e-12);
  }
}

TEST_CASE("projection to the grassmannian") {
  Eigen::MatrixXd a = Eigen::Vector3d(3.0, 2.0, 1.0).asDiagonal();
  const GrassmannProjection proj = project_to_grassmannian(SymMatrix::from_full(a), 1);
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(3, 3);
  expected(0, 0) = 1.0;
  CHECK((proj.projector.mat() - expected).norm() <= 1e-14);
  CHECK_FALSE(proj.degenerate_spectrum);

  // Fixed point on an existing projector.
  Rng rng(3);
  const Projector p = sample_uniform(5, 2, rng);
  const GrassmannProjection fixed = project_to_grassmannian(p.sym(), 2);
  CHECK(chordal_distance(fixed.projector, p) <= 1e-12);

  // Fully degenerate spectrum: still a valid projector, tie flagged.
  const SymMatrix neg = SymMatrix::from_full(-Eigen::MatrixXd::Identity(4, 4));
  const GrassmannProjection tie = project_to_grassmannian(neg, 2);
  CHECK(tie.degenerate_spectrum);
  CHECK(tie.projector.rank() == 2);

  // Idempotent on its own output.
  const SymMatrix rand_sym = [&] {
    Eigen::MatrixXd m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = rng.normal();
    return SymMatrix::from_full(0.5 * (m + m.transpose()));
  }();
  const GrassmannProjection once = project_to_grassmannian(rand_sym, 2);
  const GrassmannProjection twice = project_to_grassmannian(once.projector.sym(), 2);
  CHECK(chordal_distance(once.projector, twice.projector) <= 1e-12);
}

TEST_CASE("projector validation rejects non-projectors") {
  Eigen::MatrixXd m(2, 2);
  m << 0.5, 0.0, 0.0, 0.5;  // symmetric, trace 1, but not idempotent
  CHECK_THROWS_AS(Projector(SymMatrix::from_full(m), 1), ValidationError);
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(3, 3);
  CHECK_THROWS_AS(Projector(SymMatrix::from_full(id), 3), ParameterError);
}

TEST_CASE("projector eigenvalues must cluster at zero and one") {
  Eigen::MatrixXd m(2, 2);
  m << 1.0, 0.0, 0.0, 1e-5;
  // Constructing the Projector itself already rejects this.
  CHECK_THROWS_AS(Projector(SymMatrix::from_full(m), 1), ValidationError);
}
