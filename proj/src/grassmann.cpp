#include "grasscub/grassmann.hpp"

#include <cmath>
#include <string>

#include "grasscub/errors.hpp"

namespace grasscub {

SymMatrix SymMatrix::from_full(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw ParameterError("SymMatrix: matrix must be square and nonempty");
  const int d = static_cast<int>(m.rows());
  SymMatrix out(d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) out.set(i, j, m(i, j));
  return out;
}

Projector::Projector(SymMatrix matrix, int rank) : matrix_(std::move(matrix)), rank_(rank) {
  const int d = matrix_.dim();
  if (rank < 1 || rank > d - 1)
    throw ParameterError("Projector: rank must satisfy 1 <= k <= d-1");
  const Eigen::MatrixXd& p = matrix_.mat();
  const double tol = eps_proj(d);
  const double idem = (p * p - p).norm();
  if (idem > tol)
    throw ValidationError("Projector: ||P*P - P||_F = " + std::to_string(idem) +
                          " exceeds tolerance");
  const double tr_err = std::abs(p.trace() - rank);
  if (tr_err > tol)
    throw ValidationError("Projector: |trace - k| = " + std::to_string(tr_err) +
                          " exceeds tolerance");
}

StiefelFrame::StiefelFrame(Eigen::MatrixXd rows) : q_(std::move(rows)) {
  const int k = static_cast<int>(q_.rows());
  const int d = static_cast<int>(q_.cols());
  if (k < 1 || d < 2 || k > d)
    throw ParameterError("StiefelFrame: need 1 <= k <= d with d >= 2");
  const double err =
      (q_ * q_.transpose() - Eigen::MatrixXd::Identity(k, k)).norm();
  if (err > eps_proj(d))
    throw ValidationError("StiefelFrame: ||Q Q^T - I||_F = " + std::to_string(err) +
                          " exceeds tolerance");
}

Projector sample_uniform(int d, int k, Rng& rng) {
  if (d < 2 || k < 1 || k > d - 1)
    throw ParameterError("sample_uniform: need 1 <= k <= d-1");
  Eigen::MatrixXd g(d, k);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < k; ++j) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  const Eigen::MatrixXd u = qr.householderQ() * Eigen::MatrixXd::Identity(d, k);
  // P = U U^T depends only on the column span, so no sign fixing is needed.
  return Projector(SymMatrix::from_full(u * u.transpose()), k);
}

double chordal_distance(const Projector& p, const Projector& r) {
  if (p.dim() != r.dim())
    throw ParameterError("chordal_distance: dimension mismatch");
  return (p.mat() - r.mat()).norm();
}

Projector stiefel_to_projector(const StiefelFrame& q) {
  const Eigen::MatrixXd& m = q.mat();
  return Projector(SymMatrix::from_full(m.transpose() * m), q.rank());
}

StiefelFrame projector_to_stiefel(const Projector& p) {
  const int d = p.dim();
  const int k = p.rank();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(p.mat());
  const Eigen::VectorXd& vals = eig.eigenvalues();  // ascending
  const double tol = eps_proj(d);
  for (int i = 0; i < d; ++i) {
    const double expected = (i < d - k) ? 0.0 : 1.0;
    if (std::abs(vals(i) - expected) > tol)
      throw ValidationError(
          "projector_to_stiefel: eigenvalue " + std::to_string(vals(i)) +
          " not clustered at {0,1}");
  }
  // Rows of Q are the eigenvectors of eigenvalue ~1.
  Eigen::MatrixXd q = eig.eigenvectors().rightCols(k).transpose();
  return StiefelFrame(std::move(q));
}

GrassmannProjection project_to_grassmannian(const SymMatrix& a, int k) {
  const int d = a.dim();
  if (k < 1 || k > d - 1)
    throw ParameterError("project_to_grassmannian: need 1 <= k <= d-1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a.mat());
  const Eigen::VectorXd& vals = eig.eigenvalues();
  Eigen::MatrixXd u = eig.eigenvectors().rightCols(k);

  // Deterministic representative: first nonzero component of each eigenvector
  // positive (does not change U U^T, keeps degenerate spectra reproducible).
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < d; ++i) {
      if (u(i, j) != 0.0) {
        if (u(i, j) < 0.0) u.col(j) = -u.col(j);
        break;
      }
    }
  }

  const double gap = vals(d - k) - vals(d - k - 1);
  const double scale = std::max(1.0, std::abs(vals(d - 1)));
  const bool degenerate = gap <= eps_proj(d) * scale;
  Projector p(SymMatrix::from_full(u * u.transpose()), k);
  return GrassmannProjection{std::move(p), degenerate, gap};
}

}  // namespace grasscub
