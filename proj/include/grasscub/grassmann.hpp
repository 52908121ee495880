#pragma once

#include <Eigen/Dense>

#include "grasscub/rng.hpp"

namespace grasscub {

/// Validation tolerance for projector/frame invariants, scaled by the ambient
/// dimension: far above QR/eig round-off, far below any geometric scale here.
inline double eps_proj(int d) { return 1e-9 * d; }

/// Symmetric d x d matrix; symmetry holds exactly by construction (the upper
/// triangle is mirrored on write, never re-checked by tolerance).
class SymMatrix {
public:
  SymMatrix() = default;
  explicit SymMatrix(int d) : m_(Eigen::MatrixXd::Zero(d, d)) {}

  /// Mirrors the upper triangle of m into both halves.
  static SymMatrix from_full(const Eigen::MatrixXd& m);

  int dim() const { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }

  /// Writes (i,j) and (j,i) together.
  void set(int i, int j, double value) {
    m_(i, j) = value;
    m_(j, i) = value;
  }

  const Eigen::MatrixXd& mat() const { return m_; }

private:
  Eigen::MatrixXd m_;
};

/// Point of the Grassmannian G_{k,d}: symmetric idempotent matrix of trace k.
class Projector {
public:
  /// Validates ||P*P - P||_F and |trace(P) - k| against eps_proj(d).
  Projector(SymMatrix matrix, int rank);

  int dim() const { return matrix_.dim(); }
  int rank() const { return rank_; }
  const Eigen::MatrixXd& mat() const { return matrix_.mat(); }
  const SymMatrix& sym() const { return matrix_; }

private:
  SymMatrix matrix_;
  int rank_ = 0;
};

/// k x d matrix with orthonormal rows; Q^T Q factorizes a projector.
class StiefelFrame {
public:
  /// Validates ||Q Q^T - I_k||_F against eps_proj(d).
  explicit StiefelFrame(Eigen::MatrixXd rows);

  int rank() const { return static_cast<int>(q_.rows()); }
  int dim() const { return static_cast<int>(q_.cols()); }
  const Eigen::MatrixXd& mat() const { return q_; }

private:
  Eigen::MatrixXd q_;
};

/// Haar-uniform projector: P = U U^T for U the thin-QR factor of a d x k
/// standard Gaussian matrix. Exactly orthogonally invariant.
Projector sample_uniform(int d, int k, Rng& rng);

/// Frobenius distance ||P - R||_F between projectors of the same dimension.
double chordal_distance(const Projector& p, const Projector& r);

Projector stiefel_to_projector(const StiefelFrame& q);

/// Any Q with Q^T Q = P (eigenvectors of eigenvalue ~1). Unique only up to a
/// left orthogonal factor; callers must not rely on the representative.
StiefelFrame projector_to_stiefel(const Projector& p);

struct GrassmannProjection {
  Projector projector;
  bool degenerate_spectrum;  // eigenvalues k and k+1 tied; broken deterministically
  double spectral_gap;
};

/// Nearest rank-k projector in Frobenius norm: U U^T over the k leading
/// eigenvectors of a. Ties resolved by eigenvalue sort then sign convention
/// (first nonzero eigenvector component positive), and flagged.
GrassmannProjection project_to_grassmannian(const SymMatrix& a, int k);

}  // namespace grasscub
