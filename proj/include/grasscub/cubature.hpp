#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "grasscub/grassmann.hpp"
#include "grasscub/rng.hpp"

namespace grasscub {

/// Certification tolerance: the bound is exact mathematics, the tolerance only
/// absorbs floating-point accumulation over the n^2 pair sum.
inline double eps_cert(int n) { return 1e-8 + 1e-14 * static_cast<double>(n) * n; }

struct CubatureMetadata {
  std::uint64_t seed = 0;
  int iterations = 0;
  double grad_norm = 0.0;
  bool converged = true;
  int restarts = 1;
};

/// Weighted point set on G_{k,d} with its equality-certificate residual.
struct WeightedCubature {
  int d = 0;
  int k = 0;
  int degree = 0;
  std::vector<Projector> points;
  Eigen::VectorXd weights;
  double certificate_residual = 0.0;
  CubatureMetadata metadata;

  /// Checks sum(weights)=1 to 1e-12, matching point shapes, and
  /// certificate_residual >= -eps_cert(n). Throws ValidationError.
  void validate() const;
};

/// t-fusion frame potential sum_{i,j} w_i w_j trace(P_i P_j)^t.
double ffp(const std::vector<Projector>& points, const Eigen::VectorXd& weights, int t);

/// Euclidean gradient of the potential with respect to each frame:
/// G_i = 4 t w_i sum_j w_j trace(P_i P_j)^{t-1} Q_i P_j (j = i included).
/// The optimizer projects to the tangent space afterwards.
std::vector<Eigen::MatrixXd> ffp_gradient(const std::vector<StiefelFrame>& frames,
                                          const Eigen::VectorXd& weights, int t);

struct MinimizeOptions {
  int max_iter = 100000;
  double g_tol = 1e-10;
  double armijo_init = 1.0;
  double armijo_shrink = 0.5;
  double armijo_slope = 1e-4;
  int restarts = 5;
  /// Rounds of alternation with solve_weights after point descent (0 = keep
  /// the constant weights 1/n throughout).
  int weight_rounds = 0;
};

/// Riemannian gradient descent on (V_{k,d})^n for the t-fusion frame
/// potential with weights 1/n: tangent projection, Armijo backtracking,
/// QR-based retraction. Non-convergence is reported in metadata, not thrown.
WeightedCubature minimize_ffp(int n, int k, int d, int t, const MinimizeOptions& opts,
                              Rng& rng);

struct Certificate {
  double residual;
  bool certified;
};

/// residual = FFP - B(t,k,d); certified iff residual <= tol. A certificate at
/// degree t implies one at every lower degree.
Certificate certify_cubature(const WeightedCubature& c, int t, double tol);

struct WeightSolution {
  Eigen::VectorXd weights;
  bool rank_deficient;
};

/// Minimizes w^T M w with M_ij = trace(P_i P_j)^t subject to sum(w) = 1.
/// Weights may come out negative; the caller decides whether to accept.
WeightSolution solve_weights(const std::vector<Projector>& points, int t);

}  // namespace grasscub
