#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "grasscub/cubature.hpp"
#include "grasscub/grassmann.hpp"

namespace grasscub {

/// Magnitude measurements b_j = ||P_j x||^2, optionally with the known norm
/// ||x||^2 (the trace constraint; the identity is kept separate from the
/// rank-k projector list).
struct MeasurementSet {
  int d = 0;
  int k = 0;
  std::vector<Projector> projectors;
  Eigen::VectorXd values;
  bool norm_known = false;
  double norm_value = 0.0;
};

MeasurementSet measure(const Eigen::VectorXd& x, const std::vector<Projector>& projectors,
                       bool with_norm = false);

struct AlphaBeta {
  double alpha;
  double beta;
};

/// Second-moment constants of G_{k,d}: alpha = 2k(d-k) / (d(d+2)(d-1)),
/// beta = k(kd+k-2) / (d(d+2)(d-1)). Requires d >= 2, 1 <= k <= d-1.
AlphaBeta alpha_beta(int k, int d);

struct ClosedFormResult {
  SymMatrix candidate;
  bool cubature_warning;      // set when the weighted set fails certification at t=2
  double cubature_residual;   // FFP(2) - B(2,k,d) of the supplied set
};

/// Closed-form reconstruction of x x^T from a degree-2 cubature:
///   x x^T = (1/alpha) sum_j w_j b_j P_j - (beta/alpha) (d/k) (sum_j w_j b_j) I_d,
/// where (d/k) sum_j w_j b_j recovers ||x||^2. Exact for every x when the
/// cubature is exact on Hom_2(G_{k,d}).
ClosedFormResult reconstruct_closed_form(const MeasurementSet& ms,
                                         const Eigen::VectorXd& weights);

struct RankOneExtract {
  Eigen::VectorXd x;  // sqrt(lambda_1) u_1, largest-magnitude entry positive
  double residual;    // ||A - x x^T||_F / max(||A||_F, eps)
};

RankOneExtract rank_one_extract(const SymMatrix& a);

struct PocsOptions {
  double tol = 1e-7;
  int max_iter = 50000;
  bool record_trace = false;  // per-cycle squared distances to the two sets
};

struct PocsResult {
  SymMatrix a;
  bool converged = false;
  int iterations = 0;
  bool redundant_constraints = false;
  std::vector<std::pair<double, double>> trace;  // (dist^2 affine, dist^2 PSD)
};

/// Alternating projections between the PSD cone (eigenvalue clamp) and the
/// affine set {A : trace(P_j A) = b_j} (least-norm correction through the
/// Gram matrix of the constraints, factorized once; pseudo-inverse when the
/// constraints are redundant).
PocsResult feasibility_pocs(const MeasurementSet& ms, const PocsOptions& opts = {});

/// n i.i.d. draws from the discrete measure sum_j w_j delta_{P_j}. Requires
/// nonnegative weights.
std::vector<Projector> sample_from_cubature_measure(const WeightedCubature& c, int n,
                                                    Rng& rng);

enum class ProjectorSource { haar, cubature };

struct SweepRow {
  int d = 0;
  int k = 0;
  int n = 0;
  std::string source;
  int trials = 0;
  double success_rate = 0.0;
  double mean_iterations = 0.0;
};

/// Fraction of trials where feasibility_pocs + rank_one_extract recovers a
/// random unit x to relative error <= 1e-4 (modulo sign). source == cubature
/// draws the projectors from the supplied cubature's measure.
SweepRow success_experiment(int d, int k, int n, ProjectorSource source,
                            const WeightedCubature* cubature, int trials, Rng& rng,
                            const PocsOptions& opts = {}, bool with_norm = true);

}  // namespace grasscub
