#pragma once

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grasscub/grassmann.hpp"
#include "grasscub/rng.hpp"

namespace grasscub {

/// Finitely supported measure on the line: pairwise-distinct nodes x_i with
/// weights a_i.
struct SparseMeasure1D {
  SparseMeasure1D(std::vector<double> nodes, std::vector<double> weights);

  std::vector<double> nodes;
  std::vector<double> weights;

  /// Power moments m(0), ..., m(order-1).
  std::vector<double> moments(int order) const;
};

struct PronyDiagnostics {
  double min_separation = 0.0;  // recovered nu_hat
  double hankel_condition = 0.0;
};

struct PronyResult {
  SparseMeasure1D measure;
  PronyDiagnostics diagnostics;
};

/// Recovers an m-atom measure from its first 2m power moments: Hankel solve
/// for the Prony polynomial, companion-matrix eigenvalues for the nodes,
/// Vandermonde least squares for the weights.
///
/// Throws IllConditionedError when cond(H) > 1e12 and SpuriousRootError when a
/// companion eigenvalue has |imag| > 1e-6.
PronyResult prony_recover_1d(const std::vector<double>& moments, int m);

struct FrameProvenance {
  std::vector<double> v;
  std::vector<int> alpha;
};

/// Family of unit row vectors Q_j in R^{1 x d} used as projection directions.
class FrameFamily {
public:
  FrameFamily(int d, Eigen::MatrixXd rows,
              std::optional<FrameProvenance> provenance = std::nullopt);

  int dim() const { return d_; }
  int size() const { return static_cast<int>(rows_.rows()); }
  const Eigen::MatrixXd& rows() const { return rows_; }
  Eigen::RowVectorXd row(int j) const { return rows_.row(j); }
  const std::optional<FrameProvenance>& provenance() const { return provenance_; }

private:
  int d_;
  Eigen::MatrixXd rows_;  // n x d, unit rows
  std::optional<FrameProvenance> provenance_;
};

/// Vandermonde-minor construction: V = (v_i^{alpha_j}) of shape (t+d-1) x d;
/// each (d-1)-subset of rows contributes the generalized cross product of its
/// submatrix (signed maximal minors, cofactor sign (-1)^{c+1} for deleted
/// column c), normalized to unit length. n = binom(t+d-1, d-1) rows.
FrameFamily build_minor_frame(int t, int d, const std::vector<double>& v,
                              const std::vector<int>& alpha);

/// Default parameters v_i = i and alpha_j = j-1. Conditioning depends strongly
/// on these; the CLI exposes both.
std::vector<double> default_minor_v(int d);
std::vector<int> default_minor_alpha(int t, int d);

struct RankCheck {
  bool full_rank;
  double sigma_min;
};

/// Checks that {(Q_j x)^t} spans Hom_t(R^d): SVD of the n x binom(t+d-1,d-1)
/// matrix with rows binom(t,alpha)^{1/2} Q_j^alpha. The scaling makes the Gram
/// matrix equal ((Q_i Q_j^T)^t), the apolar inner product.
RankCheck frame_rank_check(const FrameFamily& frames, int t);

/// Discrete measure in R^d given by explicit atoms (rows) and weights.
struct DiscreteMeasure {
  Eigen::MatrixXd atoms;  // n_atoms x d
  Eigen::VectorXd weights;

  /// E[X^r] for a multi-index r.
  double moment(const std::vector<int>& r) const;
};

/// Per-frame projected moments values(j, s) = E[(Q_j X)^s] for s = 0..degree.
/// Values are kept in extended precision: the lifting systems amplify any
/// rounding of these entries by the frame condition number (up to ~1e8 for
/// the default minor frames at d = t = 4).
struct ProjectedMoments {
  using Scalar = long double;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  int degree = 0;
  Matrix values;
  Eigen::MatrixXd std_error;  // zero when exact
  bool exact = true;
};

/// Exact projected moments of an explicit discrete measure.
ProjectedMoments project_moments(const FrameFamily& frames, const DiscreteMeasure& mu,
                                 int t);

/// Monte Carlo projected moments of a sampler, with per-entry standard errors.
ProjectedMoments project_moments_sampled(const FrameFamily& frames,
                                         const std::function<Eigen::VectorXd(Rng&)>& sampler,
                                         int t, int n_samples, Rng& rng);

/// All monomial moments E[X^r], |r| <= max_degree, keyed by multi-index.
struct MomentTable {
  int d = 0;
  int max_degree = 0;
  std::map<std::vector<int>, double> values;
  std::vector<std::string> warnings;

  double at(const std::vector<int>& r) const;
};

/// Recovers monomial moments degree by degree: solves the least-squares system
/// A m = v with A_{j,beta} = multinomial(t', beta) Q_j^beta against the
/// projected moments. Throws UnderdeterminedError naming the first degree
/// whose system is rank deficient.
MomentTable lift_moments(const FrameFamily& frames, const ProjectedMoments& projected,
                         int max_degree);

struct JlReport {
  double min_ratio;
  double max_ratio;
  int skipped_pairs;  // duplicate points skipped
};

/// Extremes over pairs of (d/k) ||P(x_i - x_j)||^2 / ||x_i - x_j||^2.
JlReport jl_distortion(const std::vector<Eigen::VectorXd>& points, const Projector& p);

}  // namespace grasscub
