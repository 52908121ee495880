#include "grasscub/phase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "grasscub/errors.hpp"
#include "grasscub/parallel.hpp"
#include "grasscub/zonal.hpp"

namespace grasscub {

MeasurementSet measure(const Eigen::VectorXd& x, const std::vector<Projector>& projectors,
                       bool with_norm) {
  if (projectors.empty()) throw ParameterError("measure: need at least one projector");
  const int d = projectors[0].dim();
  const int k = projectors[0].rank();
  if (x.size() != d) throw ParameterError("measure: vector dimension mismatch");
  MeasurementSet ms;
  ms.d = d;
  ms.k = k;
  ms.projectors = projectors;
  ms.values.resize(static_cast<Eigen::Index>(projectors.size()));
  for (std::size_t j = 0; j < projectors.size(); ++j) {
    if (projectors[j].dim() != d || projectors[j].rank() != k)
      throw ParameterError("measure: projector shape mismatch");
    ms.values(static_cast<Eigen::Index>(j)) = x.dot(projectors[j].mat() * x);
  }
  ms.norm_known = with_norm;
  ms.norm_value = with_norm ? x.squaredNorm() : 0.0;
  return ms;
}

AlphaBeta alpha_beta(int k, int d) {
  if (d < 2) throw ParameterError("alpha_beta: d must be >= 2");
  if (k < 1 || k > d - 1) throw ParameterError("alpha_beta: need 1 <= k <= d-1");
  const double denom = static_cast<double>(d) * (d + 2) * (d - 1);
  return AlphaBeta{2.0 * k * (d - k) / denom,
                   static_cast<double>(k) * (static_cast<double>(k) * d + k - 2) / denom};
}

ClosedFormResult reconstruct_closed_form(const MeasurementSet& ms,
                                         const Eigen::VectorXd& weights) {
  const auto n = static_cast<Eigen::Index>(ms.projectors.size());
  if (weights.size() != n || n == 0)
    throw ParameterError("reconstruct_closed_form: weights length mismatch");
  const int d = ms.d;
  const int k = ms.k;
  const AlphaBeta ab = alpha_beta(k, d);

  double s1 = 0.0;
  Eigen::MatrixXd sp = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double wb = weights(j) * ms.values(j);
    s1 += wb;
    sp.noalias() += wb * ms.projectors[static_cast<std::size_t>(j)].mat();
  }
  // (d/k) sum_j w_j b_j recovers ||x||^2; the beta term removes the isotropic
  // part of the second moment.
  const double norm_sq = s1 * d / k;
  const Eigen::MatrixXd a = sp / ab.alpha -
                            (ab.beta / ab.alpha) * norm_sq *
                                Eigen::MatrixXd::Identity(d, d);

  double residual = 0.0;
  bool warn = false;
  {
    Eigen::VectorXd w = weights;
    const double wsum = w.sum();
    if (std::abs(wsum - 1.0) > 1e-12) {
      warn = true;
      residual = std::numeric_limits<double>::quiet_NaN();
    } else {
      residual = ffp(ms.projectors, w, 2) - ffp_lower_bound(2, k, d);
      warn = residual > eps_cert(static_cast<int>(n));
    }
  }
  return ClosedFormResult{SymMatrix::from_full(a), warn, residual};
}

RankOneExtract rank_one_extract(const SymMatrix& a) {
  const int d = a.dim();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a.mat());
  const double lambda = std::max(0.0, eig.eigenvalues()(d - 1));
  Eigen::VectorXd x = std::sqrt(lambda) * eig.eigenvectors().col(d - 1);

  // Global sign fixed by the largest-magnitude entry.
  Eigen::Index argmax = 0;
  x.cwiseAbs().maxCoeff(&argmax);
  if (x(argmax) < 0.0) x = -x;

  const double denom = std::max(a.mat().norm(), 1e-300);
  const double residual = (a.mat() - x * x.transpose()).norm() / denom;
  return RankOneExtract{std::move(x), residual};
}

PocsResult feasibility_pocs(const MeasurementSet& ms, const PocsOptions& opts) {
  const int d = ms.d;
  const auto n_proj = static_cast<Eigen::Index>(ms.projectors.size());
  const Eigen::Index m = n_proj + (ms.norm_known ? 1 : 0);
  if (m == 0) throw ParameterError("feasibility_pocs: no constraints");

  // Constraint functionals A -> trace(C_j A); C_j = P_j, plus I_d for the norm.
  std::vector<Eigen::MatrixXd> c;
  c.reserve(static_cast<std::size_t>(m));
  Eigen::VectorXd b(m);
  for (Eigen::Index j = 0; j < n_proj; ++j) {
    c.push_back(ms.projectors[static_cast<std::size_t>(j)].mat());
    b(j) = ms.values(j);
  }
  if (ms.norm_known) {
    c.push_back(Eigen::MatrixXd::Identity(d, d));
    b(m - 1) = ms.norm_value;
  }

  Eigen::MatrixXd gram(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i; j < m; ++j)
      gram(i, j) = gram(j, i) = c[static_cast<std::size_t>(i)]
                                    .cwiseProduct(c[static_cast<std::size_t>(j)])
                                    .sum();

  // Factorize once; fall back to an eigendecomposition pseudo-inverse when the
  // constraints are linearly dependent.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gram_eig(gram);
  const Eigen::VectorXd& evals = gram_eig.eigenvalues();
  const double thresh = std::max(1e-300, evals(m - 1) * m * 1e-13);
  const bool redundant = evals(0) <= thresh;
  Eigen::VectorXd inv_vals(m);
  for (Eigen::Index i = 0; i < m; ++i)
    inv_vals(i) = evals(i) > thresh ? 1.0 / evals(i) : 0.0;
  const auto solve_gram = [&](const Eigen::VectorXd& r) {
    return (gram_eig.eigenvectors() *
            inv_vals.cwiseProduct(gram_eig.eigenvectors().transpose() * r))
        .eval();
  };

  PocsResult result;
  result.redundant_constraints = redundant;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
  Eigen::VectorXd residuals(m);

  for (int iter = 1; iter <= opts.max_iter; ++iter) {
    // Affine step: least-norm correction onto {trace(C_j A) = b_j}.
    for (Eigen::Index j = 0; j < m; ++j)
      residuals(j) = c[static_cast<std::size_t>(j)].cwiseProduct(a).sum() - b(j);
    const Eigen::VectorXd coef = solve_gram(residuals);
    for (Eigen::Index j = 0; j < m; ++j)
      a.noalias() -= coef(j) * c[static_cast<std::size_t>(j)];
    const double dist_affine_sq = coef.dot(gram * coef);

    // PSD step: clamp negative eigenvalues.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
    double clamp_sq = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      const double v = eig.eigenvalues()(i);
      if (v < 0.0) clamp_sq += v * v;
    }
    a = eig.eigenvectors() * eig.eigenvalues().cwiseMax(0.0).asDiagonal() *
        eig.eigenvectors().transpose();
    a = 0.5 * (a + a.transpose().eval());

    if (opts.record_trace) result.trace.emplace_back(dist_affine_sq, clamp_sq);
    result.iterations = iter;

    for (Eigen::Index j = 0; j < m; ++j)
      residuals(j) = c[static_cast<std::size_t>(j)].cwiseProduct(a).sum() - b(j);
    if (std::sqrt(clamp_sq) <= opts.tol && residuals.norm() <= opts.tol) {
      result.converged = true;
      break;
    }
  }
  result.a = SymMatrix::from_full(a);
  return result;
}

std::vector<Projector> sample_from_cubature_measure(const WeightedCubature& c, int n,
                                                    Rng& rng) {
  if (n < 0) throw ParameterError("sample_from_cubature_measure: negative count");
  const auto size = static_cast<Eigen::Index>(c.points.size());
  if (size == 0) throw ParameterError("sample_from_cubature_measure: empty cubature");
  std::vector<double> cdf(static_cast<std::size_t>(size));
  double acc = 0.0;
  for (Eigen::Index j = 0; j < size; ++j) {
    if (c.weights(j) < 0.0)
      throw ParameterError("sample_from_cubature_measure: negative weight");
    acc += c.weights(j);
    cdf[static_cast<std::size_t>(j)] = acc;
  }
  std::vector<Projector> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform() * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto idx = std::min<std::size_t>(
        static_cast<std::size_t>(it - cdf.begin()), static_cast<std::size_t>(size - 1));
    out.push_back(c.points[idx]);
  }
  return out;
}

SweepRow success_experiment(int d, int k, int n, ProjectorSource source,
                            const WeightedCubature* cubature, int trials, Rng& rng,
                            const PocsOptions& opts, bool with_norm) {
  if (trials < 1) throw ParameterError("success_experiment: need trials >= 1");
  if (source == ProjectorSource::cubature && cubature == nullptr)
    throw ParameterError("success_experiment: cubature source without a cubature");

  // Trials are independent given their forked streams; fixed chunking keeps
  // the outcome identical for any worker count.
  const int n_chunks = 64;
  std::vector<int> chunk_successes(n_chunks, 0);
  std::vector<double> chunk_iterations(n_chunks, 0.0);
  const Rng base = rng;
  parallel_chunks(trials, n_chunks, [&](int chunk, std::int64_t begin, std::int64_t end) {
    for (std::int64_t trial = begin; trial < end; ++trial) {
      Rng trial_rng = base.fork(static_cast<std::uint64_t>(trial));
      Eigen::VectorXd x(d);
      for (int i = 0; i < d; ++i) x(i) = trial_rng.normal();
      x.normalize();

      std::vector<Projector> projectors;
      projectors.reserve(static_cast<std::size_t>(n));
      if (source == ProjectorSource::haar) {
        for (int j = 0; j < n; ++j) projectors.push_back(sample_uniform(d, k, trial_rng));
      } else {
        projectors = sample_from_cubature_measure(*cubature, n, trial_rng);
      }

      const MeasurementSet ms = measure(x, projectors, with_norm);
      const PocsResult pocs = feasibility_pocs(ms, opts);
      chunk_iterations[static_cast<std::size_t>(chunk)] += pocs.iterations;
      const RankOneExtract extract = rank_one_extract(pocs.a);
      const double err =
          std::min((extract.x - x).norm(), (extract.x + x).norm()) / x.norm();
      if (err <= 1e-4) ++chunk_successes[static_cast<std::size_t>(chunk)];
    }
  });
  int successes = 0;
  double iteration_sum = 0.0;
  for (int c = 0; c < n_chunks; ++c) {
    successes += chunk_successes[static_cast<std::size_t>(c)];
    iteration_sum += chunk_iterations[static_cast<std::size_t>(c)];
  }

  SweepRow row;
  row.d = d;
  row.k = k;
  row.n = n;
  row.source = source == ProjectorSource::haar ? "haar" : "cubature";
  row.trials = trials;
  row.success_rate = static_cast<double>(successes) / trials;
  row.mean_iterations = iteration_sum / trials;
  return row;
}

}  // namespace grasscub
