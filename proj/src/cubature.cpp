#include "grasscub/cubature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "grasscub/errors.hpp"
#include "grasscub/zonal.hpp"

namespace grasscub {

void WeightedCubature::validate() const {
  if (static_cast<int>(points.size()) != weights.size() || points.empty())
    throw ValidationError("WeightedCubature: points/weights length mismatch");
  for (const Projector& p : points)
    if (p.dim() != d || p.rank() != k)
      throw ValidationError("WeightedCubature: point shape mismatch");
  if (std::abs(weights.sum() - 1.0) > 1e-12)
    throw ValidationError("WeightedCubature: weights must sum to 1");
  if (certificate_residual < -eps_cert(static_cast<int>(points.size())))
    throw ValidationError(
        "WeightedCubature: materially negative certificate residual " +
        std::to_string(certificate_residual));
}

double ffp(const std::vector<Projector>& points, const Eigen::VectorXd& weights, int t) {
  const int n = static_cast<int>(points.size());
  if (n == 0 || weights.size() != n)
    throw ParameterError("ffp: points/weights length mismatch");
  if (t < 1) throw ParameterError("ffp: degree must be >= 1");
  const int d = points[0].dim();
  for (const Projector& p : points)
    if (p.dim() != d) throw ParameterError("ffp: dimension mismatch");

  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    sum += weights(i) * weights(i) *
           std::pow(points[static_cast<std::size_t>(i)].mat().squaredNorm(), t);
    for (int j = i + 1; j < n; ++j) {
      // trace(P_i P_j) = <P_i, P_j>_F for symmetric matrices.
      const double tr = points[static_cast<std::size_t>(i)]
                            .mat()
                            .cwiseProduct(points[static_cast<std::size_t>(j)].mat())
                            .sum();
      sum += 2.0 * weights(i) * weights(j) * std::pow(tr, t);
    }
  }
  return sum;
}

namespace {

double ffp_frames(const std::vector<Eigen::MatrixXd>& q, const Eigen::VectorXd& w, int t) {
  const int n = static_cast<int>(q.size());
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto& qi = q[static_cast<std::size_t>(i)];
    sum += w(i) * w(i) * std::pow((qi * qi.transpose()).squaredNorm(), t);
    for (int j = i + 1; j < n; ++j) {
      const double tr = (qi * q[static_cast<std::size_t>(j)].transpose()).squaredNorm();
      sum += 2.0 * w(i) * w(j) * std::pow(tr, t);
    }
  }
  return sum;
}

std::vector<Eigen::MatrixXd> gradient_frames(const std::vector<Eigen::MatrixXd>& q,
                                             const Eigen::VectorXd& w, int t) {
  const int n = static_cast<int>(q.size());
  const auto k = q[0].rows();
  const auto d = q[0].cols();
  std::vector<Eigen::MatrixXd> grad(static_cast<std::size_t>(n),
                                    Eigen::MatrixXd::Zero(k, d));
  Eigen::MatrixXd m(k, k);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      m.noalias() = q[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j)].transpose();
      const double tr = m.squaredNorm();
      const double c = (t == 1) ? 1.0 : std::pow(tr, t - 1);
      // Q_i P_j = (Q_i Q_j^T) Q_j.
      grad[static_cast<std::size_t>(i)].noalias() +=
          (4.0 * t * w(i) * w(j) * c) * (m * q[static_cast<std::size_t>(j)]);
      if (j != i)
        grad[static_cast<std::size_t>(j)].noalias() +=
            (4.0 * t * w(j) * w(i) * c) * (m.transpose() * q[static_cast<std::size_t>(i)]);
    }
  }
  return grad;
}

// Riemannian gradient: G - sym(G Q^T) Q for the embedded metric on frames
// with orthonormal rows.
Eigen::MatrixXd tangent_project(const Eigen::MatrixXd& g, const Eigen::MatrixXd& q) {
  const Eigen::MatrixXd a = g * q.transpose();
  return g - 0.5 * (a + a.transpose()) * q;
}

// Two-pass modified Gram-Schmidt on the rows; the QR retraction with positive
// diagonal. Returns false when the rows are numerically dependent.
bool orthonormalize_rows(Eigen::MatrixXd& m) {
  const auto k = m.rows();
  for (Eigen::Index r = 0; r < k; ++r) {
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index p = 0; p < r; ++p)
        m.row(r) -= m.row(r).dot(m.row(p)) * m.row(p);
    const double norm = m.row(r).norm();
    if (norm < 1e-13) return false;
    m.row(r) /= norm;
  }
  return true;
}

Eigen::MatrixXd random_frame(int k, int d, Rng& rng) {
  Eigen::MatrixXd q(k, d);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < d; ++j) q(i, j) = rng.normal();
  while (!orthonormalize_rows(q)) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < d; ++j) q(i, j) = rng.normal();
  }
  return q;
}

struct DescentState {
  std::vector<Eigen::MatrixXd> q;
  double value = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

void descend(DescentState& st, const Eigen::VectorXd& w, int t,
             const MinimizeOptions& opts) {
  const int n = static_cast<int>(st.q.size());
  double f = ffp_frames(st.q, w, t);
  std::vector<Eigen::MatrixXd> trial(st.q.size());
  while (st.iterations < opts.max_iter) {
    const auto grads = gradient_frames(st.q, w, t);
    double g2 = 0.0;
    std::vector<Eigen::MatrixXd> xi(st.q.size());
    for (int i = 0; i < n; ++i) {
      xi[static_cast<std::size_t>(i)] =
          tangent_project(grads[static_cast<std::size_t>(i)], st.q[static_cast<std::size_t>(i)]);
      g2 += xi[static_cast<std::size_t>(i)].squaredNorm();
    }
    st.grad_norm = std::sqrt(g2);
    if (st.grad_norm <= opts.g_tol) {
      st.converged = true;
      break;
    }

    double alpha = opts.armijo_init;
    bool accepted = false;
    while (alpha > 1e-18) {
      bool valid = true;
      for (int i = 0; i < n && valid; ++i) {
        trial[static_cast<std::size_t>(i)] =
            st.q[static_cast<std::size_t>(i)] - alpha * xi[static_cast<std::size_t>(i)];
        valid = orthonormalize_rows(trial[static_cast<std::size_t>(i)]);
      }
      if (valid) {
        const double f_trial = ffp_frames(trial, w, t);
        if (f_trial <= f - opts.armijo_slope * alpha * g2) {
          st.q.swap(trial);
          f = f_trial;
          accepted = true;
          break;
        }
      }
      alpha *= opts.armijo_shrink;
    }
    ++st.iterations;
    if (!accepted) {
      // No step length resolves a decrease: the iterate is stationary at the
      // precision of the arithmetic. Count that as convergence when the
      // gradient is also at round-off scale (the potential only resolves
      // position to ~sqrt(eps), so gradients bottom out near 1e-8, not g_tol).
      if (st.grad_norm <= 1e-7 * (1.0 + std::abs(f))) st.converged = true;
      break;
    }
  }
  st.value = f;
}

}  // namespace

std::vector<Eigen::MatrixXd> ffp_gradient(const std::vector<StiefelFrame>& frames,
                                          const Eigen::VectorXd& weights, int t) {
  const int n = static_cast<int>(frames.size());
  if (n == 0 || weights.size() != n)
    throw ParameterError("ffp_gradient: frames/weights length mismatch");
  if (t < 1) throw ParameterError("ffp_gradient: degree must be >= 1");
  std::vector<Eigen::MatrixXd> q;
  q.reserve(frames.size());
  for (const StiefelFrame& frame : frames) q.push_back(frame.mat());
  return gradient_frames(q, weights, t);
}

WeightedCubature minimize_ffp(int n, int k, int d, int t, const MinimizeOptions& opts,
                              Rng& rng) {
  if (n < 1) throw ParameterError("minimize_ffp: need at least one point");
  if (d < 2 || k < 1 || k > d - 1 || t < 1)
    throw ParameterError("minimize_ffp: invalid (k,d,t)");

  const Eigen::VectorXd uniform_w = Eigen::VectorXd::Constant(n, 1.0 / n);
  const double bound = ffp_lower_bound(t, k, d);

  DescentState best;
  best.value = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_w = uniform_w;
  const int restarts = std::max(1, opts.restarts);
  for (int r = 0; r < restarts; ++r) {
    Rng run_rng = rng.fork(static_cast<std::uint64_t>(r));
    DescentState st;
    st.q.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) st.q.push_back(random_frame(k, d, run_rng));

    Eigen::VectorXd w = uniform_w;
    descend(st, w, t, opts);
    for (int round = 0; round < opts.weight_rounds; ++round) {
      std::vector<Projector> pts;
      pts.reserve(st.q.size());
      for (const auto& q : st.q)
        pts.emplace_back(SymMatrix::from_full(q.transpose() * q), k);
      w = solve_weights(pts, t).weights;
      st.converged = false;
      descend(st, w, t, opts);
    }

    if (st.value < best.value) {
      best = std::move(st);
      best_w = w;
    }
  }

  WeightedCubature out;
  out.d = d;
  out.k = k;
  out.degree = t;
  out.points.reserve(best.q.size());
  for (const auto& q : best.q)
    out.points.emplace_back(SymMatrix::from_full(q.transpose() * q), k);
  out.weights = best_w;
  out.certificate_residual = ffp(out.points, out.weights, t) - bound;
  out.metadata.seed = rng.seed();
  out.metadata.iterations = best.iterations;
  out.metadata.grad_norm = best.grad_norm;
  out.metadata.converged = best.converged;
  out.metadata.restarts = restarts;
  return out;
}

Certificate certify_cubature(const WeightedCubature& c, int t, double tol) {
  if (std::abs(c.weights.sum() - 1.0) > 1e-12)
    throw ParameterError("certify_cubature: weights must sum to 1");
  const double residual = ffp(c.points, c.weights, t) - ffp_lower_bound(t, c.k, c.d);
  return Certificate{residual, residual <= tol};
}

WeightSolution solve_weights(const std::vector<Projector>& points, int t) {
  const int n = static_cast<int>(points.size());
  if (n < 1) throw ParameterError("solve_weights: need at least one point");
  if (t < 1) throw ParameterError("solve_weights: degree must be >= 1");
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double tr = points[static_cast<std::size_t>(i)]
                            .mat()
                            .cwiseProduct(points[static_cast<std::size_t>(j)].mat())
                            .sum();
      m(i, j) = m(j, i) = std::pow(tr, t);
    }

  // Minimize w^T M w over the affine slice sum(w) = 1. M is PSD (Hadamard
  // power of a Gram matrix), so the solution is w = M^+ 1 normalized, except
  // when 1 meets the null space, where any null direction attains zero.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
  const Eigen::VectorXd& vals = eig.eigenvalues();
  const double thresh = std::max(1e-300, vals(n - 1) * n * 1e-14);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);

  bool deficient = false;
  Eigen::VectorXd null_component = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd pinv_applied = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd u = eig.eigenvectors().col(i);
    const double coord = u.dot(ones);
    if (vals(i) <= thresh) {
      deficient = true;
      null_component += coord * u;
    } else {
      pinv_applied += (coord / vals(i)) * u;
    }
  }

  Eigen::VectorXd w;
  if (deficient && null_component.norm() > 1e-10) {
    w = null_component / null_component.sum();
  } else {
    w = pinv_applied / pinv_applied.sum();
  }
  return WeightSolution{std::move(w), deficient};
}

}  // namespace grasscub
