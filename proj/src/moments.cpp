#include "grasscub/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "grasscub/combinatorics.hpp"
#include "grasscub/errors.hpp"

namespace grasscub {

namespace {

double pow_int(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

SparseMeasure1D::SparseMeasure1D(std::vector<double> nodes_, std::vector<double> weights_)
    : nodes(std::move(nodes_)), weights(std::move(weights_)) {
  if (nodes.size() != weights.size() || nodes.empty())
    throw ParameterError("SparseMeasure1D: nodes/weights length mismatch");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i] == nodes[j])
        throw ValidationError("SparseMeasure1D: nodes must be pairwise distinct");
}

std::vector<double> SparseMeasure1D::moments(int order) const {
  std::vector<double> out(static_cast<std::size_t>(order), 0.0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    double power = 1.0;
    for (int lambda = 0; lambda < order; ++lambda) {
      out[static_cast<std::size_t>(lambda)] += weights[i] * power;
      power *= nodes[i];
    }
  }
  return out;
}

PronyResult prony_recover_1d(const std::vector<double>& moments, int m) {
  if (m < 1) throw ParameterError("prony_recover_1d: m must be >= 1");
  if (static_cast<int>(moments.size()) < 2 * m)
    throw ParameterError("prony_recover_1d: need 2m moments");

  Eigen::MatrixXd h(m, m);
  Eigen::VectorXd rhs(m);
  for (int lambda = 0; lambda < m; ++lambda) {
    for (int col = 0; col < m; ++col)
      h(lambda, col) = moments[static_cast<std::size_t>(col + lambda)];
    rhs(lambda) = -moments[static_cast<std::size_t>(m + lambda)];
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(h, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double sigma_max = svd.singularValues()(0);
  const double sigma_min = svd.singularValues()(m - 1);
  const double condition =
      sigma_min > 0 ? sigma_max / sigma_min : std::numeric_limits<double>::infinity();
  if (condition > 1e12)
    throw IllConditionedError(
        "prony_recover_1d: Hankel condition " + std::to_string(condition), condition);

  const Eigen::VectorXd p = svd.solve(rhs);

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i + 1 < m; ++i) companion(i + 1, i) = 1.0;
  companion.col(m - 1) = -p;

  Eigen::EigenSolver<Eigen::MatrixXd> eig(companion);
  double max_imag = 0.0;
  for (int i = 0; i < m; ++i)
    max_imag = std::max(max_imag, std::abs(eig.eigenvalues()(i).imag()));
  if (max_imag > 1e-6)
    throw SpuriousRootError(
        "prony_recover_1d: companion eigenvalue with imaginary part " +
            std::to_string(max_imag),
        max_imag);

  std::vector<double> nodes(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) nodes[static_cast<std::size_t>(i)] = eig.eigenvalues()(i).real();
  std::sort(nodes.begin(), nodes.end());

  // Weights from the Vandermonde system over all 2m supplied moments.
  Eigen::MatrixXd vand(2 * m, m);
  for (int i = 0; i < m; ++i) {
    double power = 1.0;
    for (int lambda = 0; lambda < 2 * m; ++lambda) {
      vand(lambda, i) = power;
      power *= nodes[static_cast<std::size_t>(i)];
    }
  }
  Eigen::VectorXd mom(2 * m);
  for (int lambda = 0; lambda < 2 * m; ++lambda)
    mom(lambda) = moments[static_cast<std::size_t>(lambda)];
  const Eigen::VectorXd a = vand.colPivHouseholderQr().solve(mom);

  double separation = std::numeric_limits<double>::infinity();
  for (int i = 0; i + 1 < m; ++i)
    separation = std::min(separation, nodes[static_cast<std::size_t>(i + 1)] -
                                          nodes[static_cast<std::size_t>(i)]);
  if (m == 1) separation = 0.0;

  SparseMeasure1D measure(nodes, std::vector<double>(a.data(), a.data() + m));
  return PronyResult{std::move(measure), PronyDiagnostics{separation, condition}};
}

FrameFamily::FrameFamily(int d, Eigen::MatrixXd rows,
                         std::optional<FrameProvenance> provenance)
    : d_(d), rows_(std::move(rows)), provenance_(std::move(provenance)) {
  if (d_ < 2 || rows_.cols() != d_ || rows_.rows() < 1)
    throw ParameterError("FrameFamily: bad shape");
  for (Eigen::Index j = 0; j < rows_.rows(); ++j)
    if (std::abs(rows_.row(j).norm() - 1.0) > 1e-12)
      throw ValidationError("FrameFamily: row " + std::to_string(j) + " is not unit norm");
}

FrameFamily build_minor_frame(int t, int d, const std::vector<double>& v,
                              const std::vector<int>& alpha) {
  if (t < 1 || d < 2) throw ParameterError("build_minor_frame: need t >= 1, d >= 2");
  if (static_cast<int>(v.size()) != d)
    throw ParameterError("build_minor_frame: v must have d entries");
  if (static_cast<int>(alpha.size()) != t + d - 1)
    throw ParameterError("build_minor_frame: alpha must have t+d-1 entries");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= 0.0) throw ParameterError("build_minor_frame: v must be positive");
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) throw ParameterError("build_minor_frame: duplicate v");
  }
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0) throw ParameterError("build_minor_frame: alpha must be nonnegative");
    for (std::size_t j = i + 1; j < alpha.size(); ++j)
      if (alpha[i] == alpha[j]) throw ParameterError("build_minor_frame: duplicate alpha");
  }

  const int rows_v = t + d - 1;
  Eigen::MatrixXd vmat(rows_v, d);
  for (int j = 0; j < rows_v; ++j)
    for (int i = 0; i < d; ++i)
      vmat(j, i) = pow_int(v[static_cast<std::size_t>(i)], alpha[static_cast<std::size_t>(j)]);

  const std::int64_t n = binomial_i64(rows_v, d - 1);
  Eigen::MatrixXd q(n, d);

  // Lexicographically ordered (d-1)-subsets of the rows of V.
  std::vector<int> subset(static_cast<std::size_t>(d - 1));
  for (int i = 0; i < d - 1; ++i) subset[static_cast<std::size_t>(i)] = i;
  Eigen::MatrixXd sub(d - 1, d - 1);
  for (std::int64_t row = 0;; ++row) {
    // Generalized cross product: component c is the cofactor-signed maximal
    // minor with column c deleted.
    for (int c = 0; c < d; ++c) {
      for (int r = 0; r < d - 1; ++r) {
        int cc = 0;
        for (int col = 0; col < d; ++col) {
          if (col == c) continue;
          sub(r, cc++) = vmat(subset[static_cast<std::size_t>(r)], col);
        }
      }
      const double det = (d == 2) ? sub(0, 0) : sub.determinant();
      q(row, c) = (c % 2 == 0 ? 1.0 : -1.0) * det;
    }
    const double norm = q.row(row).norm();
    if (norm == 0.0)
      throw ConsistencyError("build_minor_frame: zero minor row (distinct positive v "
                             "should prevent this)");
    q.row(row) /= norm;

    // Advance the combination.
    int i = d - 2;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == rows_v - (d - 1) + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d - 1; ++j)
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }

  return FrameFamily(d, std::move(q), FrameProvenance{v, alpha});
}

std::vector<double> default_minor_v(int d) {
  std::vector<double> v(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return v;
}

std::vector<int> default_minor_alpha(int t, int d) {
  std::vector<int> alpha(static_cast<std::size_t>(t + d - 1));
  for (int j = 0; j < t + d - 1; ++j) alpha[static_cast<std::size_t>(j)] = j;
  return alpha;
}

RankCheck frame_rank_check(const FrameFamily& frames, int t) {
  if (t < 0) throw ParameterError("frame_rank_check: negative degree");
  const int d = frames.dim();
  const int n = frames.size();
  const auto indices = multi_indices(d, t);
  const auto cols = static_cast<Eigen::Index>(indices.size());

  Eigen::MatrixXd m(n, cols);
  for (int j = 0; j < n; ++j) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& beta = indices[static_cast<std::size_t>(c)];
      double entry = std::sqrt(multinomial(t, beta));
      for (int i = 0; i < d; ++i)
        entry *= pow_int(frames.rows()(j, i), beta[static_cast<std::size_t>(i)]);
      m(j, c) = entry;
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (n < cols) return RankCheck{false, 0.0};
  const double sigma_min = sv(cols - 1);
  const double thresh =
      sv(0) * static_cast<double>(std::max<Eigen::Index>(n, cols)) * 1e-14;
  return RankCheck{sigma_min > thresh, sigma_min};
}

double DiscreteMeasure::moment(const std::vector<int>& r) const {
  if (static_cast<Eigen::Index>(r.size()) != atoms.cols())
    throw ParameterError("DiscreteMeasure::moment: index length mismatch");
  double sum = 0.0;
  for (Eigen::Index a = 0; a < atoms.rows(); ++a) {
    double term = weights(a);
    for (Eigen::Index i = 0; i < atoms.cols(); ++i)
      term *= pow_int(atoms(a, i), r[static_cast<std::size_t>(i)]);
    sum += term;
  }
  return sum;
}

ProjectedMoments project_moments(const FrameFamily& frames, const DiscreteMeasure& mu,
                                 int t) {
  if (t < 0) throw ParameterError("project_moments: negative degree");
  if (mu.atoms.cols() != frames.dim() || mu.atoms.rows() != mu.weights.size())
    throw ParameterError("project_moments: measure shape mismatch");
  const int n = frames.size();
  ProjectedMoments out;
  out.degree = t;
  out.values = ProjectedMoments::Matrix::Zero(n, t + 1);
  out.std_error = Eigen::MatrixXd::Zero(n, t + 1);
  out.exact = true;

  using LongMatrix = ProjectedMoments::Matrix;
  const LongMatrix projected =
      mu.atoms.cast<long double>() * frames.rows().transpose().cast<long double>();
  for (int j = 0; j < n; ++j) {
    for (Eigen::Index a = 0; a < mu.atoms.rows(); ++a) {
      long double power = 1.0L;
      for (int s = 0; s <= t; ++s) {
        out.values(j, s) += static_cast<long double>(mu.weights(a)) * power;
        power *= projected(a, j);
      }
    }
  }
  return out;
}

ProjectedMoments project_moments_sampled(const FrameFamily& frames,
                                         const std::function<Eigen::VectorXd(Rng&)>& sampler,
                                         int t, int n_samples, Rng& rng) {
  if (t < 0 || n_samples < 2)
    throw ParameterError("project_moments_sampled: need t >= 0 and n_samples >= 2");
  const int n = frames.size();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, t + 1);
  Eigen::MatrixXd sum_sq = Eigen::MatrixXd::Zero(n, t + 1);
  for (int s = 0; s < n_samples; ++s) {
    const Eigen::VectorXd x = sampler(rng);
    if (x.size() != frames.dim())
      throw ParameterError("project_moments_sampled: sample dimension mismatch");
    const Eigen::VectorXd y = frames.rows() * x;
    for (int j = 0; j < n; ++j) {
      double power = 1.0;
      for (int deg = 0; deg <= t; ++deg) {
        sum(j, deg) += power;
        sum_sq(j, deg) += power * power;
        power *= y(j);
      }
    }
  }
  ProjectedMoments out;
  out.degree = t;
  out.exact = false;
  const Eigen::MatrixXd mean = sum / n_samples;
  out.values = mean.cast<long double>();
  out.std_error =
      ((sum_sq / n_samples - mean.cwiseProduct(mean)).cwiseMax(0.0) / (n_samples - 1))
          .cwiseSqrt();
  return out;
}

double MomentTable::at(const std::vector<int>& r) const {
  const auto it = values.find(r);
  if (it == values.end()) throw ParameterError("MomentTable::at: index not present");
  return it->second;
}

MomentTable lift_moments(const FrameFamily& frames, const ProjectedMoments& projected,
                         int max_degree) {
  if (max_degree < 0) throw ParameterError("lift_moments: negative degree");
  if (max_degree > projected.degree)
    throw ParameterError("lift_moments: projected moments only reach degree " +
                         std::to_string(projected.degree));
  const int d = frames.dim();
  const int n = frames.size();
  if (projected.values.rows() != n)
    throw ParameterError("lift_moments: projected moments shape mismatch");

  MomentTable table;
  table.d = d;
  table.max_degree = max_degree;
  if (max_degree > d)
    table.warnings.push_back("degree " + std::to_string(max_degree) +
                             " exceeds ambient dimension " + std::to_string(d) +
                             "; the frame condition is the operative requirement");

  for (int deg = 0; deg <= max_degree; ++deg) {
    const auto indices = multi_indices(d, deg);
    const auto cols = static_cast<Eigen::Index>(indices.size());
    Eigen::MatrixXd a(n, cols);
    for (int j = 0; j < n; ++j)
      for (Eigen::Index c = 0; c < cols; ++c) {
        const auto& beta = indices[static_cast<std::size_t>(c)];
        double entry = multinomial(deg, beta);
        for (int i = 0; i < d; ++i)
          entry *= pow_int(frames.rows()(j, i), beta[static_cast<std::size_t>(i)]);
        a(j, c) = entry;
      }

    // The minor frames inherit Vandermonde-flavored conditioning (up to ~1e8
    // at d = t = 4), which double precision cannot solve to the promised
    // 1e-8. Equilibrate the columns and run the solve in extended precision.
    using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    using LongVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
    const LongMatrix al = a.cast<long double>();
    LongVector scale(cols);
    for (Eigen::Index c = 0; c < cols; ++c) scale(c) = al.col(c).norm();
    if (n < cols || scale.minCoeff() == 0.0L)
      throw UnderdeterminedError(
          "lift_moments: rank-deficient system at degree " + std::to_string(deg), deg);
    const LongMatrix ae = al * scale.cwiseInverse().asDiagonal();

    Eigen::JacobiSVD<LongMatrix> svd(ae, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const long double thresh =
        sv(0) * static_cast<long double>(std::max<Eigen::Index>(n, cols)) * 1e-14L;
    if (sv(cols - 1) <= thresh)
      throw UnderdeterminedError(
          "lift_moments: rank-deficient system at degree " + std::to_string(deg), deg);

    const LongVector rhs = projected.values.col(deg);
    const LongVector solution = scale.cwiseInverse().cwiseProduct(svd.solve(rhs));
    for (Eigen::Index c = 0; c < cols; ++c)
      table.values[indices[static_cast<std::size_t>(c)]] =
          static_cast<double>(solution(c));
  }
  return table;
}

JlReport jl_distortion(const std::vector<Eigen::VectorXd>& points, const Projector& p) {
  if (points.size() < 2) throw ParameterError("jl_distortion: need >= 2 points");
  const int d = p.dim();
  for (const auto& x : points)
    if (x.size() != d) throw ParameterError("jl_distortion: point dimension mismatch");

  const double scale = static_cast<double>(d) / p.rank();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  int skipped = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Eigen::VectorXd diff = points[i] - points[j];
      const double norm_sq = diff.squaredNorm();
      if (norm_sq == 0.0) {
        ++skipped;
        continue;
      }
      const double ratio = scale * (p.mat() * diff).squaredNorm() / norm_sq;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  if (!(lo <= hi))
    throw ParameterError("jl_distortion: all pairs were duplicates");
  return JlReport{lo, hi, skipped};
}

}  // namespace grasscub
