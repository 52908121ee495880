#include "grasscub/quality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "grasscub/errors.hpp"
#include "grasscub/parallel.hpp"

namespace grasscub {

namespace {

double min_distance(const Projector& probe, const std::vector<Projector>& points) {
  double best = std::numeric_limits<double>::infinity();
  for (const Projector& p : points)
    best = std::min(best, (probe.mat() - p.mat()).norm());
  return best;
}

}  // namespace

double covering_radius_against(const std::vector<Projector>& points,
                               const std::vector<Projector>& probes) {
  if (points.empty() || probes.empty())
    throw ParameterError("covering_radius_against: empty input");
  double rho = 0.0;
  for (const Projector& probe : probes) rho = std::max(rho, min_distance(probe, points));
  return rho;
}

CoveringEstimate covering_radius_estimate(const std::vector<Projector>& points,
                                          int n_probe, Rng& rng, int polish_steps) {
  if (points.empty())
    throw ParameterError("covering_radius_estimate: empty point set");
  if (n_probe < 1) throw ParameterError("covering_radius_estimate: need probes");
  const int d = points[0].dim();
  const int k = points[0].rank();

  double rho = -1.0;
  Projector worst = points[0];
  for (int i = 0; i < n_probe; ++i) {
    Projector probe = sample_uniform(d, k, rng);
    const double dist = min_distance(probe, points);
    if (dist > rho) {
      rho = dist;
      worst = std::move(probe);
    }
  }

  // Gradient-free polish: perturb the worst probe, keep ascents, shrink the
  // step on rejection.
  double polished = rho;
  if (polish_steps > 0) {
    Projector current = worst;
    double sigma = 0.5 * rho;
    for (int s = 0; s < polish_steps && sigma > 1e-12; ++s) {
      Eigen::MatrixXd noise(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
          const double v = rng.normal();
          noise(i, j) = v;
          noise(j, i) = v;
        }
      const SymMatrix candidate_sym =
          SymMatrix::from_full(current.mat() + sigma * noise);
      Projector candidate = project_to_grassmannian(candidate_sym, k).projector;
      const double dist = min_distance(candidate, points);
      if (dist > polished) {
        polished = dist;
        current = std::move(candidate);
      } else {
        sigma *= 0.9;
      }
    }
  }
  return CoveringEstimate{rho, std::move(worst), polished};
}

double integrate_with_cubature(const WeightedCubature& c, const ProjectorFunction& f) {
  double sum = 0.0;
  for (std::size_t j = 0; j < c.points.size(); ++j)
    sum += c.weights(static_cast<Eigen::Index>(j)) * f(c.points[j]);
  return sum;
}

RandomBaseline random_integration_baseline(int d, int k, int n, const ProjectorFunction& f,
                                           double reference, int trials, Rng& rng) {
  if (n < 1 || trials < 1)
    throw ParameterError("random_integration_baseline: need n, trials >= 1");
  // Trials run on independent forked streams; the chunk layout is fixed, so
  // results do not depend on the worker count.
  const int n_chunks = 64;
  std::vector<double> chunk_sum(n_chunks, 0.0);
  std::vector<double> chunk_sum_sq(n_chunks, 0.0);
  const Rng base = rng;
  parallel_chunks(trials, n_chunks, [&](int chunk, std::int64_t begin, std::int64_t end) {
    for (std::int64_t trial = begin; trial < end; ++trial) {
      Rng trial_rng = base.fork(static_cast<std::uint64_t>(trial));
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += f(sample_uniform(d, k, trial_rng));
      const double err = std::abs(acc / n - reference);
      chunk_sum[static_cast<std::size_t>(chunk)] += err;
      chunk_sum_sq[static_cast<std::size_t>(chunk)] += err * err;
    }
  });
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int c = 0; c < n_chunks; ++c) {
    sum += chunk_sum[static_cast<std::size_t>(c)];
    sum_sq += chunk_sum_sq[static_cast<std::size_t>(c)];
  }
  const double mean = sum / trials;
  const double var = std::max(0.0, sum_sq / trials - mean * mean);
  return RandomBaseline{mean, std::sqrt(var)};
}

std::vector<ErrorReport> integration_error_experiment(
    const std::vector<WeightedCubature>& family, const ProjectorFunction& f,
    const std::string& func_id, double reference, double reference_err, int trials,
    Rng& rng) {
  std::vector<ErrorReport> reports;
  reports.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const WeightedCubature& c = family[i];
    ErrorReport report;
    report.n_points = static_cast<int>(c.points.size());
    report.degree = c.degree;
    report.func_id = func_id;
    report.reference = reference;
    report.reference_err = reference_err;
    report.cubature_error = std::abs(integrate_with_cubature(c, f) - reference);
    Rng member_rng = rng.fork(i);
    const RandomBaseline baseline = random_integration_baseline(
        c.d, c.k, report.n_points, f, reference, trials, member_rng);
    report.random_mean = baseline.mean_abs_error;
    report.random_std = baseline.std_abs_error;
    reports.push_back(std::move(report));
  }
  return reports;
}

SlopeFit fit_log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ParameterError("fit_log_log_slope: need >= 2 matched samples");
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return SlopeFit{slope, (sy - slope * sx) / n};
}

SlopeFit covering_rate_experiment(const std::vector<WeightedCubature>& family, int n_probe,
                                  Rng& rng) {
  if (family.size() < 3)
    throw ParameterError("covering_rate_experiment: need >= 3 family members");
  std::vector<double> ns;
  std::vector<double> rhos;
  for (const WeightedCubature& c : family) {
    // Same fork for every member: common random numbers across the family.
    Rng probe_rng = rng.fork(0);
    ns.push_back(static_cast<double>(c.points.size()));
    rhos.push_back(covering_radius_estimate(c.points, n_probe, probe_rng).rho_hat);
  }
  return fit_log_log_slope(ns, rhos);
}

}  // namespace grasscub
