#pragma once

#include <functional>
#include <string>
#include <vector>

#include "grasscub/cubature.hpp"

namespace grasscub {

using ProjectorFunction = std::function<double(const Projector&)>;

struct ErrorReport {
  int n_points = 0;
  int degree = 0;
  std::string func_id;
  double cubature_error = 0.0;
  double random_mean = 0.0;  // mean absolute error of the matched random baseline
  double random_std = 0.0;
  double reference = 0.0;
  double reference_err = 0.0;
};

struct CoveringEstimate {
  double rho_hat;         // max over probes of the distance to the nearest point
  Projector worst_probe;  // probe attaining rho_hat (before polish)
  double rho_polished;    // after gradient-free polish; equals rho_hat if none
};

/// Probe-sampling estimate of the covering radius; underestimates the true
/// value. polish_steps > 0 runs a local gradient-free ascent from the worst
/// probe.
CoveringEstimate covering_radius_estimate(const std::vector<Projector>& points,
                                          int n_probe, Rng& rng, int polish_steps = 0);

/// max over probes of the distance to the nearest point (the deterministic
/// core of the estimate, exposed for explicit probe sets).
double covering_radius_against(const std::vector<Projector>& points,
                               const std::vector<Projector>& probes);

/// sum_j w_j f(P_j).
double integrate_with_cubature(const WeightedCubature& c, const ProjectorFunction& f);

struct RandomBaseline {
  double mean_abs_error;
  double std_abs_error;
};

/// Monte Carlo integration of f with n i.i.d. uniform points, repeated over
/// independent trials; reports the mean/std of the absolute error.
RandomBaseline random_integration_baseline(int d, int k, int n, const ProjectorFunction& f,
                                           double reference, int trials, Rng& rng);

/// Per cubature: |cubature value - reference|; per matched point count: the
/// random baseline over >= trials trials.
std::vector<ErrorReport> integration_error_experiment(
    const std::vector<WeightedCubature>& family, const ProjectorFunction& f,
    const std::string& func_id, double reference, double reference_err, int trials,
    Rng& rng);

struct SlopeFit {
  double slope;
  double intercept;
};

/// Least-squares slope of log rho_hat against log n over the family, probes
/// drawn from one shared stream so members see common random numbers.
/// Requires >= 3 members.
SlopeFit covering_rate_experiment(const std::vector<WeightedCubature>& family, int n_probe,
                                  Rng& rng);

SlopeFit fit_log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace grasscub
