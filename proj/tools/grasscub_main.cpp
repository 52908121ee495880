#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "grasscub/combinatorics.hpp"
#include "grasscub/errors.hpp"
#include "grasscub/io.hpp"
#include "grasscub/parallel.hpp"
#include "grasscub/phase.hpp"
#include "grasscub/quality.hpp"
#include "grasscub/zonal.hpp"

namespace {

using namespace grasscub;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoConvergence = 2;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string field;
  std::stringstream ss(s);
  while (std::getline(ss, field, ',')) {
    if (!field.empty()) out.push_back(std::stoi(field));
  }
  if (out.empty()) throw ParameterError("empty integer list: '" + s + "'");
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::string field;
  std::stringstream ss(s);
  while (std::getline(ss, field, ',')) {
    if (!field.empty()) out.push_back(std::stod(field));
  }
  if (out.empty()) throw ParameterError("empty number list: '" + s + "'");
  return out;
}

/// Built-in test integrands on projectors; A = scale * diag(1..d)/d.
ProjectorFunction make_test_function(const std::string& name, int d, double scale) {
  Eigen::VectorXd diag(d);
  for (int i = 0; i < d; ++i) diag(i) = scale * (i + 1) / d;
  if (name == "one") return [](const Projector&) { return 1.0; };
  if (name == "trace")
    return [diag](const Projector& p) { return diag.dot(p.mat().diagonal()); };
  if (name == "trace_sq")
    return [diag](const Projector& p) {
      const double v = diag.dot(p.mat().diagonal());
      return v * v;
    };
  if (name == "exp_trace")
    return [diag](const Projector& p) {
      return std::exp(diag.dot(p.mat().diagonal()));
    };
  throw ParameterError("unknown test function '" + name +
                       "' (one|trace|trace_sq|exp_trace)");
}

json config_echo(const std::vector<std::pair<std::string, json>>& entries) {
  json out;
  for (const auto& [key, value] : entries) out[key] = value;
  return out;
}

/// Paper guideline n_t ~ t^{k(d-k)} as a starting point count; no claim that
/// it suffices for equality.
int default_point_count(int t, int k, int d) {
  const double guess = std::pow(static_cast<double>(t + 1), k * (d - k));
  return std::max(2, static_cast<int>(std::lround(guess)));
}

int run(int argc, char** argv) {
  CLI::App app{"Grassmannian cubatures: construction, certification, moments, "
               "phase retrieval"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: hardware)");

  // ---- cubature ----------------------------------------------------------
  auto* cub = app.add_subcommand("cubature", "construct and inspect cubatures");
  cub->require_subcommand(1);

  struct {
    int d = 2, k = 1, t = 2, n = 0;
    std::uint64_t seed = 0;
    int restarts = 5, max_iter = 100000, weight_rounds = 0;
    double g_tol = 1e-10;
    std::string out;
  } mi;
  auto* minimize = cub->add_subcommand("minimize", "minimize the t-fusion frame potential");
  minimize->add_option("--d", mi.d)->required();
  minimize->add_option("--k", mi.k)->required();
  minimize->add_option("--t", mi.t)->required();
  minimize->add_option("--n", mi.n, "point count (default: (t+1)^{k(d-k)})");
  minimize->add_option("--seed", mi.seed)->required();
  minimize->add_option("--restarts", mi.restarts);
  minimize->add_option("--gtol", mi.g_tol);
  minimize->add_option("--max-iter", mi.max_iter);
  minimize->add_option("--weight-rounds", mi.weight_rounds);
  minimize->add_option("--out", mi.out, "output cubature JSON path");

  struct {
    std::string in;
    int t = 0;
    double tol = 0.0;
  } ce;
  auto* certify = cub->add_subcommand("certify", "equality certificate for a cubature file");
  certify->add_option("--in", ce.in)->required();
  certify->add_option("--t", ce.t, "degree (default: the file's degree)");
  certify->add_option("--tol", ce.tol, "certification tolerance (default: eps_cert(n))");

  struct {
    std::string in;
    int probes = 100000;
    std::uint64_t seed = 0;
    int polish = 0;
  } cov;
  auto* covering = cub->add_subcommand("covering", "covering radius estimate");
  covering->add_option("--in", cov.in)->required();
  covering->add_option("--probes", cov.probes);
  covering->add_option("--seed", cov.seed);
  covering->add_option("--polish", cov.polish, "gradient-free polish steps");

  struct {
    std::string in, f = "trace";
    double scale = 1.0;
  } integ;
  auto* integrate = cub->add_subcommand("integrate", "integrate a test function");
  integrate->add_option("--in", integ.in)->required();
  integrate->add_option("--f", integ.f, "one|trace|trace_sq|exp_trace");
  integrate->add_option("--scale", integ.scale);

  struct {
    std::vector<std::string> in;
    std::string f = "trace", out;
    double scale = 1.0, reference = 0.0;
    bool have_reference = false;
    int trials = 100, probes = 100000;
    std::int64_t ref_samples = 10000000;
    std::uint64_t seed = 0;
  } qa;
  auto* quality = cub->add_subcommand(
      "quality", "integration-error and covering report over a cubature family");
  quality->add_option("--in", qa.in, "cubature JSON files, one per family member")
      ->required()
      ->expected(-1);
  quality->add_option("--f", qa.f, "one|trace|trace_sq|exp_trace");
  quality->add_option("--scale", qa.scale);
  auto* ref_opt = quality->add_option("--reference", qa.reference,
                                      "known integral value (skips Monte Carlo)");
  quality->add_option("--ref-samples", qa.ref_samples,
                      "Monte Carlo samples for the reference when not given");
  quality->add_option("--trials", qa.trials, "random-baseline trials per member");
  quality->add_option("--probes", qa.probes, "covering-radius probes per member");
  quality->add_option("--seed", qa.seed);
  quality->add_option("--out", qa.out, "output CSV path");

  // ---- dims --------------------------------------------------------------
  auto* dims = app.add_subcommand("dims", "polynomial space dimensions");
  dims->require_subcommand(1);
  struct {
    int d = 2, k = 1, t = 0;
  } ds;
  auto* dims_single = dims->add_subcommand("single", "dim Pol_t(G_{k,d})");
  dims_single->add_option("--d", ds.d)->required();
  dims_single->add_option("--k", ds.k)->required();
  dims_single->add_option("--t", ds.t)->required();
  struct {
    int d = 2, t = 0;
    std::string ranks;
  } du;
  auto* dims_union = dims->add_subcommand("union", "dim Pol_t on a union of Grassmannians");
  dims_union->add_option("--d", du.d)->required();
  dims_union->add_option("--K", du.ranks, "comma-separated rank set")->required();
  dims_union->add_option("--t", du.t)->required();

  // ---- moments -----------------------------------------------------------
  auto* mom = app.add_subcommand("moments", "Prony recovery and moment lifting");
  mom->require_subcommand(1);
  struct {
    std::string file;
    int m = 0;
  } pr;
  auto* prony = mom->add_subcommand("prony", "recover a sparse 1-D measure from moments");
  prony->add_option("--moments", pr.file)->required();
  prony->add_option("--m", pr.m)->required();

  struct {
    int d = 2, t = 1;
    std::string v, alpha, out;
  } fr;
  auto* frame = mom->add_subcommand("frame", "Vandermonde-minor frame construction");
  frame->add_option("--d", fr.d)->required();
  frame->add_option("--t", fr.t)->required();
  frame->add_option("--v", fr.v, "comma-separated node list (default 1..d)");
  frame->add_option("--alpha", fr.alpha, "comma-separated exponents (default 0..t+d-2)");
  frame->add_option("--out", fr.out, "output frames JSON path");

  struct {
    std::string frames, data, out;
    int degree = 1;
  } li;
  auto* lift = mom->add_subcommand("lift", "lift projected moments to monomial moments");
  lift->add_option("--frames", li.frames)->required();
  lift->add_option("--data", li.data, "atom CSV: weight,x_1,...,x_d")->required();
  lift->add_option("--degree", li.degree)->required();
  lift->add_option("--out", li.out, "output moment-table JSON path");

  struct {
    std::string data;
    int d = 0, k = 1;
    std::uint64_t seed = 0;
  } jl;
  auto* jl_cmd = mom->add_subcommand("jl", "projection distortion over a point set");
  jl_cmd->add_option("--data", jl.data, "point CSV: x_1,...,x_d")->required();
  jl_cmd->add_option("--d", jl.d)->required();
  jl_cmd->add_option("--k", jl.k)->required();
  jl_cmd->add_option("--seed", jl.seed, "seed for the random projector");

  // ---- phase -------------------------------------------------------------
  auto* phase = app.add_subcommand("phase", "phase retrieval from projection magnitudes");
  phase->require_subcommand(1);
  struct {
    std::string cubature, x;
    std::uint64_t seed = 0;
  } pc;
  auto* closed = phase->add_subcommand("closed", "closed-form reconstruction on a cubature");
  closed->add_option("--cubature", pc.cubature)->required();
  closed->add_option("--x", pc.x, "signal as comma-separated values (default: random unit)");
  closed->add_option("--seed", pc.seed);

  struct {
    int d = 0, k = 1, n = 0;
    std::uint64_t seed = 0;
    double tol = 1e-7;
    int max_iter = 50000;
    bool no_norm = false;
  } pp;
  auto* pocs = phase->add_subcommand("pocs", "PSD/affine feasibility on Haar projectors");
  pocs->add_option("--d", pp.d)->required();
  pocs->add_option("--k", pp.k)->required();
  pocs->add_option("--n", pp.n)->required();
  pocs->add_option("--seed", pp.seed)->required();
  pocs->add_option("--tol", pp.tol);
  pocs->add_option("--max-iter", pp.max_iter);
  pocs->add_flag("--no-norm", pp.no_norm, "drop the known-norm constraint");

  struct {
    int d = 0, k = 1, trials = 50;
    std::string n_list, source = "haar", cubature, out;
    std::uint64_t seed = 0;
    double tol = 1e-7;
    int max_iter = 50000;
    bool no_norm = false;
  } sw;
  auto* sweep = phase->add_subcommand("sweep", "success-rate sweep over sample counts");
  sweep->add_option("--d", sw.d)->required();
  sweep->add_option("--k", sw.k)->required();
  sweep->add_option("--n-list", sw.n_list, "comma-separated sample counts")->required();
  sweep->add_option("--trials", sw.trials);
  sweep->add_option("--source", sw.source, "haar|cubature");
  sweep->add_option("--cubature", sw.cubature, "cubature JSON for --source cubature");
  sweep->add_option("--seed", sw.seed)->required();
  sweep->add_option("--tol", sw.tol);
  sweep->add_option("--max-iter", sw.max_iter);
  sweep->add_flag("--no-norm", sw.no_norm);
  sweep->add_option("--out", sw.out, "output CSV path");

  // ---- bound -------------------------------------------------------------
  auto* bound = app.add_subcommand("bound", "potential bounds and constants");
  bound->require_subcommand(1);
  struct {
    int t = 1, k = 1, d = 2;
  } bf;
  auto* bffp = bound->add_subcommand("ffp", "fusion-frame-potential lower bound B(t,k,d)");
  bffp->add_option("--t", bf.t)->required();
  bffp->add_option("--k", bf.k)->required();
  bffp->add_option("--d", bf.d)->required();
  struct {
    double s = 1.0;
    int k = 1, d = 2, cutoff = 1000;
  } bc;
  auto* brc = bound->add_subcommand("random-const", "random-point worst-case constant c^2");
  brc->add_option("--s", bc.s)->required();
  brc->add_option("--k", bc.k)->required();
  brc->add_option("--d", bc.d)->required();
  brc->add_option("--cutoff", bc.cutoff);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints usage or error text
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (threads > 0) set_thread_override(threads);

  // ---- dispatch ----------------------------------------------------------
  if (minimize->parsed()) {
    if (mi.n == 0) mi.n = default_point_count(mi.t, mi.k, mi.d);
    MinimizeOptions opts;
    opts.restarts = mi.restarts;
    opts.g_tol = mi.g_tol;
    opts.max_iter = mi.max_iter;
    opts.weight_rounds = mi.weight_rounds;
    Rng rng(mi.seed);
    WeightedCubature c = minimize_ffp(mi.n, mi.k, mi.d, mi.t, opts, rng);
    json j = cubature_to_json(c);
    j["metadata"]["config"] = config_echo({{"subcommand", "cubature minimize"},
                                           {"d", mi.d},
                                           {"k", mi.k},
                                           {"t", mi.t},
                                           {"n", mi.n},
                                           {"seed", mi.seed},
                                           {"restarts", mi.restarts},
                                           {"gtol", mi.g_tol},
                                           {"max_iter", mi.max_iter},
                                           {"weight_rounds", mi.weight_rounds}});
    j["metadata"]["cert_tol"] = eps_cert(mi.n);
    if (!mi.out.empty()) write_json_file(mi.out, j);
    std::cout << "n " << mi.n << "\nresidual " << fmt(c.certificate_residual)
              << "\ngrad_norm " << fmt(c.metadata.grad_norm) << "\niterations "
              << c.metadata.iterations << "\nconverged "
              << (c.metadata.converged ? "true" : "false") << "\n";
    if (mi.out.empty()) std::cout << j.dump(2) << "\n";
    return c.metadata.converged ? kExitOk : kExitNoConvergence;
  }

  if (certify->parsed()) {
    WeightedCubature c = cubature_from_json(read_json_file(ce.in));
    const int t = ce.t > 0 ? ce.t : c.degree;
    const double tol = ce.tol > 0 ? ce.tol : eps_cert(static_cast<int>(c.points.size()));
    const Certificate cert = certify_cubature(c, t, tol);
    std::cout << "residual " << fmt(cert.residual) << "\ncertified "
              << (cert.certified ? "true" : "false") << "\n";
    if (cert.certified) {
      // Equality at degree t implies it at every lower degree.
      std::cout << "implied_degrees";
      for (int deg = 1; deg <= t; ++deg) std::cout << " " << deg;
      std::cout << "\n";
    }
    return kExitOk;
  }

  if (covering->parsed()) {
    WeightedCubature c = cubature_from_json(read_json_file(cov.in));
    Rng rng(cov.seed);
    const CoveringEstimate est =
        covering_radius_estimate(c.points, cov.probes, rng, cov.polish);
    std::cout << "rho_hat " << fmt(est.rho_hat) << "\n";
    if (cov.polish > 0) std::cout << "rho_polished " << fmt(est.rho_polished) << "\n";
    return kExitOk;
  }

  if (integrate->parsed()) {
    WeightedCubature c = cubature_from_json(read_json_file(integ.in));
    const ProjectorFunction f = make_test_function(integ.f, c.d, integ.scale);
    std::cout << fmt(integrate_with_cubature(c, f)) << "\n";
    return kExitOk;
  }

  if (quality->parsed()) {
    std::vector<WeightedCubature> family;
    for (const std::string& path : qa.in)
      family.push_back(cubature_from_json(read_json_file(path)));
    if (family.empty()) throw ParameterError("quality: empty family");
    const int d = family[0].d;
    const int k = family[0].k;
    const ProjectorFunction f = make_test_function(qa.f, d, qa.scale);

    Rng rng(qa.seed);
    double reference = qa.reference;
    double reference_err = 0.0;
    qa.have_reference = ref_opt->count() > 0;
    if (!qa.have_reference) {
      // Plain Monte Carlo reference with its standard error.
      Rng ref_rng = rng.fork(1);
      double sum = 0.0, sum_sq = 0.0;
      for (std::int64_t i = 0; i < qa.ref_samples; ++i) {
        const double v = f(sample_uniform(d, k, ref_rng));
        sum += v;
        sum_sq += v * v;
      }
      reference = sum / static_cast<double>(qa.ref_samples);
      const double var =
          std::max(0.0, sum_sq / static_cast<double>(qa.ref_samples) - reference * reference);
      reference_err = std::sqrt(var / static_cast<double>(qa.ref_samples));
    }

    Rng exp_rng = rng.fork(2);
    const auto reports = integration_error_experiment(family, f, qa.f, reference,
                                                      reference_err, qa.trials, exp_rng);
    std::vector<double> rho_hats;
    for (const WeightedCubature& c : family) {
      Rng probe_rng = rng.fork(3);  // common probes across the family
      rho_hats.push_back(covering_radius_estimate(c.points, qa.probes, probe_rng).rho_hat);
    }
    const std::string csv = quality_csv(reports, rho_hats);
    if (!qa.out.empty()) {
      write_text_file(qa.out, csv);
      std::cout << "rows " << reports.size() << "\nreference " << fmt(reference)
                << "\nreference_err " << fmt(reference_err) << "\n";
    } else {
      std::cout << csv;
    }
    return kExitOk;
  }

  if (dims_single->parsed()) {
    std::cout << dim_pol_grassmannian(ds.t, ds.k, ds.d) << "\n";
    return kExitOk;
  }
  if (dims_union->parsed()) {
    const GrassmannSpec spec(du.d, parse_int_list(du.ranks));
    std::cout << dim_pol_union(spec, du.t) << "\n";
    return kExitOk;
  }

  if (prony->parsed()) {
    const std::vector<double> moments = read_numbers_file(pr.file);
    const PronyResult res = prony_recover_1d(moments, pr.m);
    std::cout << "nodes";
    for (double x : res.measure.nodes) std::cout << " " << fmt(x);
    std::cout << "\nweights";
    for (double a : res.measure.weights) std::cout << " " << fmt(a);
    std::cout << "\nmin_separation " << fmt(res.diagnostics.min_separation)
              << "\nhankel_condition " << fmt(res.diagnostics.hankel_condition) << "\n";
    return kExitOk;
  }

  if (frame->parsed()) {
    const std::vector<double> v = fr.v.empty() ? default_minor_v(fr.d) : parse_double_list(fr.v);
    std::vector<int> alpha =
        fr.alpha.empty() ? default_minor_alpha(fr.t, fr.d) : parse_int_list(fr.alpha);
    const FrameFamily frames = build_minor_frame(fr.t, fr.d, v, alpha);
    const RankCheck check = frame_rank_check(frames, fr.t);
    json j = frames_to_json(frames, fr.t);
    j["metadata"] = {{"config", config_echo({{"subcommand", "moments frame"},
                                             {"d", fr.d},
                                             {"t", fr.t},
                                             {"v", v},
                                             {"alpha", alpha}})},
                     {"full_rank", check.full_rank},
                     {"sigma_min", check.sigma_min}};
    if (!fr.out.empty()) write_json_file(fr.out, j);
    std::cout << "rows " << frames.size() << "\nfull_rank "
              << (check.full_rank ? "true" : "false") << "\nsigma_min "
              << fmt(check.sigma_min) << "\n";
    if (fr.out.empty()) std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  if (lift->parsed()) {
    const FrameFamily frames = frames_from_json(read_json_file(li.frames));
    const DiscreteMeasure mu = read_atoms_csv(li.data, frames.dim());
    const ProjectedMoments projected = project_moments(frames, mu, li.degree);
    const MomentTable table = lift_moments(frames, projected, li.degree);
    json j = moment_table_to_json(table);
    j["metadata"] = {{"config", config_echo({{"subcommand", "moments lift"},
                                             {"frames", li.frames},
                                             {"data", li.data},
                                             {"degree", li.degree}})}};
    if (!li.out.empty()) {
      write_json_file(li.out, j);
      std::cout << "moments " << table.values.size() << "\n";
    } else {
      std::cout << j.dump(2) << "\n";
    }
    for (const std::string& w : table.warnings) std::cerr << "warning: " << w << "\n";
    return kExitOk;
  }

  if (jl_cmd->parsed()) {
    const auto points = read_points_csv(jl.data, jl.d);
    Rng rng(jl.seed);
    const Projector p = sample_uniform(jl.d, jl.k, rng);
    const JlReport report = jl_distortion(points, p);
    std::cout << "min_ratio " << fmt(report.min_ratio) << "\nmax_ratio "
              << fmt(report.max_ratio) << "\nskipped_pairs " << report.skipped_pairs
              << "\n";
    return kExitOk;
  }

  if (closed->parsed()) {
    WeightedCubature c = cubature_from_json(read_json_file(pc.cubature));
    Eigen::VectorXd x;
    if (!pc.x.empty()) {
      const auto vals = parse_double_list(pc.x);
      if (static_cast<int>(vals.size()) != c.d)
        throw ParameterError("--x must have d entries");
      x = Eigen::Map<const Eigen::VectorXd>(vals.data(), c.d);
    } else {
      Rng rng(pc.seed);
      x.resize(c.d);
      for (int i = 0; i < c.d; ++i) x(i) = rng.normal();
      x.normalize();
    }
    const MeasurementSet ms = measure(x, c.points);
    const ClosedFormResult res = reconstruct_closed_form(ms, c.weights);
    const RankOneExtract extract = rank_one_extract(res.candidate);
    const double err = std::min((extract.x - x).norm(), (extract.x + x).norm());
    std::cout << "recovered";
    for (int i = 0; i < c.d; ++i) std::cout << " " << fmt(extract.x(i));
    std::cout << "\nrank_one_residual " << fmt(extract.residual) << "\nerror_vs_input "
              << fmt(err) << "\ncubature_warning " << (res.cubature_warning ? "true" : "false")
              << "\n";
    return kExitOk;
  }

  if (pocs->parsed()) {
    Rng rng(pp.seed);
    Eigen::VectorXd x(pp.d);
    for (int i = 0; i < pp.d; ++i) x(i) = rng.normal();
    x.normalize();
    std::vector<Projector> projectors;
    projectors.reserve(static_cast<std::size_t>(pp.n));
    for (int j = 0; j < pp.n; ++j) projectors.push_back(sample_uniform(pp.d, pp.k, rng));
    const MeasurementSet ms = measure(x, projectors, !pp.no_norm);
    PocsOptions opts;
    opts.tol = pp.tol;
    opts.max_iter = pp.max_iter;
    const PocsResult res = feasibility_pocs(ms, opts);
    const RankOneExtract extract = rank_one_extract(res.a);
    const double err = std::min((extract.x - x).norm(), (extract.x + x).norm());
    std::cout << "converged " << (res.converged ? "true" : "false") << "\niterations "
              << res.iterations << "\nrelative_error " << fmt(err) << "\n";
    return res.converged ? kExitOk : kExitNoConvergence;
  }

  if (sweep->parsed()) {
    WeightedCubature loaded;
    const WeightedCubature* cub_ptr = nullptr;
    ProjectorSource source = ProjectorSource::haar;
    if (sw.source == "cubature") {
      source = ProjectorSource::cubature;
      if (sw.cubature.empty())
        throw ParameterError("--source cubature requires --cubature FILE");
      loaded = cubature_from_json(read_json_file(sw.cubature));
      cub_ptr = &loaded;
    } else if (sw.source != "haar") {
      throw ParameterError("--source must be haar or cubature");
    }
    PocsOptions opts;
    opts.tol = sw.tol;
    opts.max_iter = sw.max_iter;
    Rng rng(sw.seed);
    std::vector<SweepRow> rows;
    const auto n_list = parse_int_list(sw.n_list);
    for (std::size_t i = 0; i < n_list.size(); ++i) {
      Rng row_rng = rng.fork(i);
      rows.push_back(success_experiment(sw.d, sw.k, n_list[i], source, cub_ptr, sw.trials,
                                        row_rng, opts, !sw.no_norm));
    }
    const std::string csv = sweep_csv(rows);
    if (!sw.out.empty()) {
      write_text_file(sw.out, csv);
      std::cout << "rows " << rows.size() << "\n";
    } else {
      std::cout << csv;
    }
    return kExitOk;
  }

  if (bffp->parsed()) {
    std::cout << fmt(ffp_lower_bound(bf.t, bf.k, bf.d)) << "\n";
    return kExitOk;
  }
  if (brc->parsed()) {
    const TruncatedSum sum = random_points_constant(bc.s, bc.k, bc.d, bc.cutoff);
    std::cout << "value " << fmt(sum.value) << "\ntail_bound " << fmt(sum.tail_bound)
              << "\ntail_finite " << (sum.tail_finite ? "true" : "false") << "\n";
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const grasscub::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const grasscub::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
