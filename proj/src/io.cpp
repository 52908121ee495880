#include "grasscub/io.hpp"

#include <fstream>
#include <sstream>

#include "grasscub/errors.hpp"

namespace grasscub {

using nlohmann::json;

json cubature_to_json(const WeightedCubature& c) {
  json points = json::array();
  for (const Projector& p : c.points) {
    json flat = json::array();
    for (int i = 0; i < p.dim(); ++i)
      for (int j = 0; j < p.dim(); ++j) flat.push_back(p.mat()(i, j));
    points.push_back(std::move(flat));
  }
  json weights = json::array();
  for (Eigen::Index j = 0; j < c.weights.size(); ++j) weights.push_back(c.weights(j));
  return json{{"schema", kCubatureSchema},
              {"d", c.d},
              {"k", c.k},
              {"t", c.degree},
              {"points", std::move(points)},
              {"weights", std::move(weights)},
              {"certificate_residual", c.certificate_residual},
              {"metadata",
               {{"seed", c.metadata.seed},
                {"iterations", c.metadata.iterations},
                {"grad_norm", c.metadata.grad_norm},
                {"converged", c.metadata.converged},
                {"restarts", c.metadata.restarts}}}};
}

WeightedCubature cubature_from_json(const json& j) {
  if (j.value("schema", "") != kCubatureSchema)
    throw ParameterError("cubature_from_json: unknown schema");
  WeightedCubature c;
  c.d = j.at("d").get<int>();
  c.k = j.at("k").get<int>();
  c.degree = j.at("t").get<int>();
  const auto& points = j.at("points");
  for (const auto& flat : points) {
    if (static_cast<int>(flat.size()) != c.d * c.d)
      throw ParameterError("cubature_from_json: point entry count != d*d");
    Eigen::MatrixXd m(c.d, c.d);
    int idx = 0;
    for (int r = 0; r < c.d; ++r)
      for (int col = 0; col < c.d; ++col) m(r, col) = flat[static_cast<std::size_t>(idx++)];
    c.points.emplace_back(SymMatrix::from_full(m), c.k);
  }
  const auto& weights = j.at("weights");
  c.weights.resize(static_cast<Eigen::Index>(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i)
    c.weights(static_cast<Eigen::Index>(i)) = weights[i].get<double>();
  c.certificate_residual = j.value("certificate_residual", 0.0);
  if (j.contains("metadata")) {
    const auto& meta = j.at("metadata");
    c.metadata.seed = meta.value("seed", std::uint64_t{0});
    c.metadata.iterations = meta.value("iterations", 0);
    c.metadata.grad_norm = meta.value("grad_norm", 0.0);
    c.metadata.converged = meta.value("converged", true);
    c.metadata.restarts = meta.value("restarts", 1);
  }
  c.validate();
  return c;
}

json frames_to_json(const FrameFamily& frames, int degree) {
  json rows = json::array();
  for (int j = 0; j < frames.size(); ++j) {
    json row = json::array();
    for (int i = 0; i < frames.dim(); ++i) row.push_back(frames.rows()(j, i));
    rows.push_back(std::move(row));
  }
  json provenance;
  if (frames.provenance()) {
    provenance = json{{"v", frames.provenance()->v}, {"alpha", frames.provenance()->alpha}};
  } else {
    provenance = nullptr;
  }
  return json{{"schema", kFramesSchema},
              {"d", frames.dim()},
              {"t", degree},
              {"rows", std::move(rows)},
              {"provenance", std::move(provenance)}};
}

FrameFamily frames_from_json(const json& j) {
  if (j.value("schema", "") != kFramesSchema)
    throw ParameterError("frames_from_json: unknown schema");
  const int d = j.at("d").get<int>();
  const auto& rows = j.at("rows");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), d);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != d)
      throw ParameterError("frames_from_json: row length != d");
    for (int i = 0; i < d; ++i)
      m(static_cast<Eigen::Index>(r), i) = rows[r][static_cast<std::size_t>(i)].get<double>();
  }
  std::optional<FrameProvenance> provenance;
  if (j.contains("provenance") && !j.at("provenance").is_null()) {
    FrameProvenance p;
    p.v = j.at("provenance").at("v").get<std::vector<double>>();
    p.alpha = j.at("provenance").at("alpha").get<std::vector<int>>();
    provenance = std::move(p);
  }
  return FrameFamily(d, std::move(m), std::move(provenance));
}

json moment_table_to_json(const MomentTable& table) {
  json moments = json::array();
  for (const auto& [index, value] : table.values)
    moments.push_back(json{{"index", index}, {"value", value}});
  return json{{"schema", kMomentsSchema},
              {"d", table.d},
              {"degree", table.max_degree},
              {"moments", std::move(moments)},
              {"warnings", table.warnings}};
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open: " + path);
  json j;
  in >> j;
  return j;
}

std::vector<double> read_numbers_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open: " + path);
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    std::stringstream ss(token);
    std::string field;
    while (std::getline(ss, field, ',')) {
      if (field.empty()) continue;
      try {
        out.push_back(std::stod(field));
      } catch (const std::exception&) {
        throw ParameterError("not a number in " + path + ": '" + field + "'");
      }
    }
  }
  return out;
}

namespace {

std::vector<std::vector<double>> read_csv_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string field;
    bool numeric = true;
    while (std::getline(ss, field, ',')) {
      try {
        row.push_back(std::stod(field));
      } catch (const std::exception&) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      if (first) {
        first = false;
        continue;  // header line
      }
      throw ParameterError("non-numeric row in " + path + ": '" + line + "'");
    }
    first = false;
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

DiscreteMeasure read_atoms_csv(const std::string& path, int d) {
  const auto rows = read_csv_rows(path);
  if (rows.empty()) throw ParameterError("no atoms in " + path);
  DiscreteMeasure mu;
  mu.atoms.resize(static_cast<Eigen::Index>(rows.size()), d);
  mu.weights.resize(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != d + 1)
      throw ParameterError("atom row must be weight,x_1,...,x_" + std::to_string(d));
    mu.weights(static_cast<Eigen::Index>(r)) = rows[r][0];
    for (int i = 0; i < d; ++i)
      mu.atoms(static_cast<Eigen::Index>(r), i) = rows[r][static_cast<std::size_t>(i + 1)];
  }
  return mu;
}

std::vector<Eigen::VectorXd> read_points_csv(const std::string& path, int d) {
  const auto rows = read_csv_rows(path);
  std::vector<Eigen::VectorXd> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != d)
      throw ParameterError("point row must have d = " + std::to_string(d) + " fields");
    Eigen::VectorXd x(d);
    for (int i = 0; i < d; ++i) x(i) = row[static_cast<std::size_t>(i)];
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

void append_double(std::string& s, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  s += buf;
}

}  // namespace

std::string quality_csv(const std::vector<ErrorReport>& reports,
                        const std::vector<double>& rho_hats) {
  std::string out = "t,n,cubature_error,random_mean,random_std,rho_hat\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const ErrorReport& r = reports[i];
    out += std::to_string(r.degree) + "," + std::to_string(r.n_points) + ",";
    append_double(out, r.cubature_error);
    out += ",";
    append_double(out, r.random_mean);
    out += ",";
    append_double(out, r.random_std);
    out += ",";
    append_double(out, i < rho_hats.size() ? rho_hats[i] : 0.0);
    out += "\n";
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "d,k,n,source,trials,success_rate,mean_iterations\n";
  for (const SweepRow& r : rows) {
    out += std::to_string(r.d) + "," + std::to_string(r.k) + "," + std::to_string(r.n) +
           "," + r.source + "," + std::to_string(r.trials) + ",";
    append_double(out, r.success_rate);
    out += ",";
    append_double(out, r.mean_iterations);
    out += "\n";
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot open for writing: " + path);
  out << text;
}

}  // namespace grasscub
