#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "grasscub/cubature.hpp"
#include "grasscub/moments.hpp"
#include "grasscub/phase.hpp"
#include "grasscub/quality.hpp"

namespace grasscub {

inline constexpr const char* kCubatureSchema = "grasscub/1";
inline constexpr const char* kFramesSchema = "grassframes/1";
inline constexpr const char* kMomentsSchema = "grassmoments/1";

/// Cubature on disk: {schema, d, k, t, points (row-major d*d arrays), weights,
/// certificate_residual, metadata{seed, iterations, grad_norm, ...}}.
nlohmann::json cubature_to_json(const WeightedCubature& c);
WeightedCubature cubature_from_json(const nlohmann::json& j);

nlohmann::json frames_to_json(const FrameFamily& frames, int degree);
FrameFamily frames_from_json(const nlohmann::json& j);

nlohmann::json moment_table_to_json(const MomentTable& table);

void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

/// All numbers in a whitespace/comma-separated text file.
std::vector<double> read_numbers_file(const std::string& path);

/// Atom list: each row "weight,x_1,...,x_d"; an optional header line is
/// skipped.
DiscreteMeasure read_atoms_csv(const std::string& path, int d);

/// Point list: each row "x_1,...,x_d".
std::vector<Eigen::VectorXd> read_points_csv(const std::string& path, int d);

std::string quality_csv(const std::vector<ErrorReport>& reports,
                        const std::vector<double>& rho_hats);
std::string sweep_csv(const std::vector<SweepRow>& rows);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace grasscub
