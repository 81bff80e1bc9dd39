#pragma once

#include "curvedre/continuation.hpp"
#include "curvedre/embedding.hpp"
#include "curvedre/seeds.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace curvedre::io {

/// 17 significant digits, round-trip exact for doubles.
std::string format_double(double x);

/// Write to `path.tmp` then rename over `path`.
void atomic_write(const std::filesystem::path& path, const std::string& contents);
std::string read_file(const std::filesystem::path& path);

/// One CSV row of a continued family:
/// kappa, alpha, residual, newton_iters, min_abs_eig, x_1, y_1, ..., x_n, y_n
struct FamilyFileRow {
  double kappa = 0.0;
  double alpha = 0.0;
  double residual = 0.0;
  int newton_iters = 0;
  double min_abs_eig = 0.0;
  Configuration u;
};

std::string family_csv_header(std::size_t bodies);
std::string family_to_csv(const ContinuationFamily& family);
std::vector<FamilyFileRow> parse_family_csv(const std::string& text);
std::vector<FamilyFileRow> read_family_csv(const std::filesystem::path& path);

/// Embedded series rows: kappa, body_index, x, y, z.
struct EmbeddedRow {
  double kappa = 0.0;
  EmbeddedConfiguration configuration;
};
std::string embedded_to_csv(const std::vector<EmbeddedRow>& rows);

nlohmann::json configuration_to_json(const Configuration& u);
Configuration configuration_from_json(const nlohmann::json& j);
nlohmann::json seed_to_json(const SeedReport& seed);

/// Masses and positions from a seed file. Masses may be absent (empty result).
struct SeedFile {
  std::vector<double> masses;
  Configuration positions;
};
SeedFile parse_seed_json(const nlohmann::json& j);

}  // namespace curvedre::io
