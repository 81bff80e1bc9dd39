#pragma once

#include "curvedre/continuation.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace curvedre::cli {

/// Process exit codes. A fold or other mathematical termination of a
/// continuation run is a result and exits with kOk.
inline constexpr int kOk = 0;
inline constexpr int kOperationalFailure = 2;
inline constexpr int kDegenerateSeed = 3;
inline constexpr int kVerificationFailed = 4;

enum class SeedKind { Polygon, Lagrange3, Custom };
enum class DirectionChoice { Pos, Neg, Both };

struct RunConfig {
  std::vector<double> masses;
  SeedKind seed_kind = SeedKind::Lagrange3;
  int polygon_n = 3;
  std::string seed_file;
  /// Seed positions and masses carried by a manifest; used instead of seed_file.
  std::optional<nlohmann::json> inline_seed;
  DirectionChoice direction = DirectionChoice::Pos;
  double delta_kappa = 0.01;
  /// Magnitude of the κ limit; applied with the sign of each direction.
  double kappa_limit = 1.0;
  double tol = 1e-13;
  bool adaptive = true;
  bool reflect_z = false;
  std::string out;
  std::string manifest;

  // embed / verify
  std::string family_file;
  double verify_tol = 1e-10;
  double drift_threshold = 1e-6;
  double period = 0.0;  // 0 means 2π
  std::size_t every = 0;  // 0 picks about ten evenly spaced rows
  std::vector<double> verify_kappas;

  /// Throws InvalidArgument on non-positive step/tolerance or masses.
  void validate() const;
};

nlohmann::json to_json(const RunConfig& c);
/// Accepts either a bare config object or a manifest with a "config" key.
RunConfig config_from_json(const nlohmann::json& j);

/// Builds the seed named by the config and runs the non-degeneracy check.
SeedReport build_seed(const RunConfig& config);

/// Output CSV path for one direction of a run.
std::string family_path(const RunConfig& config, Direction d);
std::string manifest_path(const RunConfig& config);

int cmd_seed(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_continue(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_embed(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace curvedre::cli
