// Command-line front end: seed, check, continue, embed, verify.

#include "curvedre/cli.hpp"
#include "curvedre/io.hpp"

#include <CLI11.hpp>

#include <iostream>

using curvedre::cli::RunConfig;

namespace {

struct SeedFlags {
  int polygon = 0;
  std::vector<double> lagrange3;
  std::string seed_file;
};

void add_seed_flags(CLI::App* app, SeedFlags& flags, RunConfig& config) {
  auto* polygon = app->add_option("--polygon", flags.polygon, "regular N-gon of unit masses");
  auto* lagrange = app->add_option("--lagrange3", flags.lagrange3, "Lagrange triangle with masses M1 M2 M3")
                       ->expected(3);
  auto* seed = app->add_option("--seed", flags.seed_file, "custom seed JSON (refined to a central configuration)");
  polygon->excludes(lagrange)->excludes(seed);
  lagrange->excludes(seed);
  app->add_option("--masses", config.masses, "body masses");
}

// Applies seed flags; returns false when no seed was named.
bool apply_seed_flags(const SeedFlags& flags, RunConfig& config) {
  using curvedre::cli::SeedKind;
  if (flags.polygon > 0) {
    config.seed_kind = SeedKind::Polygon;
    config.polygon_n = flags.polygon;
  } else if (!flags.lagrange3.empty()) {
    config.seed_kind = SeedKind::Lagrange3;
    config.masses = flags.lagrange3;
  } else if (!flags.seed_file.empty()) {
    config.seed_kind = SeedKind::Custom;
    config.seed_file = flags.seed_file;
    config.inline_seed.reset();
  } else {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central configurations and their continuation to curved spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", curvedre::cli::version());

  RunConfig config;
  SeedFlags seed_flags;
  std::string direction = "pos";
  std::string config_file;
  bool fixed_step = false;

  auto* seed = app.add_subcommand("seed", "construct a planar central configuration seed");
  add_seed_flags(seed, seed_flags, config);
  seed->add_option("--out", config.out, "write the seed as JSON");

  auto* check = app.add_subcommand("check", "report the non-degeneracy of a seed");
  add_seed_flags(check, seed_flags, config);
  check->add_option("--tol", config.tol, "refinement tolerance for custom seeds");

  auto* cont = app.add_subcommand("continue", "continue a seed in curvature");
  add_seed_flags(cont, seed_flags, config);
  cont->add_option("--config", config_file, "run config or manifest JSON");
  cont->add_option("--direction", direction, "pos, neg or both")->check(CLI::IsMember({"pos", "neg", "both"}));
  cont->add_option("--dk", config.delta_kappa, "curvature step (maximum step when adaptive)");
  cont->add_option("--kappa-limit", config.kappa_limit, "magnitude of the final curvature");
  cont->add_option("--tol", config.tol, "residual tolerance on the augmented map");
  cont->add_flag("--fixed-step", fixed_step, "fixed steps, stop at the first failure");
  cont->add_option("--out", config.out, "family CSV path (suffixed _pos/_neg for both)");
  cont->add_option("--manifest", config.manifest, "manifest JSON path");

  auto* embed = app.add_subcommand("embed", "map a family onto the unit sphere or hyperboloid");
  embed->add_option("--family", config.family_file, "family CSV")->required();
  embed->add_flag("--reflect-z", config.reflect_z, "negate z after rescaling");
  embed->add_option("--out", config.out, "embedded series CSV");
  embed->add_option("--masses", config.masses, "masses, for the latitude report");

  auto* verify = app.add_subcommand("verify", "integrate family members over one period");
  verify->add_option("--family", config.family_file, "family CSV")->required();
  verify->add_option("--masses", config.masses, "body masses");
  verify->add_option("--manifest", config.manifest, "read masses from a run manifest");
  verify->add_option("--tol", config.verify_tol, "integrator tolerance");
  verify->add_option("--threshold", config.drift_threshold, "maximum admissible drift");
  verify->add_option("--every", config.every, "verify every N-th row");
  verify->add_option("--kappa", config.verify_kappas, "verify the rows nearest these curvatures");
  verify->add_option("--period", config.period, "integration time (default 2*pi)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*seed || *check) {
      if (!apply_seed_flags(seed_flags, config)) {
        std::cerr << "error: one of --polygon, --lagrange3 or --seed is required\n";
        return curvedre::cli::kOperationalFailure;
      }
      return *seed ? curvedre::cli::cmd_seed(config, std::cout, std::cerr)
                   : curvedre::cli::cmd_check(config, std::cout, std::cerr);
    }
    if (*cont) {
      if (!config_file.empty()) {
        const RunConfig from_file =
            curvedre::cli::config_from_json(nlohmann::json::parse(curvedre::io::read_file(config_file)));
        const std::string out = config.out.empty() ? from_file.out : config.out;
        const std::string manifest = config.manifest;
        config = from_file;
        config.out = out;
        config.manifest = manifest;
        // Explicit seed flags override the file.
        apply_seed_flags(seed_flags, config);
      } else {
        if (!apply_seed_flags(seed_flags, config)) {
          std::cerr << "error: one of --polygon, --lagrange3, --seed or --config is required\n";
          return curvedre::cli::kOperationalFailure;
        }
        config.direction = direction == "neg"    ? curvedre::cli::DirectionChoice::Neg
                           : direction == "both" ? curvedre::cli::DirectionChoice::Both
                                                 : curvedre::cli::DirectionChoice::Pos;
        config.adaptive = !fixed_step;
      }
      return curvedre::cli::cmd_continue(config, std::cout, std::cerr);
    }
    if (*embed) return curvedre::cli::cmd_embed(config, std::cout, std::cerr);
    if (*verify) return curvedre::cli::cmd_verify(config, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return curvedre::cli::kOperationalFailure;
  }
  return curvedre::cli::kOperationalFailure;
}
