#include "curvedre/cli.hpp"

#include "curvedre/dynamics.hpp"
#include "curvedre/embedding.hpp"
#include "curvedre/errors.hpp"
#include "curvedre/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <numbers>
#include <ostream>

#ifndef CURVEDRE_VERSION
#define CURVEDRE_VERSION "unknown"
#endif

namespace curvedre::cli {

using nlohmann::json;

std::string version() { return CURVEDRE_VERSION; }

namespace {

std::string to_string(SeedKind k) {
  switch (k) {
    case SeedKind::Polygon: return "polygon";
    case SeedKind::Lagrange3: return "lagrange3";
    case SeedKind::Custom: return "custom";
  }
  return "unknown";
}

std::string to_string(DirectionChoice d) {
  switch (d) {
    case DirectionChoice::Pos: return "pos";
    case DirectionChoice::Neg: return "neg";
    case DirectionChoice::Both: return "both";
  }
  return "unknown";
}

SeedKind seed_kind_from(const std::string& s) {
  if (s == "polygon") return SeedKind::Polygon;
  if (s == "lagrange3") return SeedKind::Lagrange3;
  if (s == "custom") return SeedKind::Custom;
  throw InvalidArgument("unknown seed kind '" + s + "'");
}

DirectionChoice direction_from(const std::string& s) {
  if (s == "pos") return DirectionChoice::Pos;
  if (s == "neg") return DirectionChoice::Neg;
  if (s == "both") return DirectionChoice::Both;
  throw InvalidArgument("unknown direction '" + s + "'");
}

std::vector<Direction> directions(DirectionChoice d) {
  switch (d) {
    case DirectionChoice::Pos: return {Direction::Positive};
    case DirectionChoice::Neg: return {Direction::Negative};
    case DirectionChoice::Both: return {Direction::Positive, Direction::Negative};
  }
  return {};
}

void print_seed(const SeedReport& seed, const RunConfig& config, std::ostream& out) {
  out << "seed: " << to_string(config.seed_kind) << '\n';
  out << "masses:";
  for (double m : seed.masses.values()) out << ' ' << io::format_double(m);
  out << '\n';
  out << "circumradius: " << io::format_double(seed.configuration.max_radius()) << '\n';
  if (config.seed_kind == SeedKind::Lagrange3) {
    const auto& m = seed.masses;
    out << "side: " << io::format_double(lagrange_side(m[0], m[1], m[2])) << '\n';
  }
  out << "residual: " << io::format_double(seed.residual) << '\n';
  out << "kernel_dimension: " << seed.kernel_dimension << '\n';
  out << "kernel_alignment: " << io::format_double(seed.kernel_alignment) << '\n';
  out << "degenerate: " << (seed.degenerate ? "true" : "false") << '\n';
  if (seed.routh_beta) out << "routh_beta: " << io::format_double(*seed.routh_beta) << '\n';
}

std::vector<double> masses_for_verify(const RunConfig& config) {
  if (!config.masses.empty()) return config.masses;
  if (!config.manifest.empty()) {
    const json manifest = json::parse(io::read_file(config.manifest));
    if (manifest.contains("seed") && manifest["seed"].contains("masses"))
      return manifest["seed"]["masses"].get<std::vector<double>>();
    return config_from_json(manifest).masses;
  }
  throw InvalidArgument("masses are required (--masses or --manifest)");
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const DegenerateSeedError& e) {
    err << "error: " << e.what() << '\n';
    return kDegenerateSeed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kOperationalFailure;
  }
}

}  // namespace

void RunConfig::validate() const {
  if (!(delta_kappa > 0.0)) throw InvalidArgument("--dk must be positive");
  if (!(tol > 0.0)) throw InvalidArgument("--tol must be positive");
  if (!(kappa_limit != 0.0) || !std::isfinite(kappa_limit)) throw InvalidArgument("--kappa-limit must be nonzero");
  for (double m : masses) {
    if (!(m > 0.0) || !std::isfinite(m)) throw InvalidArgument("masses must be positive");
  }
  if (seed_kind == SeedKind::Polygon && polygon_n < 2) throw InvalidArgument("--polygon needs N >= 2");
  if (seed_kind == SeedKind::Lagrange3 && masses.size() != 3)
    throw InvalidArgument("--lagrange3 needs exactly three masses");
  if (seed_kind == SeedKind::Custom && seed_file.empty() && !inline_seed) throw InvalidArgument("custom seed needs a seed file");
}

json to_json(const RunConfig& c) {
  json j;
  j["masses"] = c.masses;
  j["seed_kind"] = to_string(c.seed_kind);
  j["polygon_n"] = c.polygon_n;
  j["seed_file"] = c.seed_file;
  j["direction"] = to_string(c.direction);
  j["delta_kappa"] = c.delta_kappa;
  j["kappa_limit"] = c.kappa_limit;
  j["tol"] = c.tol;
  j["adaptive"] = c.adaptive;
  j["reflect_z"] = c.reflect_z;
  j["out"] = c.out;
  return j;
}

RunConfig config_from_json(const json& input) {
  const json& j = input.contains("config") ? input.at("config") : input;
  RunConfig c;
  if (j.contains("masses")) c.masses = j.at("masses").get<std::vector<double>>();
  if (j.contains("seed_kind")) c.seed_kind = seed_kind_from(j.at("seed_kind").get<std::string>());
  if (j.contains("polygon_n")) c.polygon_n = j.at("polygon_n").get<int>();
  if (j.contains("seed_file")) c.seed_file = j.at("seed_file").get<std::string>();
  if (j.contains("direction")) c.direction = direction_from(j.at("direction").get<std::string>());
  if (j.contains("delta_kappa")) c.delta_kappa = j.at("delta_kappa").get<double>();
  if (j.contains("kappa_limit")) c.kappa_limit = j.at("kappa_limit").get<double>();
  if (j.contains("tol")) c.tol = j.at("tol").get<double>();
  if (j.contains("adaptive")) c.adaptive = j.at("adaptive").get<bool>();
  if (j.contains("reflect_z")) c.reflect_z = j.at("reflect_z").get<bool>();
  if (j.contains("out")) c.out = j.at("out").get<std::string>();
  // A manifest of a custom-seed run carries the refined seed itself.
  if (c.seed_kind == SeedKind::Custom && input.contains("seed")) c.inline_seed = input.at("seed");
  return c;
}

SeedReport build_seed(const RunConfig& config) {
  switch (config.seed_kind) {
    case SeedKind::Polygon: {
      if (!config.masses.empty() &&
          (config.masses.size() != static_cast<std::size_t>(config.polygon_n) ||
           std::any_of(config.masses.begin(), config.masses.end(), [](double m) { return m != 1.0; })))
        throw InvalidArgument("polygon seeds use unit masses");
      return check_nondegeneracy(polygon_cc(config.polygon_n),
                                 MassVector(std::vector<double>(static_cast<std::size_t>(config.polygon_n), 1.0)));
    }
    case SeedKind::Lagrange3: {
      const auto& m = config.masses;
      if (m.size() != 3) throw InvalidArgument("--lagrange3 needs exactly three masses");
      return check_nondegeneracy(lagrange_triangle(m[0], m[1], m[2]), MassVector(m));
    }
    case SeedKind::Custom: {
      const io::SeedFile file = io::parse_seed_json(config.inline_seed ? *config.inline_seed
                                                                        : json::parse(io::read_file(config.seed_file)));
      std::vector<double> masses = config.masses.empty() ? file.masses : config.masses;
      if (masses.empty()) masses.assign(file.positions.bodies(), 1.0);
      if (masses.size() != file.positions.bodies()) throw InvalidArgument("seed file mass and position counts differ");
      if (masses.size() < 2) throw InvalidArgument("a seed needs at least two bodies");
      return refine_cc(file.positions, MassVector(masses), config.tol);
    }
  }
  throw InvalidArgument("unknown seed kind");
}

std::string family_path(const RunConfig& config, Direction d) {
  const std::string base = config.out.empty() ? "family.csv" : config.out;
  if (config.direction != DirectionChoice::Both) return base;
  const std::filesystem::path p(base);
  std::filesystem::path stem = p.parent_path() / p.stem();
  return stem.string() + "_" + to_string(d) + (p.has_extension() ? p.extension().string() : ".csv");
}

std::string manifest_path(const RunConfig& config) {
  if (!config.manifest.empty()) return config.manifest;
  const std::filesystem::path p(config.out.empty() ? "family.csv" : config.out);
  return ((p.parent_path() / p.stem()).string()) + ".manifest.json";
}

int cmd_seed(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const SeedReport seed = build_seed(config);
    print_seed(seed, config, out);
    if (!config.out.empty()) {
      json j = io::seed_to_json(seed);
      j["kind"] = to_string(config.seed_kind);
      if (config.seed_kind == SeedKind::Lagrange3) j["side"] = lagrange_side(seed.masses[0], seed.masses[1], seed.masses[2]);
      io::atomic_write(config.out, j.dump(2) + "\n");
      out << "wrote: " << config.out << '\n';
    }
    if (seed.degenerate) {
      err << "seed is degenerate\n";
      return kDegenerateSeed;
    }
    return kOk;
  });
}

int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const SeedReport seed = build_seed(config);
    print_seed(seed, config, out);
    out << "hessian_spectrum:";
    for (Eigen::Index i = 0; i < seed.hessian_spectrum.size(); ++i)
      out << ' ' << io::format_double(seed.hessian_spectrum[i]);
    out << '\n';
    return seed.degenerate ? kDegenerateSeed : kOk;
  });
}

int cmd_continue(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const auto started = std::chrono::steady_clock::now();
    const SeedReport seed = build_seed(config);
    if (seed.degenerate) {
      print_seed(seed, config, err);
      throw DegenerateSeedError("refusing to continue a degenerate seed");
    }

    const auto dirs = directions(config.direction);
    std::vector<std::future<ContinuationFamily>> runs;
    for (Direction d : dirs) {
      ContinuationOptions options;
      options.step = config.delta_kappa;
      options.tol = config.tol;
      options.adaptive = config.adaptive;
      options.kappa_limit = (d == Direction::Positive ? 1.0 : -1.0) * std::abs(config.kappa_limit);
      runs.push_back(std::async(std::launch::async, [&seed, d, options] { return continue_family(seed, d, options); }));
    }

    json manifest;
    manifest["software"] = {{"name", "curvedre"}, {"version", version()}};
    manifest["command"] = "continue";
    manifest["config"] = to_json(config);
    manifest["seed"] = io::seed_to_json(seed);
    manifest["runs"] = json::array();
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      const ContinuationFamily family = runs[i].get();
      const std::string path = family_path(config, dirs[i]);
      io::atomic_write(path, io::family_to_csv(family));

      double max_res = 0.0, max_alpha = 0.0;
      for (const auto& r : family.records) {
        max_res = std::max(max_res, r.residual);
        max_alpha = std::max(max_alpha, std::abs(r.alpha));
      }
      const auto& t = family.termination;
      manifest["runs"].push_back({{"direction", to_string(dirs[i])},
                                  {"file", path},
                                  {"records", family.records.size()},
                                  {"termination", to_string(t.cause)},
                                  {"terminal_kappa", t.terminal_kappa},
                                  {"attempted_kappa", t.attempted_kappa},
                                  {"detail", t.detail},
                                  {"max_residual", max_res},
                                  {"max_abs_alpha", max_alpha}});
      out << to_string(dirs[i]) << ": " << family.records.size() << " records, termination " << to_string(t.cause)
          << " at kappa " << io::format_double(t.terminal_kappa) << ", max residual " << io::format_double(max_res)
          << " -> " << path << '\n';
    }
    manifest["wall_time_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    const std::string mpath = manifest_path(config);
    io::atomic_write(mpath, manifest.dump(2) + "\n");
    out << "manifest: " << mpath << '\n';
    return kOk;
  });
}

int cmd_embed(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.family_file.empty()) throw InvalidArgument("embed needs a family file");
    const auto rows = io::read_family_csv(config.family_file);
    std::vector<io::EmbeddedRow> series;
    std::size_t skipped = 0;
    double worst = 0.0;
    for (const auto& row : rows) {
      if (row.kappa == 0.0) {
        ++skipped;
        continue;
      }
      io::EmbeddedRow e{row.kappa, rescale_unit(embed(row.u, row.kappa), config.reflect_z)};
      worst = std::max(worst, e.configuration.constraint_residual());
      series.push_back(std::move(e));
    }
    if (skipped > 0) err << "warning: skipped " << skipped << " flat (kappa = 0) row(s)\n";
    const std::string path = config.out.empty() ? "embedded.csv" : config.out;
    io::atomic_write(path, io::embedded_to_csv(series));
    out << "embedded rows: " << series.size() << '\n';
    out << "max constraint residual: " << io::format_double(worst) << '\n';

    if (!config.masses.empty() && !series.empty()) {
      const MassVector m(config.masses);
      const auto& last = series.back();
      out << "latitude at kappa " << io::format_double(last.kappa) << " (ascending mass):\n";
      for (const auto& e : latitude_report(last.configuration, m))
        out << "  body " << e.body << " mass " << io::format_double(e.mass) << " z " << io::format_double(e.z)
            << " rho " << io::format_double(e.rho) << '\n';
    }
    out << "wrote: " << path << '\n';
    return kOk;
  });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.family_file.empty()) throw InvalidArgument("verify needs a family file");
    const auto rows = io::read_family_csv(config.family_file);
    if (rows.empty()) throw InvalidArgument("family file has no rows");
    const MassVector m(masses_for_verify(config));
    if (m.size() != rows.front().u.bodies()) throw InvalidArgument("mass count does not match the family file");
    const double period = config.period > 0.0 ? config.period : 2.0 * std::numbers::pi;

    std::vector<std::size_t> picked;
    if (!config.verify_kappas.empty()) {
      for (double k : config.verify_kappas) {
        const auto it = std::min_element(rows.begin(), rows.end(), [k](const auto& a, const auto& b) {
          return std::abs(a.kappa - k) < std::abs(b.kappa - k);
        });
        picked.push_back(static_cast<std::size_t>(it - rows.begin()));
      }
    } else {
      const std::size_t every = config.every > 0 ? config.every : std::max<std::size_t>(1, rows.size() / 10);
      for (std::size_t i = 0; i < rows.size(); i += every) picked.push_back(i);
      if (picked.back() != rows.size() - 1) picked.push_back(rows.size() - 1);
    }

    double max_drift = 0.0;
    std::size_t failures = 0;
    for (std::size_t i : picked) {
      const auto& row = rows[i];
      out << "row " << i << " kappa " << io::format_double(row.kappa);
      try {
        const DriftReport r = verify_re(row.u, m, row.kappa, period, config.verify_tol);
        max_drift = std::max(max_drift, r.max_drift);
        const bool ok = r.max_drift <= config.drift_threshold;
        if (!ok) ++failures;
        out << " drift " << io::format_double(r.max_drift) << " jacobi_drift " << io::format_double(r.jacobi_drift)
            << (ok ? " ok" : " FLAGGED") << '\n';
      } catch (const IntegrationError& e) {
        ++failures;
        out << " integration failure: " << e.what() << '\n';
      }
    }
    out << "verified rows: " << picked.size() << ", max drift " << io::format_double(max_drift) << ", flagged "
        << failures << '\n';
    return failures == 0 ? kOk : kVerificationFailed;
  });
}

}  // namespace curvedre::cli
