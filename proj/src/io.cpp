#include "curvedre/io.hpp"

#include "curvedre/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace curvedre::io {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void atomic_write(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw Error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string family_csv_header(std::size_t bodies) {
  std::string h = "kappa,alpha,residual,newton_iters,min_abs_eig";
  for (std::size_t j = 1; j <= bodies; ++j) h += ",x_" + std::to_string(j) + ",y_" + std::to_string(j);
  return h;
}

std::string family_to_csv(const ContinuationFamily& family) {
  std::ostringstream os;
  const std::size_t n = family.anchor.bodies();
  os << family_csv_header(n) << '\n';
  for (const auto& r : family.records) {
    os << format_double(r.kappa) << ',' << format_double(r.alpha) << ',' << format_double(r.residual) << ','
       << r.newton_iters << ',' << format_double(r.min_abs_eig);
    for (Eigen::Index i = 0; i < r.u.coords().size(); ++i) os << ',' << format_double(r.u.coords()[i]);
    os << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument("line " + std::to_string(line) + ": malformed number '" + s + "'");
  }
}

}  // namespace

std::vector<FamilyFileRow> parse_family_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("family file is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_csv(line);
  if (header.size() < 9 || (header.size() - 5) % 2 != 0 || header[0] != "kappa")
    throw InvalidArgument("family file has an unexpected header");
  const std::size_t bodies = (header.size() - 5) / 2;
  if (line != family_csv_header(bodies)) throw InvalidArgument("family file has an unexpected header");

  std::vector<FamilyFileRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != header.size())
      throw InvalidArgument("line " + std::to_string(lineno) + ": expected " + std::to_string(header.size()) +
                            " columns");
    FamilyFileRow row;
    row.kappa = parse_number(cells[0], lineno);
    row.alpha = parse_number(cells[1], lineno);
    row.residual = parse_number(cells[2], lineno);
    row.newton_iters = static_cast<int>(parse_number(cells[3], lineno));
    row.min_abs_eig = parse_number(cells[4], lineno);
    Vector c(static_cast<Eigen::Index>(2 * bodies));
    for (std::size_t i = 0; i < 2 * bodies; ++i) c[static_cast<Eigen::Index>(i)] = parse_number(cells[5 + i], lineno);
    row.u = Configuration(std::move(c));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<FamilyFileRow> read_family_csv(const std::filesystem::path& path) {
  return parse_family_csv(read_file(path));
}

std::string embedded_to_csv(const std::vector<EmbeddedRow>& rows) {
  std::ostringstream os;
  os << "kappa,body_index,x,y,z\n";
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.configuration.points.size(); ++j) {
      const auto& p = row.configuration.points[j];
      os << format_double(row.kappa) << ',' << j << ',' << format_double(p.x()) << ',' << format_double(p.y()) << ','
         << format_double(p.z()) << '\n';
    }
  }
  return os.str();
}

nlohmann::json configuration_to_json(const Configuration& u) {
  nlohmann::json points = nlohmann::json::array();
  for (std::size_t j = 0; j < u.bodies(); ++j) points.push_back({u.point(j).x(), u.point(j).y()});
  return points;
}

Configuration configuration_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("positions must be a non-empty array of [x, y] pairs");
  std::vector<Point> pts;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw InvalidArgument("each position must be an [x, y] pair");
    pts.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return Configuration::from_points(pts);
}

nlohmann::json seed_to_json(const SeedReport& seed) {
  nlohmann::json j;
  j["masses"] = seed.masses.values();
  j["positions"] = configuration_to_json(seed.configuration);
  j["residual"] = seed.residual;
  j["kernel_dimension"] = seed.kernel_dimension;
  j["kernel_alignment"] = seed.kernel_alignment;
  j["degenerate"] = seed.degenerate;
  j["hessian_spectrum"] = std::vector<double>(seed.hessian_spectrum.data(),
                                              seed.hessian_spectrum.data() + seed.hessian_spectrum.size());
  j["circumradius"] = seed.configuration.max_radius();
  if (seed.routh_beta) j["routh_beta"] = *seed.routh_beta;
  return j;
}

SeedFile parse_seed_json(const nlohmann::json& j) {
  SeedFile out;
  if (!j.contains("positions")) throw InvalidArgument("seed file has no 'positions'");
  out.positions = configuration_from_json(j.at("positions"));
  if (j.contains("masses")) out.masses = j.at("masses").get<std::vector<double>>();
  return out;
}

}  // namespace curvedre::io
