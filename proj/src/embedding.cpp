#include "curvedre/embedding.hpp"

#include "curvedre/errors.hpp"
#include "curvedre/model.hpp"

#include <algorithm>
#include <cmath>

namespace curvedre {

double EmbeddedConfiguration::constraint_residual() const {
  const double r2 = rescaled ? 1.0 : radius * radius;
  double worst = 0.0;
  for (const auto& p : points) {
    const double lhs = p.x() * p.x() + p.y() * p.y() + sigma * p.z() * p.z();
    worst = std::max(worst, std::abs(lhs - sigma * r2));
  }
  return worst;
}

Point3 embed_point(const Point& u, double kappa) {
  const Curvature c(kappa);
  const double r = c.radius();
  const double r2 = r * r;
  const double s = u.squaredNorm();
  if (c.sign() > 0) {
    const double denom = s + r2;
    return Point3(2.0 * r2 * u.x() / denom, 2.0 * r2 * u.y() / denom, r * (s - r2) / denom);
  }
  if (1.0 + kappa * s < kDiskThreshold) throw DiskBoundaryError(std::size_t(-1), s, kappa);
  const double denom = r2 - s;
  return Point3(2.0 * r2 * u.x() / denom, 2.0 * r2 * u.y() / denom, r * (r2 + s) / denom);
}

EmbeddedConfiguration embed(const Configuration& u, double kappa) {
  const Curvature c(kappa);
  EmbeddedConfiguration ec;
  ec.sigma = c.sign();
  ec.radius = c.radius();
  ec.points.reserve(u.bodies());
  for (std::size_t j = 0; j < u.bodies(); ++j) {
    const Point p = u.point(j);
    if (1.0 + kappa * p.squaredNorm() < kDiskThreshold) throw DiskBoundaryError(j, p.squaredNorm(), kappa);
    ec.points.push_back(embed_point(p, kappa));
  }
  return ec;
}

EmbeddedConfiguration rescale_unit(const EmbeddedConfiguration& ec, bool reflect) {
  if (ec.rescaled) throw InvalidArgument("configuration is already rescaled");
  EmbeddedConfiguration out = ec;
  for (auto& p : out.points) {
    p /= ec.radius;
    if (reflect) p.z() = -p.z();
  }
  out.rescaled = true;
  out.reflected = reflect;
  return out;
}

std::vector<LatitudeEntry> latitude_report(const EmbeddedConfiguration& ec, const MassVector& m) {
  if (!ec.rescaled) throw PreconditionError("latitude report expects a rescaled configuration");
  if (m.size() != ec.points.size()) throw InvalidArgument("mass count does not match embedded configuration");
  std::vector<LatitudeEntry> out;
  for (std::size_t j = 0; j < ec.points.size(); ++j) {
    const Point3& p = ec.points[j];
    out.push_back(LatitudeEntry{j, m[j], p.z(), std::hypot(p.x(), p.y())});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.mass < b.mass; });
  return out;
}

}  // namespace curvedre
