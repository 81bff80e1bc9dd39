#pragma once

#include "curvedre/types.hpp"

#include <vector>

namespace curvedre {

using Point3 = Eigen::Vector3d;

/// Bodies placed on x² + y² + σz² = σR² (sphere for σ = +1, upper hyperboloid
/// sheet for σ = -1), or on the unit surface after rescale_unit.
struct EmbeddedConfiguration {
  std::vector<Point3> points;
  int sigma = 1;
  double radius = 1.0;
  bool rescaled = false;
  bool reflected = false;

  /// max over bodies of |x² + y² + σz² - σR²| (R = 1 once rescaled).
  double constraint_residual() const;
};

/// Inverse stereographic projection. The plane origin maps to (0, 0, -R) on the
/// sphere and to the vertex (0, 0, R) of the hyperboloid.
Point3 embed_point(const Point& u, double kappa);
EmbeddedConfiguration embed(const Configuration& u, double kappa);

/// Divide by R so the surface becomes x² + y² + σz² = σ; optionally negate z.
EmbeddedConfiguration rescale_unit(const EmbeddedConfiguration& ec, bool reflect);

struct LatitudeEntry {
  std::size_t body = 0;
  double mass = 0.0;
  double z = 0.0;
  /// Distance to the z axis.
  double rho = 0.0;
};

/// Per-body height and axis distance, ordered by ascending mass.
std::vector<LatitudeEntry> latitude_report(const EmbeddedConfiguration& ec, const MassVector& m);

}  // namespace curvedre
