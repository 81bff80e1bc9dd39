#include "curvedre/model.hpp"

#include "curvedre/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace curvedre {

namespace {
constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

std::string pair_label(std::size_t j, std::size_t k) {
  if (j == kNoIndex) return "pair";
  return "pair (" + std::to_string(j) + ", " + std::to_string(k) + ")";
}
}  // namespace

CollisionError::CollisionError(std::size_t j, std::size_t k, double separation)
    : DomainError("collision: " + pair_label(j, k) + " separation " + std::to_string(separation)),
      j_(j), k_(k), separation_(separation) {}

AntipodalError::AntipodalError(std::size_t j, std::size_t k, double b_value)
    : DomainError("antipodal singularity: " + pair_label(j, k) + " B = " + std::to_string(b_value)),
      j_(j), k_(k), b_(b_value) {}

DiskBoundaryError::DiskBoundaryError(std::size_t body, double radius_squared, double kappa)
    : DomainError([&] {
        std::ostringstream os;
        os << "point ";
        if (body != kNoIndex) os << body << ' ';
        os << "at |u|^2 = " << radius_squared << " is outside the Poincare disk for kappa = " << kappa;
        return os.str();
      }()),
      body_(body) {}

double conformal_factor(const Point& u, double kappa) {
  const double r2 = u.squaredNorm();
  const double s = 1.0 + kappa * r2;
  if (s < kDiskThreshold) throw DiskBoundaryError(kNoIndex, r2, kappa);
  return 4.0 / (s * s);
}

double pair_b(const Point& uj, const Point& uk, double kappa) {
  return uk.squaredNorm() * uj.squaredNorm() * kappa * kappa + 2.0 * uj.dot(uk) * kappa + 1.0;
}

namespace detail {

double pair_potential(const Point& uj, const Point& uk, double kappa, std::size_t j, std::size_t k) {
  const double dist = (uj - uk).norm();
  if (dist < kCollisionThreshold) throw CollisionError(j, k, dist);
  const double b = pair_b(uj, uk, kappa);
  if (b < kAntipodalThreshold) {
    if (kappa > 0.0) throw AntipodalError(j, k, b);
    // B > 0 everywhere inside the disk, so a vanishing B means a point left it.
    throw DiskBoundaryError(j, std::max(uj.squaredNorm(), uk.squaredNorm()), kappa);
  }
  const double n = 4.0 * uj.dot(uk) * kappa + (uk.squaredNorm() * kappa - 1.0) * (uj.squaredNorm() * kappa - 1.0);
  return n / (2.0 * dist * std::sqrt(b));
}

}  // namespace detail

double pair_potential(const Point& uj, const Point& uk, double kappa) {
  return detail::pair_potential(uj, uk, kappa, kNoIndex, kNoIndex);
}

void check_domain(const Configuration& u, double kappa) {
  const std::size_t n = u.bodies();
  for (std::size_t j = 0; j < n; ++j) {
    const double r2 = u.point(j).squaredNorm();
    if (1.0 + kappa * r2 < kDiskThreshold) throw DiskBoundaryError(j, r2, kappa);
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const double dist = (u.point(j) - u.point(k)).norm();
      if (dist < kCollisionThreshold) throw CollisionError(j, k, dist);
    }
  }
}

double potential_energy(const Configuration& u, const MassVector& m, double kappa) {
  if (m.size() != u.bodies()) throw InvalidArgument("mass count does not match configuration");
  check_domain(u, kappa);
  double total = 0.0;
  for (std::size_t j = 0; j < u.bodies(); ++j) {
    for (std::size_t k = j + 1; k < u.bodies(); ++k)
      total += m[j] * m[k] * detail::pair_potential(u.point(j), u.point(k), kappa, j, k);
  }
  return total;
}

double kinetic_steady(const Configuration& u, const MassVector& m, double kappa) {
  if (m.size() != u.bodies()) throw InvalidArgument("mass count does not match configuration");
  double total = 0.0;
  for (std::size_t j = 0; j < u.bodies(); ++j) {
    const Point p = u.point(j);
    const double r2 = p.squaredNorm();
    if (1.0 + kappa * r2 < kDiskThreshold) throw DiskBoundaryError(j, r2, kappa);
    total += 0.5 * m[j] * conformal_factor(p, kappa) * r2;
  }
  return total;
}

double lagrangian_steady(const Configuration& u, const MassVector& m, double kappa) {
  return kinetic_steady(u, m, kappa) + potential_energy(u, m, kappa);
}

}  // namespace curvedre
