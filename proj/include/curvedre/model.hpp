#pragma once

#include "curvedre/types.hpp"

namespace curvedre {

/// Separations below this raise CollisionError.
inline constexpr double kCollisionThreshold = 1e-12;
/// B(u_j, u_k; κ) below this raises AntipodalError (κ > 0).
inline constexpr double kAntipodalThreshold = 1e-12;
/// 1 + κ|u|² below this raises DiskBoundaryError.
inline constexpr double kDiskThreshold = 1e-12;

/// λ(u; κ) = 4 / (1 + κ|u|²)².
double conformal_factor(const Point& u, double kappa);

/// Unified cotangent-type pair potential
///   V = N / (2 |u_j - u_k| sqrt(B)),
///   N = 4κ(u_j·u_k) + (κ|u_k|² - 1)(κ|u_j|² - 1),
///   B = κ²|u_j|²|u_k|² + 2κ(u_j·u_k) + 1.
/// Finite and analytic through κ = 0, where it reduces to 1/(2|u_j - u_k|).
double pair_potential(const Point& uj, const Point& uk, double kappa);

/// The factor B(u_j, u_k; κ) under the square root of the pair potential.
double pair_b(const Point& uj, const Point& uk, double kappa);

/// Throws the matching DomainError if any body sits on or outside the disk
/// (κ < 0) or any pair collides.
void check_domain(const Configuration& u, double kappa);

/// U = Σ_{j<k} m_j m_k V(u_j, u_k; κ).
double potential_energy(const Configuration& u, const MassVector& m, double kappa);

/// Steady kinetic energy ½ Σ m_j λ(u_j; κ) |u_j|² of the unit-frequency rotation.
double kinetic_steady(const Configuration& u, const MassVector& m, double kappa);

/// L(u; κ) = kinetic_steady + potential_energy, without truncation in κ.
double lagrangian_steady(const Configuration& u, const MassVector& m, double kappa);

namespace detail {
// Pair potential with body indices for error reporting.
double pair_potential(const Point& uj, const Point& uk, double kappa, std::size_t j, std::size_t k);
}  // namespace detail

}  // namespace curvedre
