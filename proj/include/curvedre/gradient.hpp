#pragma once

#include "curvedre/types.hpp"

namespace curvedre {

/// Gradient ordered (∂/∂x_1, ∂/∂y_1, ..., ∂/∂x_n, ∂/∂y_n).
using GradientVector = Vector;

/// Central-difference Hessian, symmetrized. `symmetry_defect` is
/// max|H - Hᵀ| of the raw difference quotients.
struct HessianMatrix {
  Matrix values;
  double symmetry_defect = 0.0;
};

/// Eigenpairs of a symmetric matrix, ordered by ascending |eigenvalue|.
struct Spectrum {
  Vector values;
  Matrix vectors;  // column i pairs with values[i]
  double max_abs() const { return values.size() ? values.cwiseAbs().maxCoeff() : 0.0; }
};

/// ∂V(u_j, u_k; κ)/∂u_k, the gradient with respect to the second point.
Point grad_pair_potential(const Point& uj, const Point& uk, double kappa);

/// Analytic ∇_u U(u; κ) of the potential energy alone.
GradientVector grad_potential(const Configuration& u, const MassVector& m, double kappa);

/// Analytic ∇_u L(u; κ) of the steady Lagrangian.
GradientVector grad_lagrangian(const Configuration& u, const MassVector& m, double kappa);

/// Step sizes used when callers do not supply one.
double default_gradient_step(const Configuration& u);
double default_hessian_step(const Configuration& u);

/// Central differences of lagrangian_steady with componentwise step h.
GradientVector grad_fd_oracle(const Configuration& u, const MassVector& m, double kappa, double h);

/// Central differences of grad_lagrangian with step h.
HessianMatrix hessian_fd(const Configuration& u, const MassVector& m, double kappa, double h);
HessianMatrix hessian_fd(const Configuration& u, const MassVector& m, double kappa);

/// Symmetric eigendecomposition; throws EigenSolverError if it does not converge.
Spectrum spectrum(const Matrix& h);

}  // namespace curvedre
