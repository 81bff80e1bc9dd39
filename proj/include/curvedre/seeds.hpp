#pragma once

#include "curvedre/errors.hpp"
#include "curvedre/gradient.hpp"
#include "curvedre/types.hpp"

#include <optional>
#include <string>

namespace curvedre {

/// A planar central configuration with its non-degeneracy analysis.
struct SeedReport {
  Configuration configuration;
  MassVector masses;
  /// max-norm of ∇L(·; 0)
  double residual = 0.0;
  /// Hessian eigenvalues, ascending by |value|.
  Vector hessian_spectrum;
  int kernel_dimension = 0;
  bool degenerate = true;
  /// |cos| of the angle between the near-kernel eigenvector and 𝒥a (0 when kernel_dimension != 1).
  double kernel_alignment = 0.0;
  int newton_iterations = 0;
  /// Routh's mass parameter, three-body seeds only.
  std::optional<double> routh_beta;
};

/// Regular n-gon of unit masses with circumradius ½ s₁^{1/3},
/// s₁ = ¼ Σ_{j=1}^{n-1} 1/sin(jπ/n). First vertex on the positive x axis.
Configuration polygon_cc(int n);
double polygon_radius(int n);

/// Equilateral triangle of side (M/8)^{1/3} with centre of mass at the origin.
Configuration lagrange_triangle(double m1, double m2, double m3);
double lagrange_side(double m1, double m2, double m3);

/// β = 27(m1m2 + m1m3 + m2m3)/(m1 + m2 + m3)².
double routh_beta(double m1, double m2, double m3);

/// max-norm of ∇L(u; 0).
double cc_residual(const Configuration& u, const MassVector& m);

/// Threshold on |λ|/max|λ| below which an eigenvalue counts as zero.
inline constexpr double kZeroEigenvalueRatio = 1e-6;

class RefinementError : public Error {
 public:
  RefinementError(const std::string& what, Configuration last) : Error(what), last_(std::move(last)) {}
  const Configuration& last_iterate() const { return last_; }

 private:
  Configuration last_;
};

/// Newton-refine a guess to a central configuration, anchoring the phase at u0.
SeedReport refine_cc(const Configuration& u0, const MassVector& m, double tol = 1e-13);

/// Kernel analysis of D²L(a; 0). Throws PreconditionError unless ∇L(a; 0) < 1e-10.
SeedReport check_nondegeneracy(const Configuration& a, const MassVector& m, double tol_zero = kZeroEigenvalueRatio);

struct KernelAnalysis {
  Spectrum spectrum;
  int kernel_dimension = 0;
  double alignment = 0.0;
};

/// Counts eigenvalues with |λ| < tol_zero·max|λ| and, for a one-dimensional
/// kernel, measures alignment of its eigenvector with `rotation_generator`.
KernelAnalysis analyze_kernel(const Matrix& hessian, const Vector& rotation_generator, double tol_zero);

}  // namespace curvedre
