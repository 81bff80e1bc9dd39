#include "curvedre/seeds.hpp"

#include "curvedre/augmented.hpp"
#include "curvedre/errors.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace curvedre {

double polygon_radius(int n) {
  if (n < 2) throw InvalidArgument("polygon needs at least two vertices");
  double s1 = 0.0;
  for (int j = 1; j < n; ++j) s1 += 1.0 / std::sin(j * std::numbers::pi / n);
  s1 *= 0.25;
  return 0.5 * std::cbrt(s1);
}

Configuration polygon_cc(int n) {
  const double r = polygon_radius(n);
  Vector c(2 * n);
  for (int j = 0; j < n; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / n;
    c[2 * j] = r * std::cos(angle);
    c[2 * j + 1] = r * std::sin(angle);
  }
  return Configuration(std::move(c));
}

double lagrange_side(double m1, double m2, double m3) {
  const MassVector m({m1, m2, m3});
  return std::cbrt(m.total() / 8.0);
}

Configuration lagrange_triangle(double m1, double m2, double m3) {
  const double d = lagrange_side(m1, m2, m3);
  const double total = m1 + m2 + m3;
  std::vector<Point> p{Point(0.0, 0.0), Point(d, 0.0), Point(0.5 * d, 0.5 * d * std::sqrt(3.0))};
  const Point com = (m1 * p[0] + m2 * p[1] + m3 * p[2]) / total;
  for (auto& q : p) q -= com;
  return Configuration::from_points(p);
}

double routh_beta(double m1, double m2, double m3) {
  const double total = m1 + m2 + m3;
  return 27.0 * (m1 * m2 + m1 * m3 + m2 * m3) / (total * total);
}

double cc_residual(const Configuration& u, const MassVector& m) {
  return grad_lagrangian(u, m, 0.0).cwiseAbs().maxCoeff();
}

KernelAnalysis analyze_kernel(const Matrix& hessian, const Vector& rotation_generator, double tol_zero) {
  KernelAnalysis out;
  out.spectrum = spectrum(hessian);
  const double scale = out.spectrum.max_abs();
  for (Eigen::Index i = 0; i < out.spectrum.values.size(); ++i) {
    if (std::abs(out.spectrum.values[i]) < tol_zero * scale) ++out.kernel_dimension;
  }
  if (out.kernel_dimension == 1 && rotation_generator.norm() > 0.0) {
    out.alignment = std::abs(out.spectrum.vectors.col(0).dot(rotation_generator.normalized()));
  }
  return out;
}

SeedReport check_nondegeneracy(const Configuration& a, const MassVector& m, double tol_zero) {
  const double residual = cc_residual(a, m);
  if (!(residual < 1e-10))
    throw PreconditionError("configuration is not a central configuration (residual " + std::to_string(residual) + ")");

  const KernelAnalysis k = analyze_kernel(hessian_fd(a, m, 0.0).values, apply_j(a.coords()), tol_zero);
  SeedReport report;
  report.configuration = a;
  report.masses = m;
  report.residual = residual;
  report.hessian_spectrum = k.spectrum.values;
  report.kernel_dimension = k.kernel_dimension;
  report.kernel_alignment = k.alignment;
  report.degenerate = k.kernel_dimension != 1 || k.alignment <= 0.999;
  if (m.size() == 3) report.routh_beta = routh_beta(m[0], m[1], m[2]);
  return report;
}

SeedReport refine_cc(const Configuration& u0, const MassVector& m, double tol) {
  const PhaseAnchor anchor(u0);
  NewtonOptions options;
  options.tol = tol;
  options.max_iters = 60;
  NewtonReport solved;
  try {
    solved = newton_solve(AugmentedState{u0, 0.0}, m, 0.0, anchor, options);
  } catch (const NonConvergenceError& e) {
    throw RefinementError(std::string("central configuration refinement failed: ") + e.what(), e.last_iterate().u);
  } catch (const SingularJacobianError& e) {
    throw RefinementError(std::string("central configuration refinement failed: ") + e.what(), e.state().u);
  }
  if (!(std::abs(solved.state.alpha) < 1e-10))
    throw RefinementError("refined state has nonzero multiplier", solved.state.u);

  SeedReport report = check_nondegeneracy(solved.state.u, m);
  report.newton_iterations = solved.iterations;
  return report;
}

}  // namespace curvedre
