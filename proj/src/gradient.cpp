#include "curvedre/gradient.hpp"

#include "curvedre/errors.hpp"
#include "curvedre/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace curvedre {

namespace {

Point grad_pair_indexed(const Point& uj, const Point& uk, double kappa, std::size_t j, std::size_t k) {
  // Evaluate V once for the domain checks it performs.
  (void)detail::pair_potential(uj, uk, kappa, j, k);

  const double a = (uj - uk).squaredNorm();
  const double b = pair_b(uj, uk, kappa);
  const double rj2 = uj.squaredNorm();
  const double rk2 = uk.squaredNorm();
  const double n = 4.0 * uj.dot(uk) * kappa + (rk2 * kappa - 1.0) * (rj2 * kappa - 1.0);

  const Point dn = 4.0 * kappa * uj + 2.0 * kappa * (rj2 * kappa - 1.0) * uk;
  const Point half_da = -(uj - uk);                       // ½ ∂A/∂u_k
  const Point half_db = kappa * kappa * rj2 * uk + kappa * uj;  // ½ ∂B/∂u_k

  const double sa = std::sqrt(a);
  const double sb = std::sqrt(b);
  // V = N / (2 A^{1/2} B^{1/2})
  return 0.5 * dn / (sa * sb) - 0.5 * n / (a * b) * (half_da * (sb / sa) + half_db * (sa / sb));
}

}  // namespace

Point grad_pair_potential(const Point& uj, const Point& uk, double kappa) {
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  return grad_pair_indexed(uj, uk, kappa, none, none);
}

GradientVector grad_potential(const Configuration& u, const MassVector& m, double kappa) {
  const std::size_t n = u.bodies();
  if (m.size() != n) throw InvalidArgument("mass count does not match configuration");
  check_domain(u, kappa);

  GradientVector g = GradientVector::Zero(2 * static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const double mm = m[j] * m[k];
      g.segment<2>(2 * static_cast<Eigen::Index>(k)) += mm * grad_pair_indexed(u.point(j), u.point(k), kappa, j, k);
      g.segment<2>(2 * static_cast<Eigen::Index>(j)) += mm * grad_pair_indexed(u.point(k), u.point(j), kappa, k, j);
    }
  }
  return g;
}

GradientVector grad_lagrangian(const Configuration& u, const MassVector& m, double kappa) {
  GradientVector g = grad_potential(u, m, kappa);
  for (std::size_t k = 0; k < u.bodies(); ++k) {
    const Point p = u.point(k);
    const double r2 = p.squaredNorm();
    const double lambda = conformal_factor(p, kappa);
    // ∂T/∂u_k = m_k λ (u_k - 2κ|u_k|² u_k / (1 + κ|u_k|²))
    g.segment<2>(2 * static_cast<Eigen::Index>(k)) += m[k] * lambda * (p - 2.0 * kappa * r2 / (1.0 + kappa * r2) * p);
  }
  return g;
}

double default_gradient_step(const Configuration& u) {
  return 1e-6 * std::max(1.0, u.coords().cwiseAbs().maxCoeff());
}

double default_hessian_step(const Configuration& u) {
  return 1e-5 * std::max(1.0, u.coords().cwiseAbs().maxCoeff());
}

GradientVector grad_fd_oracle(const Configuration& u, const MassVector& m, double kappa, double h) {
  if (!(h > 0.0)) throw InvalidArgument("finite-difference step must be positive");
  const auto dim = u.coords().size();
  GradientVector g(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    Vector plus = u.coords(), minus = u.coords();
    plus[i] += h;
    minus[i] -= h;
    g[i] = (lagrangian_steady(Configuration(plus), m, kappa) - lagrangian_steady(Configuration(minus), m, kappa)) /
           (2.0 * h);
  }
  return g;
}

HessianMatrix hessian_fd(const Configuration& u, const MassVector& m, double kappa, double h) {
  if (!(h > 0.0)) throw InvalidArgument("finite-difference step must be positive");
  const auto dim = u.coords().size();
  Matrix raw(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    Vector plus = u.coords(), minus = u.coords();
    plus[i] += h;
    minus[i] -= h;
    raw.col(i) = (grad_lagrangian(Configuration(plus), m, kappa) - grad_lagrangian(Configuration(minus), m, kappa)) /
                 (2.0 * h);
  }
  HessianMatrix out;
  out.symmetry_defect = (raw - raw.transpose()).cwiseAbs().maxCoeff();
  out.values = 0.5 * (raw + raw.transpose());
  return out;
}

HessianMatrix hessian_fd(const Configuration& u, const MassVector& m, double kappa) {
  return hessian_fd(u, m, kappa, default_hessian_step(u));
}

Spectrum spectrum(const Matrix& h) {
  if (h.rows() != h.cols()) throw InvalidArgument("spectrum needs a square matrix");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) throw EigenSolverError("symmetric eigensolver did not converge");

  const auto dim = h.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(dim));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  const Vector& ev = solver.eigenvalues();
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return std::abs(ev[a]) < std::abs(ev[b]); });

  Spectrum out;
  out.values.resize(dim);
  out.vectors.resize(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    out.values[i] = ev[order[static_cast<std::size_t>(i)]];
    out.vectors.col(i) = solver.eigenvectors().col(order[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace curvedre
