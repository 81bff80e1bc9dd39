#include "curvedre/augmented.hpp"

#include "curvedre/gradient.hpp"
#include "curvedre/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace curvedre {

Vector AugmentedState::packed() const {
  Vector x(u.coords().size() + 1);
  x.head(u.coords().size()) = u.coords();
  x[x.size() - 1] = alpha;
  return x;
}

AugmentedState AugmentedState::unpack(const Vector& x) {
  return AugmentedState{Configuration(x.head(x.size() - 1)), x[x.size() - 1]};
}

PhaseAnchor::PhaseAnchor(Configuration reference)
    : reference_(std::move(reference)), normal_(apply_j(reference_.coords())) {
  if (normal_.squaredNorm() == 0.0) throw InvalidArgument("phase anchor must not be the zero configuration");
}

NonConvergenceError::NonConvergenceError(AugmentedState last, std::vector<double> history)
    : Error([&] {
        std::ostringstream os;
        os << "Newton did not converge in " << (history.empty() ? 0 : history.size() - 1) << " iterations";
        if (!history.empty()) os << ", residual " << history.back();
        return os.str();
      }()),
      last_(std::move(last)), history_(std::move(history)) {}

double NonConvergenceError::best_residual() const {
  if (history_.empty()) return std::numeric_limits<double>::infinity();
  return *std::min_element(history_.begin(), history_.end());
}

SingularJacobianError::SingularJacobianError(AugmentedState at, double rcond)
    : Error("bordered Jacobian is singular (rcond " + std::to_string(rcond) + ")"), at_(std::move(at)), rcond_(rcond) {}

Vector augmented_map(const AugmentedState& s, const MassVector& m, double kappa, const PhaseAnchor& anchor) {
  const Vector& u = s.u.coords();
  if (u.size() != anchor.normal().size()) throw InvalidArgument("state and anchor sizes differ");
  Vector f(u.size() + 1);
  f.head(u.size()) = grad_lagrangian(s.u, m, kappa) + s.alpha * apply_j(u);
  f[u.size()] = (u - anchor.reference().coords()).dot(anchor.normal());
  return f;
}

Matrix augmented_jacobian(const AugmentedState& s, const MassVector& m, double kappa, const PhaseAnchor& anchor) {
  const auto dim = s.u.coords().size();
  Matrix jac = Matrix::Zero(dim + 1, dim + 1);
  jac.topLeftCorner(dim, dim) = hessian_fd(s.u, m, kappa).values + s.alpha * j_matrix(s.u.bodies());
  jac.topRightCorner(dim, 1) = apply_j(s.u.coords());
  jac.bottomLeftCorner(1, dim) = anchor.normal().transpose();
  return jac;
}

NewtonReport newton_solve(const AugmentedState& s0, const MassVector& m, double kappa, const PhaseAnchor& anchor,
                          const NewtonOptions& options) {
  Vector x = s0.packed();
  Vector f = augmented_map(s0, m, kappa, anchor);
  std::vector<double> history{f.cwiseAbs().maxCoeff()};

  for (int iter = 0;; ++iter) {
    if (history.back() < options.tol)
      return NewtonReport{AugmentedState::unpack(x), iter, history.back(), std::move(history)};
    if (iter >= options.max_iters) throw NonConvergenceError(AugmentedState::unpack(x), std::move(history));

    const AugmentedState current = AugmentedState::unpack(x);
    const Eigen::PartialPivLU<Matrix> lu(augmented_jacobian(current, m, kappa, anchor));
    const double rcond = lu.rcond();
    if (!(rcond > options.singular_rcond)) throw SingularJacobianError(current, rcond);
    const Vector step = lu.solve(-f);

    // Armijo backtracking; if no factor passes, keep the best trial seen.
    const double merit = f.squaredNorm();
    double t = 1.0;
    Vector best_x, best_f;
    double best_merit = std::numeric_limits<double>::infinity();
    while (true) {
      const Vector trial = x + t * step;
      try {
        const Vector ft = augmented_map(AugmentedState::unpack(trial), m, kappa, anchor);
        const double mt = ft.squaredNorm();
        if (mt < best_merit) {
          best_merit = mt;
          best_x = trial;
          best_f = ft;
        }
        if (mt <= (1.0 - 2.0 * options.armijo_c * t) * merit) break;
      } catch (const DomainError&) {
        // trial left the admissible set; shorten the step
      }
      if (t <= options.damping_floor) break;
      t *= 0.5;
    }
    if (best_x.size() == 0) throw NonConvergenceError(current, std::move(history));
    x = std::move(best_x);
    f = std::move(best_f);
    history.push_back(f.cwiseAbs().maxCoeff());
  }
}

}  // namespace curvedre
