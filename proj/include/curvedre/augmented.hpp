#pragma once

#include "curvedre/errors.hpp"
#include "curvedre/types.hpp"

#include <vector>

namespace curvedre {

/// A configuration together with the rotation multiplier α.
struct AugmentedState {
  Configuration u;
  double alpha = 0.0;

  Vector packed() const;
  static AugmentedState unpack(const Vector& x);
};

/// Poincaré section through the planar seed: ⟨u - a, e⟩ = 0 with e = 𝒥a.
class PhaseAnchor {
 public:
  explicit PhaseAnchor(Configuration reference);
  const Configuration& reference() const { return reference_; }
  const Vector& normal() const { return normal_; }

 private:
  Configuration reference_;
  Vector normal_;
};

/// F(u, α; κ) = (∇L(u; κ) + α𝒥u, ⟨u - a, 𝒥a⟩), a (2n+1)-vector.
Vector augmented_map(const AugmentedState& s, const MassVector& m, double kappa, const PhaseAnchor& anchor);

/// Bordered Jacobian [[D²L + α𝒥, 𝒥u], [eᵀ, 0]] with D²L by finite differences.
Matrix augmented_jacobian(const AugmentedState& s, const MassVector& m, double kappa, const PhaseAnchor& anchor);

struct NewtonOptions {
  double tol = 1e-13;
  int max_iters = 30;
  /// Smallest Armijo damping factor tried (2^-10).
  double damping_floor = 1.0 / 1024.0;
  double armijo_c = 1e-4;
  /// Reciprocal condition estimate below which the Jacobian counts as singular.
  double singular_rcond = 1e-14;
};

struct NewtonReport {
  AugmentedState state;
  int iterations = 0;
  double residual = 0.0;
  std::vector<double> history;  // ‖F‖_max before each iteration and at exit
};

/// Newton solve failed to reach the tolerance within the iteration budget.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(AugmentedState last, std::vector<double> history);
  const AugmentedState& last_iterate() const { return last_; }
  const std::vector<double>& history() const { return history_; }
  double best_residual() const;

 private:
  AugmentedState last_;
  std::vector<double> history_;
};

/// The bordered Jacobian is numerically singular (fold or bifurcation suspect).
class SingularJacobianError : public Error {
 public:
  SingularJacobianError(AugmentedState at, double rcond);
  const AugmentedState& state() const { return at_; }
  double rcond() const { return rcond_; }

 private:
  AugmentedState at_;
  double rcond_;
};

/// Damped Newton on F with Armijo backtracking on ‖F‖².
NewtonReport newton_solve(const AugmentedState& s0, const MassVector& m, double kappa, const PhaseAnchor& anchor,
                          const NewtonOptions& options = {});

}  // namespace curvedre
