#pragma once

#include "curvedre/errors.hpp"
#include "curvedre/types.hpp"

#include <vector>

namespace curvedre {

/// Positions and velocities u̇ in the frame rotating with unit frequency.
struct PhaseState {
  Vector u;
  Vector v;
};

/// Euler-Lagrange field of L = ½ Σ m_j λ(u_j)|v_j + 𝒥u_j|² + U(u).
/// Returns (u̇, v̇).
PhaseState eom_rhs(const PhaseState& s, const MassVector& m, double kappa);

/// T₂ - T₀ - U: kinetic part quadratic in v minus the v-independent part,
/// conserved by the rotating-frame flow.
double jacobi_constant(const PhaseState& s, const MassVector& m, double kappa);

struct Trajectory {
  std::vector<double> times;
  std::vector<PhaseState> states;
};

class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, Trajectory partial) : Error(what), partial_(std::move(partial)) {}
  const Trajectory& partial() const { return partial_; }

 private:
  Trajectory partial_;
};

struct IntegrateOptions {
  double tol = 1e-10;
  /// Steps shorter than this abort the integration.
  double min_step = 1e-12;
};

/// Adaptive Dormand-Prince 5(4) with dense output, sampled at `sample_times`
/// (ascending, first entry is the initial time).
Trajectory integrate(const PhaseState& s0, const MassVector& m, double kappa, const std::vector<double>& sample_times,
                     const IntegrateOptions& options = {});

struct DriftReport {
  double max_drift = 0.0;
  double jacobi_drift = 0.0;
  std::size_t samples = 0;
};

/// Integrates from (u*, 0) over [0, period] and reports max_t ‖u(t) - u*‖_max.
DriftReport verify_re(const Configuration& u_star, const MassVector& m, double kappa, double period, double tol,
                      std::size_t samples = 400);

}  // namespace curvedre
