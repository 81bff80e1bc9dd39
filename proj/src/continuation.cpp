#include "curvedre/continuation.hpp"

#include "curvedre/errors.hpp"
#include "curvedre/gradient.hpp"

#include <algorithm>
#include <cmath>

namespace curvedre {

std::string to_string(Direction d) { return d == Direction::Positive ? "pos" : "neg"; }

std::string to_string(Termination t) {
  switch (t) {
    case Termination::LimitReached: return "limit_reached";
    case Termination::MinStepUnderflow: return "min_step_underflow";
    case Termination::DomainError: return "domain_error";
    case Termination::AccuracyFloor: return "accuracy_floor";
    case Termination::StepFailed: return "step_failed";
  }
  return "unknown";
}

double restricted_min_abs_eig(const Configuration& u, const MassVector& m, double kappa) {
  const Matrix h = hessian_fd(u, m, kappa).values;
  const auto dim = h.rows();
  // Orthonormal basis whose first column is along 𝒥u; the rest span the complement.
  Eigen::HouseholderQR<Matrix> qr(Matrix(apply_j(u.coords())));
  const Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix basis = q.rightCols(dim - 1);
  const Spectrum s = spectrum(basis.transpose() * h * basis);
  return std::abs(s.values[0]);
}

namespace {

enum class Attempt { Converged, Stalled, Failed, Domain };

struct AttemptResult {
  Attempt outcome = Attempt::Failed;
  NewtonReport report;
  std::string detail;
};

AttemptResult attempt_step(const AugmentedState& from, const MassVector& m, double kappa, const PhaseAnchor& anchor,
                           const ContinuationOptions& options) {
  NewtonOptions newton;
  newton.tol = options.tol;
  newton.max_iters = options.max_newton_iters;
  AttemptResult out;
  try {
    out.report = newton_solve(from, m, kappa, anchor, newton);
  } catch (const NonConvergenceError& e) {
    out.outcome = e.best_residual() < options.floor_band ? Attempt::Stalled : Attempt::Failed;
    out.detail = e.what();
    return out;
  } catch (const SingularJacobianError& e) {
    out.detail = e.what();
    return out;
  } catch (const DomainError& e) {
    out.outcome = Attempt::Domain;
    out.detail = e.what();
    return out;
  }

  const double scale = from.u.coords().cwiseAbs().maxCoeff();
  const double jump = (out.report.state.u.coords() - from.u.coords()).cwiseAbs().maxCoeff();
  if (jump > options.max_relative_jump * scale) {
    out.detail = "corrector left the branch (jump " + std::to_string(jump) + ")";
    return out;
  }
  out.outcome = Attempt::Converged;
  return out;
}

}  // namespace

ContinuationFamily continue_family(const SeedReport& seed, Direction direction, const ContinuationOptions& options) {
  if (seed.degenerate || seed.kernel_dimension != 1)
    throw DegenerateSeedError("seed is degenerate (kernel dimension " + std::to_string(seed.kernel_dimension) + ")");
  if (!(options.step > 0.0) || !(options.tol > 0.0) || !(options.min_step > 0.0))
    throw InvalidArgument("continuation step, minimum step and tolerance must be positive");
  const double sign = direction == Direction::Positive ? 1.0 : -1.0;
  if (!(sign * options.kappa_limit > 0.0))
    throw InvalidArgument("kappa limit must lie in the continuation direction");

  const MassVector& m = seed.masses;
  const PhaseAnchor anchor(seed.configuration);

  ContinuationFamily family;
  family.masses = m;
  family.anchor = seed.configuration;
  family.direction = direction;

  // κ = 0 member, polished against the run tolerance.
  AugmentedState current{seed.configuration, 0.0};
  {
    NewtonOptions newton;
    newton.tol = options.tol;
    newton.max_iters = options.max_newton_iters;
    const NewtonReport r = newton_solve(current, m, 0.0, anchor, newton);
    current = r.state;
    family.records.push_back(FamilyRecord{0.0, current.u, current.alpha, r.residual, r.iterations,
                                          restricted_min_abs_eig(current.u, m, 0.0), 0.0});
  }

  double kappa = 0.0;
  double step = options.step;
  int easy = 0;
  int stalls = 0;
  auto terminate = [&](Termination cause, double attempted, std::string detail) {
    family.termination = TerminationRecord{cause, kappa, attempted, std::move(detail)};
    return family;
  };

  while (true) {
    const double remaining = std::abs(options.kappa_limit - kappa);
    if (remaining <= 1e-12 * std::max(1.0, std::abs(options.kappa_limit)))
      return terminate(Termination::LimitReached, kappa, "");

    // Land exactly on the limit when the step would reach it (or miss it by roundoff).
    const bool last = remaining - step <= 1e-9 * step;
    const double h = last ? remaining : step;
    // Fixed steps use grid multiples so κ does not accumulate rounding.
    double target = last               ? options.kappa_limit
                    : options.adaptive ? kappa + sign * h
                                       : sign * static_cast<double>(family.records.size()) * options.step;
    if (!last) {
      const double multiple = std::round(target / options.step) * options.step;
      if (std::abs(target - multiple) <= 1e-9 * options.step) target = multiple;
    }
    const AttemptResult result = attempt_step(current, m, target, anchor, options);

    if (result.outcome == Attempt::Converged) {
      current = result.report.state;
      kappa = target;
      stalls = 0;
      family.records.push_back(FamilyRecord{kappa, current.u, current.alpha, result.report.residual,
                                            result.report.iterations, restricted_min_abs_eig(current.u, m, kappa), h});
      if (options.adaptive) {
        easy = result.report.iterations <= options.easy_iterations ? easy + 1 : 0;
        if (easy >= options.easy_streak) {
          step = std::min(2.0 * step, options.step);
          easy = 0;
        }
      }
      continue;
    }

    easy = 0;
    if (result.outcome == Attempt::Stalled) {
      if (++stalls >= options.floor_attempts || !options.adaptive)
        return terminate(Termination::AccuracyFloor, target, result.detail);
    } else {
      stalls = 0;
    }
    if (!options.adaptive) {
      return terminate(result.outcome == Attempt::Domain ? Termination::DomainError : Termination::StepFailed, target,
                       result.detail);
    }
    step *= 0.5;
    if (step < options.min_step) {
      return terminate(result.outcome == Attempt::Domain ? Termination::DomainError : Termination::MinStepUnderflow,
                       target, result.detail);
    }
  }
}

FamilyDiagnostics family_diagnostics(const ContinuationFamily& family) {
  FamilyDiagnostics d;
  if (family.records.empty()) throw InvalidArgument("family has no records");
  const double reference = family.records.front().min_abs_eig;
  for (std::size_t i = 0; i < family.records.size(); ++i) {
    const FamilyRecord& r = family.records[i];
    d.kappa.push_back(r.kappa);
    d.min_abs_eig.push_back(r.min_abs_eig);
    d.newton_iters.push_back(r.newton_iters);
    d.min_radius.push_back(r.u.min_radius());
    if (i > 0 && r.min_abs_eig < 1e-6 * reference) d.flagged.push_back(i);
  }
  return d;
}

}  // namespace curvedre
