#pragma once

#include "curvedre/augmented.hpp"
#include "curvedre/seeds.hpp"

#include <string>
#include <vector>

namespace curvedre {

enum class Direction { Positive, Negative };

std::string to_string(Direction d);

/// One converged member of a continued branch.
struct FamilyRecord {
  double kappa = 0.0;
  Configuration u;
  double alpha = 0.0;
  double residual = 0.0;
  int newton_iters = 0;
  /// Smallest |eigenvalue| of D²L restricted to the complement of 𝒥u.
  double min_abs_eig = 0.0;
  double step_used = 0.0;
};

enum class Termination {
  LimitReached,
  /// Step halving underflowed the minimum step: fold or bifurcation suspect.
  MinStepUnderflow,
  DomainError,
  /// Newton stalls just above the tolerance for consecutive attempts.
  AccuracyFloor,
  /// Fixed-step mode stops at the first failed step.
  StepFailed,
};

std::string to_string(Termination t);

struct TerminationRecord {
  Termination cause = Termination::LimitReached;
  /// Last κ stored in the family.
  double terminal_kappa = 0.0;
  /// κ of the step that could not be taken (equal to terminal_kappa on LimitReached).
  double attempted_kappa = 0.0;
  std::string detail;
};

struct ContinuationFamily {
  MassVector masses;
  Configuration anchor;
  Direction direction = Direction::Positive;
  std::vector<FamilyRecord> records;
  TerminationRecord termination;
};

struct ContinuationOptions {
  double step = 0.01;
  double kappa_limit = 1.0;
  double tol = 1e-13;
  /// Halve on failure and double after easy successes; false stops at the first failure.
  bool adaptive = true;
  double min_step = 1e-6;
  int max_newton_iters = 25;
  /// A converged step may move each coordinate at most this fraction of max|u_j|.
  /// Larger moves mean Newton left the branch.
  double max_relative_jump = 0.05;
  int easy_iterations = 3;
  int easy_streak = 3;
  /// Consecutive stalls above tol that end the run.
  int floor_attempts = 3;
  /// A failed solve whose best residual is below this counts as a stall, not a divergence.
  double floor_band = 1e-9;
};

class DegenerateSeedError : public Error {
 public:
  using Error::Error;
};

/// Natural-parameter continuation in κ from the planar seed at κ = 0. The seed
/// itself is the first record.
ContinuationFamily continue_family(const SeedReport& seed, Direction direction, const ContinuationOptions& options);

/// min |eigenvalue| of D²L(u; κ) on the orthogonal complement of 𝒥u.
double restricted_min_abs_eig(const Configuration& u, const MassVector& m, double kappa);

struct FamilyDiagnostics {
  std::vector<double> kappa;
  std::vector<double> min_abs_eig;
  std::vector<int> newton_iters;
  std::vector<double> min_radius;
  /// Indices of records whose min_abs_eig fell below 1e-6 of the first record's.
  std::vector<std::size_t> flagged;
};

FamilyDiagnostics family_diagnostics(const ContinuationFamily& family);

}  // namespace curvedre
