#include "curvedre/dynamics.hpp"

#include "curvedre/gradient.hpp"
#include "curvedre/model.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>

namespace curvedre {

namespace odeint = boost::numeric::odeint;

PhaseState eom_rhs(const PhaseState& s, const MassVector& m, double kappa) {
  const Configuration u(s.u);
  if (s.v.size() != s.u.size()) throw InvalidArgument("velocity and position sizes differ");
  check_domain(u, kappa);
  const Vector grad_u = grad_potential(u, m, kappa);

  PhaseState d{s.v, Vector(s.v.size())};
  for (std::size_t j = 0; j < u.bodies(); ++j) {
    const auto at = 2 * static_cast<Eigen::Index>(j);
    const Point p = u.point(j);
    const Point v = s.v.segment<2>(at);
    const Point jp(-p.y(), p.x());
    const Point jv(-v.y(), v.x());
    const Point w = v + jp;
    const Point jw(-w.y(), w.x());

    const double s2 = 1.0 + kappa * p.squaredNorm();
    const double lambda = conformal_factor(p, kappa);
    const Point grad_lambda = -4.0 * kappa * lambda / s2 * p;

    // d/dt[λ w] = ½∇λ|w|² - λ𝒥w + ∇U/m, with d/dt(λ w) = (∇λ·v) w + λ(a + 𝒥v).
    const Point rhs = 0.5 * grad_lambda * w.squaredNorm() - lambda * jw + grad_u.segment<2>(at) / m[j] -
                      grad_lambda.dot(v) * w;
    d.v.segment<2>(at) = rhs / lambda - jv;
  }
  return d;
}

double jacobi_constant(const PhaseState& s, const MassVector& m, double kappa) {
  const Configuration u(s.u);
  double quadratic = 0.0, steady = 0.0;
  for (std::size_t j = 0; j < u.bodies(); ++j) {
    const double lambda = conformal_factor(u.point(j), kappa);
    quadratic += 0.5 * m[j] * lambda * s.v.segment<2>(2 * static_cast<Eigen::Index>(j)).squaredNorm();
    steady += 0.5 * m[j] * lambda * u.point(j).squaredNorm();
  }
  return quadratic - steady - potential_energy(u, m, kappa);
}

namespace {

using State = std::vector<double>;

State pack(const PhaseState& s) {
  State x(static_cast<std::size_t>(2 * s.u.size()));
  Eigen::Map<Vector>(x.data(), s.u.size()) = s.u;
  Eigen::Map<Vector>(x.data() + s.u.size(), s.v.size()) = s.v;
  return x;
}

PhaseState unpack(const State& x) {
  const auto half = static_cast<Eigen::Index>(x.size() / 2);
  return PhaseState{Eigen::Map<const Vector>(x.data(), half), Eigen::Map<const Vector>(x.data() + half, half)};
}

}  // namespace

Trajectory integrate(const PhaseState& s0, const MassVector& m, double kappa, const std::vector<double>& sample_times,
                     const IntegrateOptions& options) {
  if (sample_times.empty()) throw InvalidArgument("no sample times requested");
  if (!std::is_sorted(sample_times.begin(), sample_times.end()))
    throw InvalidArgument("sample times must be ascending");
  if (s0.v.size() != s0.u.size()) throw InvalidArgument("velocity and position sizes differ");
  if (static_cast<Eigen::Index>(2 * m.size()) != s0.u.size())
    throw InvalidArgument("mass count does not match configuration");
  check_domain(Configuration(s0.u), kappa);

  auto system = [&](const State& x, State& dxdt, double /*t*/) {
    const PhaseState d = eom_rhs(unpack(x), m, kappa);
    dxdt = pack(d);
  };

  Trajectory traj;
  traj.times.push_back(sample_times.front());
  traj.states.push_back(s0);
  if (sample_times.size() == 1) return traj;

  auto stepper = odeint::make_dense_output(options.tol, options.tol, odeint::runge_kutta_dopri5<State>());
  const double span = sample_times.back() - sample_times.front();
  stepper.initialize(pack(s0), sample_times.front(), std::min(1e-3, std::max(span, options.min_step)));

  std::size_t next = 1;
  try {
    while (next < sample_times.size()) {
      while (next < sample_times.size() && sample_times[next] <= stepper.current_time()) {
        State x(pack(s0).size());
        stepper.calc_state(sample_times[next], x);
        traj.times.push_back(sample_times[next]);
        traj.states.push_back(unpack(x));
        ++next;
      }
      if (next >= sample_times.size()) break;
      stepper.do_step(system);
      if (stepper.current_time_step() < options.min_step)
        throw IntegrationError("step size underflow at t = " + std::to_string(stepper.current_time()), traj);
    }
  } catch (const DomainError& e) {
    throw IntegrationError(std::string("integration left the domain: ") + e.what(), traj);
  } catch (const odeint::step_adjustment_error& e) {
    throw IntegrationError(std::string("step adjustment failed: ") + e.what(), traj);
  }
  return traj;
}

DriftReport verify_re(const Configuration& u_star, const MassVector& m, double kappa, double period, double tol,
                      std::size_t samples) {
  if (!(period > 0.0) || samples < 1) throw InvalidArgument("period and sample count must be positive");
  std::vector<double> times(samples + 1);
  for (std::size_t i = 0; i <= samples; ++i) times[i] = period * static_cast<double>(i) / static_cast<double>(samples);

  const PhaseState s0{u_star.coords(), Vector::Zero(u_star.coords().size())};
  IntegrateOptions options;
  options.tol = tol;
  const Trajectory traj = integrate(s0, m, kappa, times, options);

  DriftReport report;
  report.samples = traj.states.size();
  const double h0 = jacobi_constant(s0, m, kappa);
  for (const auto& s : traj.states) {
    report.max_drift = std::max(report.max_drift, (s.u - u_star.coords()).cwiseAbs().maxCoeff());
    report.jacobi_drift = std::max(report.jacobi_drift, std::abs(jacobi_constant(s, m, kappa) - h0));
  }
  return report;
}

}  // namespace curvedre
