#pragma once

#include "curvedre/model.hpp"
#include "curvedre/types.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace curvedre::testing {

struct Sample {
  Configuration u;
  MassVector m;
  double kappa = 0.0;
};

/// Random collision-free configuration inside the domain of κ. Points stay
/// within 0.8·min(1, R) of the origin and at least 0.05 apart.
inline Sample random_sample(std::mt19937_64& rng, double kappa_lo = -1.0, double kappa_hi = 0.4,
                            std::size_t min_bodies = 2, std::size_t max_bodies = 5) {
  std::uniform_int_distribution<std::size_t> count(min_bodies, max_bodies);
  std::uniform_real_distribution<double> kdist(kappa_lo, kappa_hi);
  std::uniform_real_distribution<double> mdist(0.2, 3.0);
  Sample s;
  s.kappa = kdist(rng);
  const double reach = 0.8 * (s.kappa < 0.0 ? std::min(1.0, 1.0 / std::sqrt(-s.kappa)) : 1.0);
  std::uniform_real_distribution<double> coord(-reach, reach);
  const std::size_t n = count(rng);
  std::vector<Point> pts;
  while (pts.size() < n) {
    Point p(coord(rng), coord(rng));
    if (p.norm() > reach) continue;
    bool ok = true;
    for (const auto& q : pts) ok = ok && (p - q).norm() > 0.05;
    if (ok) pts.push_back(p);
  }
  std::vector<double> masses(n);
  for (auto& m : masses) m = mdist(rng);
  s.u = Configuration::from_points(pts);
  s.m = MassVector(masses);
  return s;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace curvedre::testing
