#include "curvedre/errors.hpp"
#include "curvedre/seeds.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace curvedre;

namespace {

// Componentwise defect of 4a_j = ½ Σ_{k≠j} m_k (a_j - a_k)/|a_j - a_k|³.
double cc_defect(const Configuration& a, const MassVector& m) {
  double worst = 0.0;
  for (std::size_t j = 0; j < a.bodies(); ++j) {
    Point rhs = Point::Zero();
    for (std::size_t k = 0; k < a.bodies(); ++k) {
      if (k == j) continue;
      const Point d = a.point(j) - a.point(k);
      rhs += 0.5 * m[k] * d / std::pow(d.norm(), 3);
    }
    worst = std::max(worst, (4.0 * a.point(j) - rhs).norm());
  }
  return worst;
}

MassVector ones(std::size_t n) { return MassVector(std::vector<double>(n, 1.0)); }

}  // namespace

TEST(PolygonCc, RadiusValues) {
  EXPECT_NEAR(polygon_radius(3), 0.5 * std::pow(3.0, -1.0 / 6.0), 1e-15);
  EXPECT_NEAR(polygon_radius(3), 0.41634, 5e-6);
  EXPECT_NEAR(polygon_radius(2), 0.5 * std::cbrt(0.25), 1e-15);
  EXPECT_NEAR(polygon_radius(2), 0.314980, 1e-6);
  EXPECT_NEAR(polygon_radius(4), 0.5 * std::cbrt((1.0 + 2.0 * std::sqrt(2.0)) / 4.0), 1e-15);
  // Square from direct force balance: 4r = (1/4 + 1/sqrt(2)) / (2r^2).
  EXPECT_NEAR(polygon_radius(4), 0.5 * std::cbrt(0.25 + 1.0 / std::sqrt(2.0)), 1e-15);
  EXPECT_NEAR(polygon_radius(4), 0.4927464, 1e-7);
  EXPECT_THROW(polygon_cc(1), InvalidArgument);
}

TEST(PolygonCc, SatisfiesCentralConfigurationEquations) {
  for (int n = 2; n <= 12; ++n) {
    const Configuration a = polygon_cc(n);
    EXPECT_LT(cc_residual(a, ones(n)), 1e-13) << n;
    EXPECT_LT(cc_defect(a, ones(n)), 1e-13) << n;
  }
}

TEST(PolygonCc, InvariantUnderVertexRotation) {
  for (int n = 3; n <= 7; ++n) {
    const Configuration a = polygon_cc(n);
    const Configuration r = a.rotated(2.0 * std::numbers::pi / n);
    for (std::size_t j = 0; j < a.bodies(); ++j) {
      double nearest = 1e9;
      for (std::size_t k = 0; k < r.bodies(); ++k) nearest = std::min(nearest, (a.point(j) - r.point(k)).norm());
      EXPECT_LT(nearest, 1e-14);
    }
  }
}

TEST(LagrangeTriangle, EqualMassesMatchPolygon) {
  const Configuration a = lagrange_triangle(1, 1, 1);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(a.point(j).norm(), 0.5 * std::pow(3.0, -1.0 / 6.0), 1e-15);
  EXPECT_LT(cc_residual(a, ones(3)), 1e-13);
}

TEST(LagrangeTriangle, UnequalMasses) {
  const Configuration a = lagrange_triangle(1, 2, 3);
  const MassVector m({1, 2, 3});
  EXPECT_NEAR(lagrange_side(1, 2, 3), std::cbrt(0.75), 1e-15);
  EXPECT_NEAR(lagrange_side(1, 2, 3), 0.908560, 1e-6);
  for (std::size_t j = 0; j < 3; ++j)
    EXPECT_NEAR((a.point(j) - a.point((j + 1) % 3)).norm(), lagrange_side(1, 2, 3), 1e-15);
  EXPECT_LT(cc_residual(a, m), 1e-13);
  EXPECT_LT(cc_defect(a, m), 1e-13);
  const Point com = (1 * a.point(0) + 2 * a.point(1) + 3 * a.point(2)) / 6.0;
  EXPECT_LT(com.norm(), 1e-15);
}

TEST(LagrangeTriangle, SideScalesWithCubeRootOfMass) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> md(0.1, 5.0), cd(0.2, 10.0);
  for (int i = 0; i < 50; ++i) {
    const double m1 = md(rng), m2 = md(rng), m3 = md(rng), c = cd(rng);
    EXPECT_NEAR(lagrange_side(c * m1, c * m2, c * m3) / lagrange_side(m1, m2, m3), std::cbrt(c), 1e-14);
    const Configuration a = lagrange_triangle(c * m1, c * m2, c * m3);
    EXPECT_LT(cc_residual(a, MassVector({c * m1, c * m2, c * m3})), 1e-13 * std::max(1.0, c * c));
  }
}

TEST(Seeds, DilationBreaksCentralConfiguration) {
  for (double c : {1.01, 1.1, 2.0}) {
    const Configuration a = lagrange_triangle(1, 2, 3);
    EXPECT_GT(cc_residual(Configuration(c * a.coords()), MassVector({1, 2, 3})), 1e-3) << c;
    EXPECT_GT(cc_residual(Configuration(c * polygon_cc(5).coords()), ones(5)), 1e-3) << c;
  }
}

TEST(RoutBeta, Values) {
  EXPECT_DOUBLE_EQ(routh_beta(1, 1, 1), 9.0);
  EXPECT_DOUBLE_EQ(routh_beta(1, 2, 3), 27.0 * 11.0 / 36.0);
}

TEST(CheckNondegeneracy, LagrangeSeedsAreNondegenerate) {
  for (auto masses : {std::vector<double>{1, 1, 1}, std::vector<double>{1, 2, 3}}) {
    const SeedReport r = check_nondegeneracy(lagrange_triangle(masses[0], masses[1], masses[2]), MassVector(masses));
    EXPECT_EQ(r.kernel_dimension, 1);
    EXPECT_FALSE(r.degenerate);
    EXPECT_GT(r.kernel_alignment, 0.999);
    EXPECT_LT(r.residual, 1e-13);
    ASSERT_TRUE(r.routh_beta.has_value());
  }
}

TEST(CheckNondegeneracy, RejectsNonCriticalInput) {
  const Configuration a = lagrange_triangle(1, 1, 1);
  EXPECT_THROW(check_nondegeneracy(Configuration(1.1 * a.coords()), ones(3)), PreconditionError);
}

TEST(AnalyzeKernel, SyntheticSpectra) {
  // identity with one direction zeroed: kernel is exactly that direction
  Vector dir = Vector::Zero(6);
  dir[2] = 1.0;
  Matrix h = Matrix::Identity(6, 6) - dir * dir.transpose();
  KernelAnalysis k = analyze_kernel(h, dir, kZeroEigenvalueRatio);
  EXPECT_EQ(k.kernel_dimension, 1);
  EXPECT_NEAR(k.alignment, 1.0, 1e-14);

  h(4, 4) = 0.0;
  k = analyze_kernel(h, dir, kZeroEigenvalueRatio);
  EXPECT_EQ(k.kernel_dimension, 2);
}

TEST(RefineCc, RecoversPerturbedSquare) {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> noise(-1e-3, 1e-3);
  Vector c = polygon_cc(4).coords();
  for (auto& x : c) x += noise(rng);
  const SeedReport r = refine_cc(Configuration(c), ones(4));
  EXPECT_LT(r.residual, 1e-13);
  EXPECT_FALSE(r.degenerate);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(r.configuration.point(j).norm(), polygon_radius(4), 1e-10);
}

TEST(RefineCc, ExactSeedNeedsNoIterations) {
  const SeedReport r = refine_cc(lagrange_triangle(1, 2, 3), MassVector({1, 2, 3}));
  EXPECT_EQ(r.newton_iterations, 0);
  EXPECT_LT(r.residual, 1e-13);
}

TEST(RefineCc, CollinearGuessConvergesToEulerConfiguration) {
  // equal masses at -x, 0, x: the symmetric collinear central configuration
  const Configuration guess = Configuration::from_points(std::vector<Point>{{-0.6, 0.02}, {0.01, 0.0}, {0.55, -0.01}});
  const SeedReport r = refine_cc(guess, ones(3));
  EXPECT_LT(r.residual, 1e-13);
  const Point a = r.configuration.point(0), b = r.configuration.point(1), c = r.configuration.point(2);
  const Point ab = b - a, ac = c - a;
  EXPECT_LT(std::abs(ab.x() * ac.y() - ab.y() * ac.x()) / (ab.norm() * ac.norm()), 1e-12);
  // middle body at the centre of mass, outer bodies at equal distance
  EXPECT_LT(b.norm(), 1e-12);
  EXPECT_NEAR(a.norm(), c.norm(), 1e-12);
  // closed form: 4x = ½(1/x² + 1/(4x²))  =>  x³ = 5/32
  EXPECT_NEAR(a.norm(), std::cbrt(5.0 / 32.0), 1e-12);
}

TEST(RefineCc, FailureCarriesLastIterate) {
  const Configuration bad = Configuration::from_points(std::vector<Point>{{0.0, 1e-3}, {1e-3, 0.0}, {50.0, 50.0}});
  EXPECT_THROW(refine_cc(bad, ones(3)), RefinementError);
}
