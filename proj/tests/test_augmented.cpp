#include "curvedre/augmented.hpp"
#include "curvedre/gradient.hpp"
#include "curvedre/seeds.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace curvedre;
using curvedre::testing::random_sample;

namespace {
const MassVector kEqual({1.0, 1.0, 1.0});
}

TEST(AugmentedMap, VanishesAtSeed) {
  const Configuration a = lagrange_triangle(1, 1, 1);
  const PhaseAnchor anchor(a);
  EXPECT_LT(augmented_map({a, 0.0}, kEqual, 0.0, anchor).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(AugmentedMap, LinearInMultiplier) {
  const Configuration a = lagrange_triangle(1, 1, 1);
  const PhaseAnchor anchor(a);
  const Vector f = augmented_map({a, 0.5}, kEqual, 0.0, anchor);
  const Vector expected = 0.5 * apply_j(a.coords());
  EXPECT_LT((f.head(6) - expected).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_EQ(f[6], 0.0);
}

TEST(AugmentedMap, ProjectionOnRotationIsAlphaTimesNormSquared) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ad(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    auto s = random_sample(rng);
    const double alpha = ad(rng);
    const PhaseAnchor anchor(s.u);
    const Vector f = augmented_map({s.u, alpha}, s.m, s.kappa, anchor);
    const Vector ju = apply_j(s.u.coords());
    const double lhs = f.head(ju.size()).dot(ju);
    const double rhs = alpha * s.u.coords().squaredNorm();
    EXPECT_LT(std::abs(lhs - rhs), 1e-12 * std::max(1.0, f.norm() * ju.norm()));
  }
}

TEST(AugmentedJacobian, BlockStructure) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 20; ++i) {
    auto s = random_sample(rng);
    const double alpha = 0.3;
    const Configuration ref = random_sample(rng, 0, 0, s.u.bodies(), s.u.bodies()).u;
    const PhaseAnchor anchor(ref);
    const Matrix jac = augmented_jacobian({s.u, alpha}, s.m, s.kappa, anchor);
    const auto dim = s.u.coords().size();
    EXPECT_EQ(jac(dim, dim), 0.0);
    EXPECT_EQ(jac.bottomLeftCorner(1, dim).transpose(), apply_j(ref.coords()));
    EXPECT_EQ(jac.topRightCorner(dim, 1), apply_j(s.u.coords()));
    const Matrix expected = hessian_fd(s.u, s.m, s.kappa).values + alpha * j_matrix(s.u.bodies());
    EXPECT_EQ(jac.topLeftCorner(dim, dim), expected);
  }
}

TEST(AugmentedJacobian, InvertibleAtNondegenerateSeed) {
  for (auto m : {std::vector<double>{1, 1, 1}, std::vector<double>{1, 2, 3}}) {
    const Configuration a = lagrange_triangle(m[0], m[1], m[2]);
    const Matrix jac = augmented_jacobian({a, 0.0}, MassVector(m), 0.0, PhaseAnchor(a));
    Eigen::JacobiSVD<Matrix> svd(jac);
    EXPECT_GT(svd.singularValues().minCoeff(), 1e-8);
  }
}

TEST(AugmentedJacobian, MatchesDirectionalDifferences) {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> nd;
  for (int i = 0; i < 30; ++i) {
    auto s = random_sample(rng);
    const PhaseAnchor anchor(s.u);
    const AugmentedState st{s.u, 0.2};
    Vector dir(s.u.coords().size() + 1);
    for (auto& x : dir) x = nd(rng);
    dir.normalize();
    const double t = 1e-5;
    const Vector fp = augmented_map(AugmentedState::unpack(st.packed() + t * dir), s.m, s.kappa, anchor);
    const Vector fm = augmented_map(AugmentedState::unpack(st.packed() - t * dir), s.m, s.kappa, anchor);
    const Vector fd = (fp - fm) / (2 * t);
    const Vector jv = augmented_jacobian(st, s.m, s.kappa, anchor) * dir;
    EXPECT_LT((jv - fd).norm(), 1e-5 * std::max(1.0, fd.norm()));
  }
}

TEST(NewtonSolve, ExactSeedConvergesImmediately) {
  const Configuration a = lagrange_triangle(1, 1, 1);
  const NewtonReport r = newton_solve({a, 0.0}, kEqual, 0.0, PhaseAnchor(a));
  EXPECT_LE(r.iterations, 1);
  EXPECT_LT(r.residual, 1e-13);
}

TEST(NewtonSolve, QuadraticConvergenceFromPerturbedSeed) {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> noise(-1e-4, 1e-4);
  const Configuration a = lagrange_triangle(1, 2, 3);
  Vector c = a.coords();
  for (auto& x : c) x += noise(rng);
  const NewtonReport r = newton_solve({Configuration(c), 0.0}, MassVector({1, 2, 3}), 0.0, PhaseAnchor(a));
  EXPECT_LT(r.residual, 1e-13);
  EXPECT_LE(r.iterations, 6);
  EXPECT_LT(std::abs(r.state.alpha), 1e-10);
  // residuals roughly square from one iteration to the next while far above roundoff
  for (std::size_t i = 1; i + 1 < r.history.size(); ++i) {
    if (r.history[i] > 1e-10) EXPECT_LT(r.history[i + 1], 10.0 * r.history[i] * r.history[i] + 1e-13);
  }
}

TEST(NewtonSolve, SmallCurvatureFromFlatSolution) {
  const Configuration a = lagrange_triangle(1, 1, 1);
  const NewtonReport r = newton_solve({a, 0.0}, kEqual, 0.01, PhaseAnchor(a));
  EXPECT_LT(r.residual, 1e-13);
  EXPECT_LT(std::abs(r.state.alpha), 1e-10);
  EXPECT_LT(std::abs((r.state.u.coords() - a.coords()).dot(apply_j(a.coords()))), 1e-13);
}

TEST(NewtonSolve, IterationBudgetExhaustion) {
  const Configuration a = lagrange_triangle(1, 1, 1);
  NewtonOptions o;
  o.max_iters = 1;
  try {
    newton_solve({Configuration(1.3 * a.coords()), 0.0}, kEqual, 0.0, PhaseAnchor(a), o);
    FAIL() << "expected non-convergence";
  } catch (const NonConvergenceError& e) {
    EXPECT_EQ(e.history().size(), 2u);
    EXPECT_LT(e.best_residual(), e.history().front());
  }
}

TEST(NewtonSolve, SingularJacobianDetected) {
  // Anchor normal orthogonal to the rotation direction of u: the bordered
  // system loses rank at an exact critical point.
  const Configuration a = lagrange_triangle(1, 1, 1);
  const Configuration rotated_anchor = a.rotated(0.0);
  NewtonOptions o;
  o.singular_rcond = 1e300;  // force the singularity guard
  EXPECT_THROW(newton_solve({Configuration(1.01 * a.coords()), 0.0}, kEqual, 0.0, PhaseAnchor(rotated_anchor), o),
               SingularJacobianError);
}
