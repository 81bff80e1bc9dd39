#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace curvedre {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Point = Eigen::Vector2d;

/// Positive body masses. At least one body; the n-body entry points
/// (seeds, continuation, cli) additionally require two or more.
class MassVector {
 public:
  MassVector() = default;
  explicit MassVector(std::vector<double> masses);

  std::size_t size() const { return masses_.size(); }
  double operator[](std::size_t j) const { return masses_[j]; }
  double total() const;
  const std::vector<double>& values() const { return masses_; }
  MassVector scaled(double factor) const;

 private:
  std::vector<double> masses_;
};

/// Positions u = (x_1, y_1, ..., x_n, y_n) on the stereographic plane, in the
/// frame rotating with unit angular frequency.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(Vector coords);
  static Configuration from_points(std::span<const Point> points);

  std::size_t bodies() const { return static_cast<std::size_t>(coords_.size() / 2); }
  Point point(std::size_t j) const { return coords_.segment<2>(2 * static_cast<Eigen::Index>(j)); }
  void set_point(std::size_t j, const Point& p) { coords_.segment<2>(2 * static_cast<Eigen::Index>(j)) = p; }

  const Vector& coords() const { return coords_; }
  Vector& coords() { return coords_; }

  /// e^{Jθ} applied to every body.
  Configuration rotated(double theta) const;
  /// Largest |u_j|.
  double max_radius() const;
  /// Smallest |u_j|.
  double min_radius() const;

 private:
  Vector coords_;
};

/// Curvature κ with derived sign σ and radius R = 1/sqrt(|κ|).
class Curvature {
 public:
  explicit Curvature(double kappa);
  double value() const { return kappa_; }
  int sign() const { return kappa_ > 0.0 ? 1 : (kappa_ < 0.0 ? -1 : 0); }
  /// Throws FlatCurvatureError when κ = 0.
  double radius() const;

 private:
  double kappa_;
};

/// Block-diagonal J ⊕ ... ⊕ J with J = [[0,-1],[1,0]], applied to a 2n vector.
Vector apply_j(const Vector& v);
/// e^{Jθ} applied blockwise.
Vector rotate_blocks(const Vector& v, double theta);
/// The dense 2n×2n matrix 𝒥.
Matrix j_matrix(std::size_t bodies);

}  // namespace curvedre
