#include "curvedre/types.hpp"

#include "curvedre/errors.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace curvedre {

MassVector::MassVector(std::vector<double> masses) : masses_(std::move(masses)) {
  if (masses_.empty()) throw InvalidArgument("mass vector is empty");
  for (std::size_t j = 0; j < masses_.size(); ++j) {
    if (!(masses_[j] > 0.0) || !std::isfinite(masses_[j]))
      throw InvalidArgument("mass " + std::to_string(j) + " is not a positive finite number");
  }
}

double MassVector::total() const { return std::accumulate(masses_.begin(), masses_.end(), 0.0); }

MassVector MassVector::scaled(double factor) const {
  std::vector<double> out(masses_);
  for (auto& m : out) m *= factor;
  return MassVector(std::move(out));
}

Configuration::Configuration(Vector coords) : coords_(std::move(coords)) {
  if (coords_.size() == 0 || coords_.size() % 2 != 0)
    throw InvalidArgument("configuration needs an even, nonzero number of coordinates");
  if (!coords_.allFinite()) throw InvalidArgument("configuration has non-finite coordinates");
}

Configuration Configuration::from_points(std::span<const Point> points) {
  Vector c(2 * static_cast<Eigen::Index>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) c.segment<2>(2 * static_cast<Eigen::Index>(j)) = points[j];
  return Configuration(std::move(c));
}

Configuration Configuration::rotated(double theta) const { return Configuration(rotate_blocks(coords_, theta)); }

double Configuration::max_radius() const {
  double r = 0.0;
  for (std::size_t j = 0; j < bodies(); ++j) r = std::max(r, point(j).norm());
  return r;
}

double Configuration::min_radius() const {
  double r = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < bodies(); ++j) r = std::min(r, point(j).norm());
  return r;
}

Curvature::Curvature(double kappa) : kappa_(kappa) {
  if (!std::isfinite(kappa)) throw InvalidArgument("curvature must be finite");
}

double Curvature::radius() const {
  if (kappa_ == 0.0) throw FlatCurvatureError();
  return 1.0 / std::sqrt(std::abs(kappa_));
}

Vector apply_j(const Vector& v) {
  Vector out(v.size());
  for (Eigen::Index i = 0; i + 1 < v.size(); i += 2) {
    out[i] = -v[i + 1];
    out[i + 1] = v[i];
  }
  return out;
}

Vector rotate_blocks(const Vector& v, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  Vector out(v.size());
  for (Eigen::Index i = 0; i + 1 < v.size(); i += 2) {
    out[i] = c * v[i] - s * v[i + 1];
    out[i + 1] = s * v[i] + c * v[i + 1];
  }
  return out;
}

Matrix j_matrix(std::size_t bodies) {
  const auto dim = 2 * static_cast<Eigen::Index>(bodies);
  Matrix jm = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; i += 2) {
    jm(i, i + 1) = -1.0;
    jm(i + 1, i) = 1.0;
  }
  return jm;
}

}  // namespace curvedre
