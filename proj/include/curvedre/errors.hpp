#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvedre {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Any evaluation outside the admissible configuration space.
class DomainError : public Error {
 public:
  using Error::Error;
};

class CollisionError : public DomainError {
 public:
  CollisionError(std::size_t j, std::size_t k, double separation);
  std::size_t first() const { return j_; }
  std::size_t second() const { return k_; }
  double separation() const { return separation_; }

 private:
  std::size_t j_, k_;
  double separation_;
};

/// B(u_j, u_k; κ) vanishes: the bodies are antipodal on the sphere.
class AntipodalError : public DomainError {
 public:
  AntipodalError(std::size_t j, std::size_t k, double b_value);
  std::size_t first() const { return j_; }
  std::size_t second() const { return k_; }
  double b_value() const { return b_; }

 private:
  std::size_t j_, k_;
  double b_;
};

/// A point at or beyond the Poincaré disk boundary |u|² = 1/|κ|.
class DiskBoundaryError : public DomainError {
 public:
  DiskBoundaryError(std::size_t body, double radius_squared, double kappa);
  std::size_t body() const { return body_; }

 private:
  std::size_t body_;
};

class FlatCurvatureError : public Error {
 public:
  FlatCurvatureError() : Error("no embedding exists for zero curvature") {}
};

class EigenSolverError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace curvedre
