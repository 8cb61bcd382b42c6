#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "almostcover/linalg.hpp"

namespace almostcover {

// x -> matrix * x + translation with an invertible matrix.
class AffineMap {
 public:
  // Throws Error when the matrix is singular or the shapes disagree.
  AffineMap(Matrix matrix, Vector translation);

  static AffineMap identity(Field field, std::size_t n);
  static AffineMap translation(Vector shift);
  static AffineMap swap(Field field, std::size_t n, std::size_t i, std::size_t j);
  // x_i -> 1 - x_i.
  static AffineMap flip(Field field, std::size_t n, std::size_t i);

  const Matrix& matrix() const { return matrix_; }
  const Vector& translation() const { return translation_; }
  std::size_t dim() const { return translation_.size(); }

  Point apply(const Point& p) const;
  // The image g(H) = { g(x) : x in H }.
  Hyperplane apply(const Hyperplane& h) const;
  // (this o other)(x) = this(other(x)).
  AffineMap compose(const AffineMap& other) const;
  AffineMap inverse() const;

  std::string to_string() const;

 private:
  Matrix matrix_;
  Vector translation_;
};

struct OrbitPartition {
  // Each orbit lists point indices increasingly; orbits ordered by their
  // smallest index.
  std::vector<std::vector<std::size_t>> orbits;
  // orbit_of[i]: index into orbits.
  std::vector<std::size_t> orbit_of;
  // transport[i] maps the orbit representative (its smallest index) to point i.
  std::vector<AffineMap> transport;
  bool is_transitive = false;
};

// Throws Error naming the offending point when a generator does not map the
// set onto itself.
void validate_symmetry(const PointSet& set, const AffineMap& g);

OrbitPartition orbit_reduce(const PointSet& set, std::span<const AffineMap> generators);

}  // namespace almostcover
