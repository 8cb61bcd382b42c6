#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "almostcover/field.hpp"

namespace almostcover {

using Vector = std::vector<Scalar>;

class Point {
 public:
  Point() = default;
  explicit Point(Vector coords) : coords_(std::move(coords)) {}

  std::size_t dim() const { return coords_.size(); }
  const Vector& coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  // "(1, 0, 3/2)"
  std::string to_string() const;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) { return a.coords_ <=> b.coords_; }

 private:
  Vector coords_;
};

// An ordered, duplicate-free list of points of one dimension over one field.
class PointSet {
 public:
  // Throws Error on duplicates, wrong dimensions or foreign-field coordinates.
  // An empty set is only accepted with allow_empty.
  PointSet(Field field, std::size_t dim, std::vector<Point> points, bool allow_empty = false);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  // Index of p, or size() when absent.
  std::size_t find(const Point& p) const;
  bool contains(const Point& p) const { return find(p) != size(); }
  // Throws Error naming the point when absent.
  std::size_t index_of(const Point& p) const;

  // Throws Error unless p has this set's field and dimension.
  void check_compatible(const Point& p) const;

  // True when every coordinate is 0 or 1.
  bool is_zero_one() const;

  // A copy with p appended (p must be new).
  PointSet with_point(const Point& p) const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<Point> points_;
  std::vector<std::size_t> sorted_;  // indices sorted by point value
};

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  // Throws Error on ragged rows or mixed fields.
  Matrix(Field field, std::vector<Vector> rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  Vector& operator[](std::size_t r) { return rows_[r]; }
  const Vector& operator[](std::size_t r) const { return rows_[r]; }
  const std::vector<Vector>& data() const { return rows_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Field field_;
  std::size_t cols_;
  std::vector<Vector> rows_;
};

struct RowEchelon {
  std::size_t rank = 0;
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

// Reduced row-echelon form. Pivot = leftmost column with a nonzero entry in
// the first not-yet-used row that has one.
RowEchelon rref(Matrix m);

// The null space of m as a list of basis vectors, one per free column.
std::vector<Vector> null_space(const Matrix& m);

class AffineSubspace {
 public:
  // directions must be the nonzero rows of a reduced row-echelon matrix.
  AffineSubspace(Point base, std::vector<Vector> directions, std::vector<std::size_t> pivots);

  const Point& base() const { return base_; }
  const std::vector<Vector>& directions() const { return directions_; }
  std::size_t dim() const { return directions_.size(); }
  std::size_t ambient_dim() const { return base_.dim(); }

  bool contains(const Point& p) const;

 private:
  Point base_;
  std::vector<Vector> directions_;
  std::vector<std::size_t> pivots_;
};

// Smallest affine subspace containing all inputs. Throws Error on empty input.
AffineSubspace affine_span(std::span<const Point> points);

// The affine hyperplane { x : normal . x = offset }, stored with the first
// nonzero normal entry scaled to 1.
class Hyperplane {
 public:
  // Throws Error on a zero normal or mixed fields.
  Hyperplane(Vector normal, Scalar offset);

  const Vector& normal() const { return normal_; }
  const Scalar& offset() const { return offset_; }
  std::size_t dim() const { return normal_.size(); }

  // "x1 + x2 = 1"
  std::string to_string() const;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend auto operator<=>(const Hyperplane& a, const Hyperplane& b) {
    if (auto c = a.normal_ <=> b.normal_; c != 0) return c;
    return a.offset_ <=> b.offset_;
  }

 private:
  Vector normal_;
  Scalar offset_;
};

// normal . v - offset; zero iff v lies on h.
Scalar eval_form(const Hyperplane& h, const Point& v);

// A hyperplane containing s and missing v. Throws Error("no proper
// hyperplane") when s is the whole space and Error("inseparable") when v is
// in s.
Hyperplane hyperplane_containing_avoiding(const AffineSubspace& s, const Point& v);

Scalar dot(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);

}  // namespace almostcover
