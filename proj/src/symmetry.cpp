#include "almostcover/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "almostcover/error.hpp"

namespace almostcover {
namespace {

Matrix identity_matrix(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = field.one();
  return m;
}

Matrix invert(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<Vector> augmented(n, Vector(2 * n, m.field().zero()));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented[r][c] = m[r][c];
    augmented[r][n + r] = m.field().one();
  }
  RowEchelon e = rref(Matrix(m.field(), std::move(augmented)));
  if (e.rank < n || e.pivots[n - 1] != n - 1) throw Error("affine map matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv[r][c] = e.reduced[r][n + c];
  }
  return inv;
}

Vector multiply(const Matrix& m, const Vector& x) {
  Vector out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(dot(m[r], x));
  return out;
}

}  // namespace

AffineMap::AffineMap(Matrix matrix, Vector translation) : matrix_(std::move(matrix)), translation_(std::move(translation)) {
  const std::size_t n = translation_.size();
  if (n == 0 || matrix_.rows() != n || matrix_.cols() != n) throw Error("affine map shape mismatch");
  for (const Scalar& x : translation_) require_same_field(x.field(), matrix_.field());
  if (rref(matrix_).rank != n) throw Error("affine map matrix is singular");
}

AffineMap AffineMap::identity(Field field, std::size_t n) {
  return AffineMap(identity_matrix(field, n), Vector(n, field.zero()));
}

AffineMap AffineMap::translation(Vector shift) {
  if (shift.empty()) throw Error("empty translation");
  Field field = shift[0].field();
  const std::size_t n = shift.size();
  return AffineMap(identity_matrix(field, n), std::move(shift));
}

AffineMap AffineMap::swap(Field field, std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw Error("coordinate index out of range");
  Matrix m = identity_matrix(field, n);
  std::swap(m[i], m[j]);
  return AffineMap(std::move(m), Vector(n, field.zero()));
}

AffineMap AffineMap::flip(Field field, std::size_t n, std::size_t i) {
  if (i >= n) throw Error("coordinate index out of range");
  Matrix m = identity_matrix(field, n);
  m[i][i] = -field.one();
  Vector t(n, field.zero());
  t[i] = field.one();
  return AffineMap(std::move(m), std::move(t));
}

Point AffineMap::apply(const Point& p) const {
  if (p.dim() != dim()) throw Error("dimension mismatch applying affine map");
  Vector y = multiply(matrix_, p.coords());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += translation_[i];
  return Point(std::move(y));
}

Hyperplane AffineMap::apply(const Hyperplane& h) const {
  if (h.dim() != dim()) throw Error("dimension mismatch applying affine map");
  // a.x = b with x = M^-1 (y - t) becomes (a M^-1).y = b + (a M^-1).t.
  Matrix inv = invert(matrix_);
  const std::size_t n = dim();
  Vector normal(n, matrix_.field().zero());
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) normal[c] += h.normal()[r] * inv[r][c];
  }
  Scalar offset = h.offset() + dot(normal, translation_);
  return Hyperplane(std::move(normal), std::move(offset));
}

AffineMap AffineMap::compose(const AffineMap& other) const {
  if (other.dim() != dim()) throw Error("dimension mismatch composing affine maps");
  const std::size_t n = dim();
  Matrix m(matrix_.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Scalar sum = matrix_.field().zero();
      for (std::size_t k = 0; k < n; ++k) sum += matrix_[r][k] * other.matrix_[k][c];
      m[r][c] = sum;
    }
  }
  Vector t = multiply(matrix_, other.translation_);
  for (std::size_t i = 0; i < n; ++i) t[i] += translation_[i];
  return AffineMap(std::move(m), std::move(t));
}

AffineMap AffineMap::inverse() const {
  Matrix inv = invert(matrix_);
  Vector t = multiply(inv, translation_);
  for (Scalar& x : t) x = -x;
  return AffineMap(std::move(inv), std::move(t));
}

std::string AffineMap::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < dim(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < dim(); ++c) {
      if (c) out += " ";
      out += matrix_[r][c].to_string();
    }
  }
  out += "] + (";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) out += ", ";
    out += translation_[i].to_string();
  }
  return out + ")";
}

void validate_symmetry(const PointSet& set, const AffineMap& g) {
  if (g.dim() != set.dim()) throw Error("affine map dimension differs from the point set");
  require_same_field(g.matrix().field(), set.field());
  // An affine bijection is injective, so mapping V into V means onto V.
  for (const Point& p : set.points()) {
    Point image = g.apply(p);
    if (!set.contains(image)) {
      throw Error("affine map " + g.to_string() + " sends " + p.to_string() + " to " + image.to_string() +
                  ", outside the point set");
    }
  }
}

OrbitPartition orbit_reduce(const PointSet& set, std::span<const AffineMap> generators) {
  for (const AffineMap& g : generators) validate_symmetry(set, g);
  const std::size_t count = set.size();
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  OrbitPartition out;
  out.orbit_of.assign(count, unassigned);
  std::vector<std::optional<AffineMap>> transport(count);
  for (std::size_t start = 0; start < count; ++start) {
    if (out.orbit_of[start] != unassigned) continue;
    const std::size_t orbit = out.orbits.size();
    out.orbits.emplace_back();
    out.orbit_of[start] = orbit;
    transport[start] = AffineMap::identity(set.field(), set.dim());
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      out.orbits[orbit].push_back(i);
      for (const AffineMap& g : generators) {
        std::size_t j = set.index_of(g.apply(set[i]));
        if (out.orbit_of[j] != unassigned) continue;
        out.orbit_of[j] = orbit;
        transport[j] = g.compose(*transport[i]);
        queue.push_back(j);
      }
    }
    std::sort(out.orbits[orbit].begin(), out.orbits[orbit].end());
  }
  out.transport.reserve(count);
  for (auto& t : transport) out.transport.push_back(std::move(*t));
  out.is_transitive = out.orbits.size() == 1;
  return out;
}

}  // namespace almostcover
