#include "almostcover/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "almostcover/error.hpp"

namespace almostcover {

std::string Point::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += coords_[i].to_string();
  }
  return out + ")";
}

PointSet::PointSet(Field field, std::size_t dim, std::vector<Point> points, bool allow_empty)
    : field_(field), dim_(dim), points_(std::move(points)) {
  if (dim_ == 0) throw Error("point set dimension must be at least 1");
  if (points_.empty() && !allow_empty) throw Error("empty point set");
  for (const Point& p : points_) check_compatible(p);
  sorted_.resize(points_.size());
  std::iota(sorted_.begin(), sorted_.end(), 0);
  std::sort(sorted_.begin(), sorted_.end(), [&](std::size_t a, std::size_t b) { return points_[a] < points_[b]; });
  for (std::size_t i = 1; i < sorted_.size(); ++i) {
    if (points_[sorted_[i - 1]] == points_[sorted_[i]]) {
      throw Error("duplicate point " + points_[sorted_[i]].to_string());
    }
  }
}

void PointSet::check_compatible(const Point& p) const {
  if (p.dim() != dim_) {
    throw Error("point " + p.to_string() + " has dimension " + std::to_string(p.dim()) + ", expected " +
                std::to_string(dim_));
  }
  for (const Scalar& c : p.coords()) require_same_field(c.field(), field_);
}

std::size_t PointSet::find(const Point& p) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), p,
                             [&](std::size_t idx, const Point& q) { return points_[idx] < q; });
  if (it != sorted_.end() && points_[*it] == p) return *it;
  return points_.size();
}

std::size_t PointSet::index_of(const Point& p) const {
  std::size_t idx = find(p);
  if (idx == size()) throw Error("point " + p.to_string() + " is not in the point set");
  return idx;
}

bool PointSet::is_zero_one() const {
  for (const Point& p : points_) {
    for (const Scalar& c : p.coords()) {
      if (!c.is_zero() && !c.is_one()) return false;
    }
  }
  return true;
}

PointSet PointSet::with_point(const Point& p) const {
  std::vector<Point> pts = points_;
  pts.push_back(p);
  return PointSet(field_, dim_, std::move(pts));
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), cols_(cols), rows_(rows, Vector(cols, field.zero())) {}

Matrix::Matrix(Field field, std::vector<Vector> rows)
    : field_(field), cols_(rows.empty() ? 0 : rows.front().size()), rows_(std::move(rows)) {
  for (const Vector& row : rows_) {
    if (row.size() != cols_) throw Error("ragged matrix");
    for (const Scalar& x : row) require_same_field(x.field(), field_);
  }
}

RowEchelon rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m[sel][col].is_zero()) ++sel;
    if (sel == m.rows()) continue;
    std::swap(m[row], m[sel]);
    Scalar inv = m[row][col].inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Scalar factor = m[r][col];
      for (std::size_t c = col; c < m.cols(); ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return RowEchelon{row, std::move(m), std::move(pivots)};
}

std::vector<Vector> null_space(const Matrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.reduced[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  if (a.empty()) return Scalar{};
  Scalar sum = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Vector subtract(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  Vector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

AffineSubspace::AffineSubspace(Point base, std::vector<Vector> directions, std::vector<std::size_t> pivots)
    : base_(std::move(base)), directions_(std::move(directions)), pivots_(std::move(pivots)) {}

bool AffineSubspace::contains(const Point& p) const {
  if (p.dim() != base_.dim()) throw Error("dimension mismatch");
  Vector w = subtract(p.coords(), base_.coords());
  for (std::size_t r = 0; r < directions_.size(); ++r) {
    const Scalar coef = w[pivots_[r]];
    if (coef.is_zero()) continue;
    for (std::size_t c = 0; c < w.size(); ++c) w[c] -= coef * directions_[r][c];
  }
  return std::all_of(w.begin(), w.end(), [](const Scalar& x) { return x.is_zero(); });
}

AffineSubspace affine_span(std::span<const Point> points) {
  if (points.empty()) throw Error("affine span of an empty point list");
  const Point& base = points.front();
  if (base.dim() == 0) throw Error("zero-dimensional points");
  const Field field = base[0].field();
  std::vector<Vector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].dim() != base.dim()) throw Error("dimension mismatch");
    diffs.push_back(subtract(points[i].coords(), base.coords()));
  }
  if (diffs.empty()) return AffineSubspace(base, {}, {});
  RowEchelon e = rref(Matrix(field, std::move(diffs)));
  std::vector<Vector> dirs(e.reduced.data().begin(), e.reduced.data().begin() + static_cast<std::ptrdiff_t>(e.rank));
  return AffineSubspace(base, std::move(dirs), std::move(e.pivots));
}

Hyperplane::Hyperplane(Vector normal, Scalar offset) : normal_(std::move(normal)), offset_(std::move(offset)) {
  auto lead = std::find_if(normal_.begin(), normal_.end(), [](const Scalar& x) { return !x.is_zero(); });
  if (lead == normal_.end()) throw Error("hyperplane normal is zero");
  for (const Scalar& x : normal_) require_same_field(x.field(), offset_.field());
  if (!lead->is_one()) {
    Scalar inv = lead->inverse();
    for (Scalar& x : normal_) x *= inv;
    offset_ *= inv;
  }
}

std::string Hyperplane::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < normal_.size(); ++i) {
    const Scalar& c = normal_[i];
    if (c.is_zero()) continue;
    std::string var = "x" + std::to_string(i + 1);
    bool negative = c.field().is_rational() && c.rational() < 0;
    Scalar mag = negative ? -c : c;
    std::string term = mag.is_one() ? var : mag.to_string() + "*" + var;
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out + " = " + offset_.to_string();
}

Scalar eval_form(const Hyperplane& h, const Point& v) {
  if (h.dim() != v.dim()) throw Error("dimension mismatch between hyperplane and point");
  return dot(h.normal(), v.coords()) - h.offset();
}

Hyperplane hyperplane_containing_avoiding(const AffineSubspace& s, const Point& v) {
  const std::size_t n = s.ambient_dim();
  if (v.dim() != n) throw Error("dimension mismatch");
  if (s.dim() >= n) throw Error("no proper hyperplane");
  const Field field = s.base()[0].field();
  Vector w = subtract(v.coords(), s.base().coords());
  std::vector<Vector> candidates;
  if (s.dim() == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      Vector e(n, field.zero());
      e[i] = field.one();
      candidates.push_back(std::move(e));
    }
  } else {
    candidates = null_space(Matrix(field, s.directions()));
  }
  // The null space of the directions annihilates exactly their span, so some
  // basis vector pairs nontrivially with v - base unless v lies in s.
  for (Vector& normal : candidates) {
    if (dot(normal, w).is_zero()) continue;
    Scalar offset = dot(normal, s.base().coords());
    return Hyperplane(std::move(normal), std::move(offset));
  }
  throw Error("inseparable");
}

}  // namespace almostcover
