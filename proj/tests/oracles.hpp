#pragma once

// Independent reference computations for the tests. None of them goes
// through Buchberger-Moller or the branch-and-bound solver.

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "almostcover/cover.hpp"
#include "almostcover/linalg.hpp"
#include "almostcover/polynomial.hpp"

namespace oracle {

using namespace almostcover;

// All exponent vectors of total degree at most d.
inline std::vector<Monomial> monomials_up_to(std::size_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i == n) {
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t a = 0; a <= left; ++a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
    e[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

inline std::size_t rank_of(const Field& field, std::vector<Vector> rows) {
  if (rows.empty()) return 0;
  return rref(Matrix(field, std::move(rows))).rank;
}

// Least d such that some polynomial of degree <= d restricted to V equals the
// indicator of V[v]: the indicator lies in the column span of the evaluation
// matrix of all monomials of degree <= d.
inline std::uint32_t separating_degree_by_rank(const PointSet& set, std::size_t v) {
  for (std::uint32_t d = 0;; ++d) {
    const std::vector<Monomial> ms = monomials_up_to(set.dim(), d);
    std::vector<Vector> rows, augmented;
    for (std::size_t i = 0; i < set.size(); ++i) {
      Vector row;
      for (const Monomial& m : ms) row.push_back(m.evaluate(set[i]));
      rows.push_back(row);
      row.push_back(i == v ? set.field().one() : set.field().zero());
      augmented.push_back(row);
    }
    if (rank_of(set.field(), rows) == rank_of(set.field(), augmented)) return d;
  }
}

// dim of the space of functions on V spanned by monomials of degree <= d.
inline std::size_t evaluation_rank(const PointSet& set, std::uint32_t d) {
  const std::vector<Monomial> ms = monomials_up_to(set.dim(), d);
  std::vector<Vector> rows;
  for (const Point& p : set.points()) {
    Vector row;
    for (const Monomial& m : ms) row.push_back(m.evaluate(p));
    rows.push_back(row);
  }
  return rank_of(set.field(), rows);
}

// Smallest number of sets covering universe, by trying every combination of
// increasing size. Returns SIZE_MAX when no cover exists.
inline std::size_t brute_force_cover(std::span<const PointMask> sets, PointMask universe) {
  if (universe == 0) return 0;
  const std::size_t m = sets.size();
  for (std::size_t size = 1; size <= m; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      PointMask u = 0;
      for (std::size_t i : pick) u |= sets[i];
      if ((u & universe) == universe) return size;
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return SIZE_MAX;
}

// A closed subset of V avoiding v, computed straight from the definition:
// the points of V on the affine span of the given subset.
inline std::set<std::size_t> closure_by_span(const PointSet& set, const std::vector<std::size_t>& subset) {
  std::vector<Point> pts;
  for (std::size_t i : subset) pts.push_back(set[i]);
  const AffineSubspace span = affine_span(pts);
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (span.contains(set[i])) out.insert(i);
  }
  return out;
}

inline Scalar random_scalar(std::mt19937& rng, const Field& field, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return field.from_int(d(rng));
}

inline Scalar random_nonzero_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  int a = 0;
  while (a == 0) a = num(rng);
  return Field::rational().from_rational(mpq_class(a, den(rng)));
}

// Up to max_points distinct points with coordinates in [lo, hi].
inline PointSet random_point_set(std::mt19937& rng, const Field& field, std::size_t n, std::size_t max_points,
                                 int lo, int hi) {
  std::uniform_int_distribution<std::size_t> count(1, max_points);
  const std::size_t want = count(rng);
  std::set<Point> seen;
  std::vector<Point> points;
  for (int attempt = 0; attempt < 200 && points.size() < want; ++attempt) {
    Vector c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(random_scalar(rng, field, lo, hi));
    Point p(std::move(c));
    if (seen.insert(p).second) points.push_back(p);
  }
  return PointSet(field, n, points);
}

inline Polynomial random_polynomial(std::mt19937& rng, const Field& field, std::size_t n, std::uint32_t max_degree,
                                    std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> terms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> exp(0, max_degree);
  std::vector<Term> out;
  const std::size_t t = terms(rng);
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<std::uint32_t> e(n);
    std::uint32_t budget = exp(rng);
    for (std::size_t j = 0; j < n; ++j) {
      std::uniform_int_distribution<std::uint32_t> part(0, budget);
      e[j] = part(rng);
      budget -= e[j];
    }
    out.push_back({Monomial(e), random_scalar(rng, field, -4, 4)});
  }
  return Polynomial(field, n, out);
}

}  // namespace oracle
