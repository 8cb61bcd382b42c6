#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "almostcover/linalg.hpp"
#include "almostcover/polynomial.hpp"

namespace almostcover {

// chi_w written in the standard-monomial basis.
struct IndicatorExpansion {
  Point point;
  // Parallel to GroebnerData::standard_monomials(); zeros included.
  std::vector<Scalar> coefficients;
  Polynomial polynomial;
};

// Reduced deglex Groebner basis of the vanishing ideal I(V) together with
// the standard monomials Sm(V) and the indicator functions of the points.
class GroebnerData {
 public:
  // Buchberger-Moller. Throws Error on an empty set.
  explicit GroebnerData(PointSet points);

  const PointSet& points() const { return points_; }
  const Field& field() const { return points_.field(); }
  std::size_t nvars() const { return points_.dim(); }
  TermOrder order() const { return TermOrder::deglex; }

  // Sorted by increasing leading monomial.
  const std::vector<Polynomial>& basis() const { return basis_; }
  // Increasing deglex order.
  const std::vector<Monomial>& standard_monomials() const { return standard_; }
  std::uint32_t max_standard_degree() const;

  // Throws Error if w is not one of the points.
  IndicatorExpansion indicator_expansion(const Point& w) const;
  IndicatorExpansion indicator_expansion(std::size_t point_index) const;

  Polynomial normal_form(const Polynomial& f) const;

  // deg NF(chi_v): the least degree of a polynomial vanishing on V \ {v}
  // but not at v.
  std::uint32_t separating_degree(const Point& v) const;
  std::uint32_t separating_degree(std::size_t point_index) const;

  // Descriptions of every violated structural invariant; empty when sound.
  std::vector<std::string> check_invariants() const;

 private:
  void run_buchberger_moller();
  void solve_indicators();

  PointSet points_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> standard_;
  // indicator_[w][k]: coefficient of standard_[k] in chi of point w.
  std::vector<std::vector<Scalar>> indicator_;
};

inline GroebnerData buchberger_moller(const PointSet& v) { return GroebnerData(v); }
std::vector<Monomial> standard_monomials(const PointSet& v);
std::uint32_t separating_degree(const PointSet& set, const Point& v);

}  // namespace almostcover
