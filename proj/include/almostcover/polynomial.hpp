#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "almostcover/field.hpp"
#include "almostcover/linalg.hpp"

namespace almostcover {

// x^alpha as a dense exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);
  // x_F for a set of zero-based variable indices.
  static Monomial square_free(std::size_t nvars, std::span<const std::size_t> support);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }

  bool divides(const Monomial& other) const;
  // Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  bool is_square_free() const;
  // Zero-based indices with positive exponent.
  std::vector<std::size_t> support() const;

  Scalar evaluate(const Point& p) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  // "1", "x1", "x1^2*x3".
  std::string to_string() const;

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

// Variable precedence is x1 > x2 > ... > xn for both orders. deglex compares
// total degree first and breaks ties lexicographically.
enum class TermOrder { deglex, lex };

// Throws Error on a dimension mismatch.
std::strong_ordering compare(TermOrder order, const Monomial& a, const Monomial& b);

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

// A polynomial in canonical form: nonzero terms only, sorted by decreasing
// monomial under its term order.
class Polynomial {
 public:
  Polynomial(Field field, std::size_t nvars, TermOrder order = TermOrder::deglex);
  // Combines like terms and drops zeros.
  Polynomial(Field field, std::size_t nvars, std::vector<Term> terms, TermOrder order = TermOrder::deglex);

  static Polynomial constant(Field field, std::size_t nvars, const Scalar& c);
  static Polynomial monomial(Field field, std::size_t nvars, const Monomial& m, const Scalar& c);
  static Polynomial variable(Field field, std::size_t nvars, std::size_t index);
  // normal . x - offset.
  static Polynomial linear_form(const Hyperplane& h);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  TermOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;

  // lm and lc. Throws Error on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Scalar& leading_coefficient() const { return leading_term().coefficient; }

  // Coefficient of m, zero when absent.
  Scalar coefficient(const Monomial& m) const;

  Scalar evaluate(const Point& p) const;
  // Re-sorts the terms under another order.
  Polynomial with_order(TermOrder order) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times(const Monomial& m, const Scalar& c) const;
  Polynomial without_leading_term() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Terms in descending order, e.g. "x1*x2 - 2*x2 + 1".
  std::string to_string() const;
  // Inverse of to_string; throws ParseError.
  static Polynomial parse(std::string_view text, Field field, std::size_t nvars,
                          TermOrder order = TermOrder::deglex);

 private:
  void check_compatible(const Polynomial& other) const;

  Field field_;
  std::size_t nvars_;
  TermOrder order_;
  std::vector<Term> terms_;
};

// Normal form of f modulo divisors: repeatedly rewrites the largest monomial
// divisible by some lm(g) (the first such g in list order) as
// u * (lm(g) - g / lc(g)) until no monomial is divisible. Throws Error on a
// zero divisor.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors, TermOrder order = TermOrder::deglex);

}  // namespace almostcover
