#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace almostcover {

class Scalar;

// The ground field: the rationals or a prime field GF(p) with p < 2^64.
class Field {
 public:
  Field() = default;

  static Field rational() { return Field{}; }
  // Throws Error unless p is prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  // 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;
  Scalar from_integer(const mpz_class& value) const;
  // Rationals must have a nonzero denominator; over GF(p) the denominator
  // must be invertible.
  Scalar from_rational(const mpq_class& value) const;
  // Accepts "a" or "a/b" with optional sign.
  Scalar parse(std::string_view text) const;

  // "rational" or "gf:<p>".
  std::string name() const;
  static Field parse_name(std::string_view text);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// An exact field element. Rationals are kept in lowest terms with positive
// denominator; residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Throws Error on a non-rational scalar.
  const mpq_class& rational() const;
  // Throws Error on a rational scalar.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws Error on zero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  // Scalars of different fields compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);
  // Canonical total order: by field, then numeric value (residues by
  // representative). Used for sorting, not for field semantics.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  // "3/7", "-2", or the residue as a decimal integer.
  std::string to_string() const;

 private:
  friend class Field;
  Scalar(Field field, mpq_class value) : field_(field), value_(std::move(value)) {}
  Scalar(Field field, std::uint64_t residue) : field_(field), value_(residue) {}

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

// Throws Error unless both scalars live in the same field.
void require_same_field(const Field& a, const Field& b);

}  // namespace almostcover
