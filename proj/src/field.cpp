#include "almostcover/field.hpp"

#include <charconv>

#include "almostcover/error.hpp"

namespace almostcover {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce_mpz(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

// Deterministic Miller-Rabin; these bases are exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long value) const {
  if (is_rational()) return Scalar(*this, mpq_class(static_cast<long>(value)));
  if (p_ > static_cast<std::uint64_t>(INT64_MAX)) return from_integer(mpz_class(static_cast<long>(value)));
  long long r = value % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return Scalar(*this, static_cast<std::uint64_t>(r));
}

Scalar Field::from_integer(const mpz_class& value) const {
  if (is_rational()) return Scalar(*this, mpq_class(value));
  return Scalar(*this, reduce_mpz(value, p_));
}

Scalar Field::from_rational(const mpq_class& value) const {
  if (value.get_den() == 0) throw Error("zero denominator");
  if (is_rational()) {
    mpq_class canonical(value);
    canonical.canonicalize();
    return Scalar(*this, canonical);
  }
  Scalar num = from_integer(value.get_num());
  Scalar den = from_integer(value.get_den());
  if (den.is_zero()) throw Error("denominator " + value.get_den().get_str() + " is not invertible mod " + std::to_string(p_));
  return num / den;
}

Scalar Field::parse(std::string_view text) const {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw Error("empty number");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw Error("bad number '" + std::string(text) + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw Error("bad number '" + std::string(text) + "'");
    }
    std::string digits(part[0] == '+' ? part.substr(1) : part);
    return mpz_class(digits, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_integer(parse_int(text));
  mpz_class num = parse_int(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw Error("bad number '" + std::string(text) + "'");
  }
  mpz_class den = parse_int(den_text);
  if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  return from_rational(mpq_class(num, den));
}

std::string Field::name() const {
  return is_rational() ? "rational" : "gf:" + std::to_string(p_);
}

Field Field::parse_name(std::string_view text) {
  if (text == "rational" || text == "Q" || text == "rationals") return rational();
  if (text.substr(0, 3) == "gf:") {
    std::string_view digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw Error("bad field '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw Error("unknown field '" + std::string(text) + "' (expected rational or gf:<p>)");
}

void require_same_field(const Field& a, const Field& b) {
  if (a != b) throw Error("field mismatch: " + a.name() + " vs " + b.name());
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw Error("scalar is not rational");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw Error("scalar is not a residue");
  return std::get<std::uint64_t>(value_);
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
  std::uint64_t r = std::get<std::uint64_t>(value_);
  return Scalar(field_, r == 0 ? 0 : field_.characteristic() - r);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (field_.is_rational()) return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
  std::uint64_t p = field_.characteristic();
  return Scalar(field_, pow_mod(std::get<std::uint64_t>(value_), p - 2, p));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_);
  if (a.field_.is_rational()) {
    return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
  }
  std::uint64_t p = a.field_.characteristic();
  std::uint64_t x = std::get<std::uint64_t>(a.value_), y = std::get<std::uint64_t>(b.value_);
  return Scalar(a.field_, static_cast<std::uint64_t>((static_cast<u128>(x) + y) % p));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_);
  if (a.field_.is_rational()) {
    return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
  }
  return Scalar(a.field_, mul_mod(std::get<std::uint64_t>(a.value_), std::get<std::uint64_t>(b.value_),
                                  a.field_.characteristic()));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return a.field_.characteristic() <=> b.field_.characteristic();
  if (a.field_.is_rational()) {
    int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  return std::get<std::uint64_t>(a.value_) <=> std::get<std::uint64_t>(b.value_);
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

}  // namespace almostcover
