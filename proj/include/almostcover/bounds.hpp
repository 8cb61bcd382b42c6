#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "almostcover/linalg.hpp"
#include "almostcover/vanishing.hpp"

namespace almostcover {

enum class BoundMethod { count, cube_count, certificate, cor_4n, cor_e };

std::string to_string(BoundMethod method);

// A lower bound on the almost-cover number AC(V) (or AC(V, v) for a
// certificate at a given point).
struct BoundReport {
  BoundMethod method;
  long value = 0;
  std::optional<std::size_t> certificate_index;
  std::optional<Point> certificate_point;
  // Exact intermediate quantities, serialized as strings.
  std::vector<std::pair<std::string, std::string>> details;
};

// C(a, b); zero when b < 0 or b > a.
mpz_class binomial(long a, long b);

// Number of monomials of degree at most k in n variables: C(n+k, n).
mpz_class ball_size(long n, long k);

// min{k : C(n+k, n) >= N}.
BoundReport counting_lower_bound(long n, const mpz_class& count);
// min{k : sum_{i<=k} C(n, i) >= N}, valid for 0-1 point sets.
BoundReport cube_counting_lower_bound(long n, const mpz_class& count);

// With a point: the separating degree at that point. Without: the maximum over
// all points, which equals the largest standard-monomial degree.
BoundReport certificate_lower_bound(const GroebnerData& gb, std::optional<Point> v = std::nullopt);
BoundReport certificate_lower_bound(const PointSet& set, std::optional<Point> v = std::nullopt);

// The bracket 2.718281828 < e < 2.718281829.
mpq_class e_lower();
mpq_class e_upper();

struct CorollaryBounds {
  bool exceeds_dimension = false;  // N >= 4^n, hence AC > n
  mpq_class scaled_root;            // certified lower bound of n N^(1/n) / e - n
  BoundReport four_n;
  BoundReport e_root;
};

CorollaryBounds cor_bounds(long n, const mpz_class& count);

struct BinomialCheck {
  bool upper_applies = false;  // 1 <= k <= n: C(n,k) < (ne/k)^k
  bool upper_holds = false;
  bool ball_applies = false;  // k > -n: C(n+k,n) < e^n (1+k/n)^n
  bool ball_holds = false;

  bool passed() const { return (!upper_applies || upper_holds) && (!ball_applies || ball_holds); }
};

// Both sides use the lower end of the e bracket, so a pass is conclusive.
// Throws Error when neither inequality applies to (n, k).
BinomialCheck check_binomial_inequalities(long n, long k);

}  // namespace almostcover
