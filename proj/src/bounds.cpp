#include "almostcover/bounds.hpp"

#include "almostcover/error.hpp"

namespace almostcover {
namespace {

mpq_class power(const mpq_class& base, unsigned long exp) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exp);
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

mpz_class floor_of(const mpq_class& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

void require_dimension(long n) {
  if (n < 1) throw Error("dimension must be at least 1");
}

void require_count(const mpz_class& count) {
  if (count < 1) throw Error("point count must be at least 1");
}

}  // namespace

std::string to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::count: return "count";
    case BoundMethod::cube_count: return "cube";
    case BoundMethod::certificate: return "cert";
    case BoundMethod::cor_4n: return "cor_4n";
    case BoundMethod::cor_e: return "cor_e";
  }
  return "?";
}

mpz_class binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

mpz_class ball_size(long n, long k) {
  if (n < 1 || k < 0) throw Error("ball_size needs n >= 1 and k >= 0");
  return binomial(n + k, n);
}

BoundReport counting_lower_bound(long n, const mpz_class& count) {
  require_dimension(n);
  require_count(count);
  long k = 0;
  while (ball_size(n, k) < count) ++k;
  BoundReport r{BoundMethod::count, k, std::nullopt, std::nullopt, {}};
  r.details.emplace_back("N", count.get_str());
  r.details.emplace_back("C(n+k,n) at k", ball_size(n, k).get_str());
  if (k > 0) r.details.emplace_back("C(n+k-1,n)", ball_size(n, k - 1).get_str());
  return r;
}

BoundReport cube_counting_lower_bound(long n, const mpz_class& count) {
  require_dimension(n);
  require_count(count);
  mpz_class cube = mpz_class(1) << static_cast<mp_bitcnt_t>(n);
  if (count > cube) throw Error("a 0-1 set in dimension " + std::to_string(n) + " has at most 2^n points");
  long k = 0;
  mpz_class sum = 1;
  while (sum < count) {
    ++k;
    sum += binomial(n, k);
  }
  BoundReport r{BoundMethod::cube_count, k, std::nullopt, std::nullopt, {}};
  r.details.emplace_back("N", count.get_str());
  r.details.emplace_back("sum C(n,i), i<=k", sum.get_str());
  return r;
}

BoundReport certificate_lower_bound(const GroebnerData& gb, std::optional<Point> v) {
  BoundReport r{BoundMethod::certificate, 0, std::nullopt, std::nullopt, {}};
  if (v) {
    std::size_t idx = gb.points().index_of(*v);
    r.value = gb.separating_degree(idx);
    r.certificate_index = idx;
    r.certificate_point = gb.points()[idx];
  } else {
    // First point attaining the maximum.
    for (std::size_t i = 0; i < gb.points().size(); ++i) {
      long d = gb.separating_degree(i);
      if (!r.certificate_index || d > r.value) {
        r.value = d;
        r.certificate_index = i;
      }
    }
    r.certificate_point = gb.points()[*r.certificate_index];
  }
  r.details.emplace_back("max standard degree", std::to_string(gb.max_standard_degree()));
  r.details.emplace_back("indicator", gb.indicator_expansion(*r.certificate_index).polynomial.to_string());
  return r;
}

BoundReport certificate_lower_bound(const PointSet& set, std::optional<Point> v) {
  return certificate_lower_bound(GroebnerData(set), std::move(v));
}

mpq_class e_lower() { return mpq_class(mpz_class(2718281828), mpz_class(1000000000)); }
mpq_class e_upper() { return mpq_class(mpz_class(2718281829), mpz_class(1000000000)); }

CorollaryBounds cor_bounds(long n, const mpz_class& count) {
  require_dimension(n);
  require_count(count);
  CorollaryBounds out;
  const auto un = static_cast<unsigned long>(n);

  mpz_class four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, un);
  out.exceeds_dimension = count >= four_pow;
  out.four_n = BoundReport{BoundMethod::cor_4n, out.exceeds_dimension ? n + 1 : 0, std::nullopt, std::nullopt, {}};
  out.four_n.details.emplace_back("4^n", four_pow.get_str());

  // floor((N * D^n)^(1/n)) / D <= N^(1/n), and dividing by the upper end of
  // the e bracket keeps the result below the true value.
  const mpz_class scale = 1000000;
  mpz_class scaled_count, root;
  mpz_pow_ui(scaled_count.get_mpz_t(), scale.get_mpz_t(), un);
  scaled_count *= count;
  mpz_root(root.get_mpz_t(), scaled_count.get_mpz_t(), un);
  mpq_class root_lower(root, scale);
  root_lower.canonicalize();
  out.scaled_root = mpq_class(n) * root_lower / e_upper() - n;
  out.scaled_root.canonicalize();

  mpz_class implied = floor_of(out.scaled_root) + 1;
  long value = implied > 0 ? implied.get_si() : 0;
  out.e_root = BoundReport{BoundMethod::cor_e, value, std::nullopt, std::nullopt, {}};
  out.e_root.details.emplace_back("n*N^(1/n)/e - n (certified lower)", out.scaled_root.get_str());
  return out;
}

BinomialCheck check_binomial_inequalities(long n, long k) {
  BinomialCheck out;
  out.upper_applies = 1 <= k && k <= n;
  out.ball_applies = n >= 1 && k > -n;
  if (!out.upper_applies && !out.ball_applies) {
    throw Error("no binomial inequality applies to n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
  const mpq_class e = e_lower();
  if (out.upper_applies) {
    mpq_class base = mpq_class(n) * e / mpq_class(k);
    base.canonicalize();
    out.upper_holds = mpq_class(binomial(n, k)) < power(base, static_cast<unsigned long>(k));
  }
  if (out.ball_applies) {
    mpq_class ratio{mpz_class(n + k), mpz_class(n)};
    ratio.canonicalize();
    mpq_class rhs = power(e, static_cast<unsigned long>(n)) * power(ratio, static_cast<unsigned long>(n));
    out.ball_holds = mpq_class(binomial(n + k, n)) < rhs;
  }
  return out;
}

}  // namespace almostcover
