#include "almostcover/vanishing.hpp"

#include <algorithm>
#include <set>

#include "almostcover/error.hpp"

namespace almostcover {
namespace {

struct EliminationRow {
  Vector values;  // reduced evaluation vector, 1 at pivot
  std::size_t pivot;
  Vector combination;  // values = sum_k combination[k] * eval(standard_k)
};

bool deglex_less(const Monomial& a, const Monomial& b) { return compare(TermOrder::deglex, a, b) < 0; }

}  // namespace

GroebnerData::GroebnerData(PointSet points) : points_(std::move(points)) {
  if (points_.empty()) throw Error("vanishing ideal of an empty point set");
  run_buchberger_moller();
  solve_indicators();
}

// Scans monomials by increasing deglex, one degree at a time. A candidate is
// either independent of the accepted standard monomials as a function on V
// (and becomes standard) or its dependency is a reduced basis element. Only
// monomials all of whose divisors are standard are candidates, so every
// leading monomial found is a minimal generator of the leading ideal.
void GroebnerData::run_buchberger_moller() {
  const Field field = points_.field();
  const std::size_t n = points_.dim();
  const std::size_t count = points_.size();

  std::vector<Vector> standard_evals;
  std::vector<EliminationRow> rows;
  std::vector<Monomial> leading;

  std::vector<Monomial> frontier{Monomial::one(n)};
  std::vector<Vector> frontier_evals{Vector(count, field.one())};
  while (!frontier.empty()) {
    std::vector<std::size_t> accepted;  // indices into standard_ added at this degree
    for (std::size_t c = 0; c < frontier.size(); ++c) {
      const Monomial& t = frontier[c];
      Vector e = frontier_evals[c];
      Vector combination(standard_.size(), field.zero());
      for (const EliminationRow& row : rows) {
        Scalar factor = e[row.pivot];
        if (factor.is_zero()) continue;
        for (std::size_t i = 0; i < count; ++i) e[i] -= factor * row.values[i];
        for (std::size_t k = 0; k < row.combination.size(); ++k) combination[k] -= factor * row.combination[k];
      }
      auto nz = std::find_if(e.begin(), e.end(), [](const Scalar& x) { return !x.is_zero(); });
      if (nz == e.end()) {
        std::vector<Term> terms{Term{t, field.one()}};
        for (std::size_t k = 0; k < combination.size(); ++k) terms.push_back(Term{standard_[k], combination[k]});
        basis_.emplace_back(field, n, std::move(terms));
        leading.push_back(t);
        continue;
      }
      const std::size_t pivot = static_cast<std::size_t>(nz - e.begin());
      Scalar inv = e[pivot].inverse();
      for (Scalar& x : e) x *= inv;
      for (Scalar& x : combination) x *= inv;
      combination.push_back(inv);
      for (EliminationRow& row : rows) row.combination.resize(standard_.size() + 1, field.zero());
      rows.push_back(EliminationRow{std::move(e), pivot, std::move(combination)});
      accepted.push_back(standard_.size());
      standard_.push_back(t);
      standard_evals.push_back(frontier_evals[c]);
    }

    // Next degree: multiples x_i * s of this degree's standard monomials that
    // no leading monomial divides.
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::pair<Monomial, Vector>> next;
    for (std::size_t k : accepted) {
      for (std::size_t i = 0; i < n; ++i) {
        Monomial m = standard_[k] * Monomial::variable(n, i);
        if (!seen.insert(m.exponents()).second) continue;
        bool divisible = std::any_of(leading.begin(), leading.end(), [&](const Monomial& l) { return l.divides(m); });
        if (divisible) continue;
        Vector eval(count);
        for (std::size_t p = 0; p < count; ++p) eval[p] = standard_evals[k][p] * points_[p][i];
        next.emplace_back(std::move(m), std::move(eval));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return deglex_less(a.first, b.first); });
    frontier.clear();
    frontier_evals.clear();
    for (auto& [m, eval] : next) {
      frontier.push_back(std::move(m));
      frontier_evals.push_back(std::move(eval));
    }
  }

  std::sort(basis_.begin(), basis_.end(), [](const Polynomial& a, const Polynomial& b) {
    return deglex_less(a.leading_monomial(), b.leading_monomial());
  });
}

// Inverts the evaluation matrix A[p][k] = standard_k(point p); column w of the
// inverse holds the coefficients of chi_w.
void GroebnerData::solve_indicators() {
  const Field field = points_.field();
  const std::size_t count = points_.size();
  if (standard_.size() != count) {
    throw InvariantViolation("|Sm(V)| = " + std::to_string(standard_.size()) + " differs from |V| = " +
                             std::to_string(count));
  }
  std::vector<Vector> augmented(count, Vector(2 * count, field.zero()));
  for (std::size_t p = 0; p < count; ++p) {
    for (std::size_t k = 0; k < count; ++k) augmented[p][k] = standard_[k].evaluate(points_[p]);
    augmented[p][count + p] = field.one();
  }
  RowEchelon e = rref(Matrix(field, std::move(augmented)));
  if (e.rank < count || e.pivots[count - 1] != count - 1) {
    throw InvariantViolation("standard monomials are not a basis of the functions on V");
  }
  indicator_.assign(count, Vector(count, field.zero()));
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t w = 0; w < count; ++w) indicator_[w][k] = e.reduced[k][count + w];
  }
}

std::uint32_t GroebnerData::max_standard_degree() const {
  std::uint32_t d = 0;
  for (const Monomial& m : standard_) d = std::max(d, m.degree());
  return d;
}

IndicatorExpansion GroebnerData::indicator_expansion(const Point& w) const {
  return indicator_expansion(points_.index_of(w));
}

IndicatorExpansion GroebnerData::indicator_expansion(std::size_t point_index) const {
  if (point_index >= points_.size()) throw Error("point index out of range");
  const Vector& coefs = indicator_[point_index];
  std::vector<Term> terms;
  for (std::size_t k = 0; k < standard_.size(); ++k) terms.push_back(Term{standard_[k], coefs[k]});
  return IndicatorExpansion{points_[point_index], coefs, Polynomial(field(), nvars(), std::move(terms))};
}

Polynomial GroebnerData::normal_form(const Polynomial& f) const {
  require_same_field(f.field(), field());
  if (f.nvars() != nvars()) throw Error("polynomial dimension mismatch");
  return reduce(f, basis_, TermOrder::deglex);
}

std::uint32_t GroebnerData::separating_degree(const Point& v) const { return separating_degree(points_.index_of(v)); }

std::uint32_t GroebnerData::separating_degree(std::size_t point_index) const {
  if (point_index >= points_.size()) throw Error("point index out of range");
  std::uint32_t d = 0;
  for (std::size_t k = 0; k < standard_.size(); ++k) {
    if (!indicator_[point_index][k].is_zero()) d = std::max(d, standard_[k].degree());
  }
  return d;
}

std::vector<std::string> GroebnerData::check_invariants() const {
  std::vector<std::string> problems;
  if (standard_.size() != points_.size()) problems.push_back("|Sm(V)| != |V|");
  for (std::size_t k = 0; k + 1 < standard_.size(); ++k) {
    if (!deglex_less(standard_[k], standard_[k + 1])) problems.push_back("standard monomials not increasing");
  }
  auto is_standard = [&](const Monomial& m) {
    return std::binary_search(standard_.begin(), standard_.end(), m, deglex_less);
  };
  for (const Monomial& m : standard_) {
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      Monomial divisor = Monomial::variable(m.nvars(), i).quotient_of(m);
      if (!is_standard(divisor)) problems.push_back("Sm(V) is not a down-set at " + m.to_string());
    }
  }
  if (points_.is_zero_one()) {
    for (const Monomial& m : standard_) {
      if (!m.is_square_free()) problems.push_back("non-square-free standard monomial " + m.to_string());
    }
  }
  for (const Polynomial& g : basis_) {
    for (const Point& p : points_.points()) {
      if (!g.evaluate(p).is_zero()) problems.push_back(g.to_string() + " does not vanish at " + p.to_string());
    }
    if (is_standard(g.leading_monomial())) problems.push_back("leading monomial of " + g.to_string() + " is standard");
    if (!g.leading_coefficient().is_one()) problems.push_back(g.to_string() + " is not monic");
    for (std::size_t t = 1; t < g.terms().size(); ++t) {
      if (!is_standard(g.terms()[t].monomial)) problems.push_back(g.to_string() + " is not reduced");
    }
  }
  return problems;
}

std::vector<Monomial> standard_monomials(const PointSet& v) { return GroebnerData(v).standard_monomials(); }

std::uint32_t separating_degree(const PointSet& set, const Point& v) { return GroebnerData(set).separating_degree(v); }

}  // namespace almostcover
