#include "almostcover/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "almostcover/bounds.hpp"
#include "almostcover/cover.hpp"
#include "almostcover/error.hpp"
#include "almostcover/families.hpp"
#include "almostcover/vanishing.hpp"

namespace almostcover {
namespace {

std::string num(long value) { return std::to_string(value); }

long limit(const VerifyOptions& options, long fallback) { return options.max_n > 0 ? options.max_n : fallback; }

FamilySpec family(std::string_view text) { return FamilySpec::parse(text); }

std::string label(std::string_view what, const FamilySpec& spec) { return std::string(what) + " " + spec.to_string(); }

AcOptions ac_options(const VerifyOptions& options, std::vector<AffineMap> symmetry = {}) {
  AcOptions out;
  out.solve.budget = options.budget;
  out.threads = options.threads;
  out.symmetry = std::move(symmetry);
  return out;
}

// Coordinate transpositions: a symmetry of every vnk family.
std::vector<AffineMap> swaps(const Field& field, std::size_t n) {
  std::vector<AffineMap> out;
  for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(AffineMap::swap(field, n, i, i + 1));
  return out;
}

// cor_e <= count <= cube (0-1 sets) <= certificate <= exact.
VerifyCheck bound_chain(std::string name, const PointSet& set, long exact, bool exact_optimal) {
  const long n = static_cast<long>(set.dim());
  const mpz_class count(static_cast<unsigned long>(set.size()));
  GroebnerData gb(set);
  const long cor = cor_bounds(n, count).e_root.value;
  const long counting = counting_lower_bound(n, count).value;
  const long cert = certificate_lower_bound(gb).value;
  long cube = counting;
  bool ok = cor <= counting;
  std::string detail = "cor_e " + num(cor) + " <= count " + num(counting);
  if (set.is_zero_one()) {
    cube = cube_counting_lower_bound(n, count).value;
    ok = ok && counting <= cube;
    detail += " <= cube " + num(cube);
  }
  ok = ok && cube <= cert && cert <= exact && exact_optimal;
  detail += " <= cert " + num(cert) + " <= exact " + num(exact);
  if (!exact_optimal) detail += " (exact search not optimal)";
  return {std::move(name), ok, std::move(detail)};
}

std::vector<Monomial> square_free_up_to(std::size_t n, long k) {
  std::vector<Monomial> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) support.push_back(i);
    }
    if (static_cast<long>(support.size()) <= k) out.push_back(Monomial::square_free(n, support));
  }
  return out;
}

bool same_monomials(std::vector<Monomial> a, std::vector<Monomial> b) {
  auto less = [](const Monomial& x, const Monomial& y) { return x.exponents() < y.exponents(); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

// Sm(V(n,k)) = {x_K : |K| <= k}, and every extra cube vertex v needs degree
// k + 1 with the new standard monomial x_M, M in supp(v), |M| = k + 1.
void suite_main(const VerifyOptions&, VerifyReport& report) {
  for (long n = 1; n <= report.max_n; ++n) {
    const PointSet cube = generate(family("cube:" + num(n)));
    for (long k = 0; k < n; ++k) {
      const FamilySpec spec = family("vnk:" + num(n) + ":" + num(k));
      const PointSet base = generate(spec);
      const std::vector<Monomial> expected = square_free_up_to(static_cast<std::size_t>(n), k);
      const bool sm_ok = same_monomials(standard_monomials(base), expected);
      report.checks.push_back({label("standard monomials", spec), sm_ok,
                               sm_ok ? "{x_K : |K| <= " + num(k) + "}" : "unexpected standard monomials"});

      long tested = 0;
      std::string failure;
      for (const Point& v : cube.points()) {
        if (base.contains(v)) continue;
        ++tested;
        const PointSet extended = base.with_point(v);
        const GroebnerData gb(extended);
        const auto degree = static_cast<long>(gb.separating_degree(extended.size() - 1));
        std::vector<Monomial> extra;
        for (const Monomial& m : gb.standard_monomials()) {
          if (std::find(expected.begin(), expected.end(), m) == expected.end()) extra.push_back(m);
        }
        bool ok = degree == k + 1 && extra.size() == 1;
        if (ok) {
          const Monomial& m = extra.front();
          ok = m.is_square_free() && static_cast<long>(m.degree()) == k + 1;
          for (std::size_t i : m.support()) ok = ok && v[i].is_one();
        }
        if (!ok && failure.empty()) {
          failure = "v = " + v.to_string() + ": separating degree " + num(degree);
          if (extra.size() == 1) failure += ", extra monomial " + extra.front().to_string();
        }
      }
      report.checks.push_back({label("separating degree", spec), failure.empty(),
                               failure.empty() ? num(tested) + " points, all of degree " + num(k + 1) : failure});
    }
  }
}

// J(n, q): the counting bound is q - 1, which the exact solver attains.
void suite_main2(const VerifyOptions& options, VerifyReport& report) {
  const std::vector<std::pair<long, long>> grid = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
  for (auto [n, q] : grid) {
    if (n > report.max_n) continue;
    const FamilySpec spec = family("jnq:" + num(n) + ":" + num(q));
    const PointSet set = generate(spec);
    const long count = counting_lower_bound(n, binomial(n + q - 1, q - 1)).value;
    report.checks.push_back({label("counting bound", spec), count == q - 1, "count " + num(count)});
    const AcNumbers ac = ac_numbers(set, ac_options(options));
    report.checks.push_back(bound_chain(label("bound chain", spec), set, ac.max_value, ac.optimal));
  }
}

// 0-1 sets: cube counting is tight on V(n,k) and on the full cube.
void suite_main3(const VerifyOptions& options, VerifyReport& report) {
  for (long n = 1; n <= std::min<long>(report.max_n, 4); ++n) {
    for (long k = 0; k < n; ++k) {
      const FamilySpec spec = family("vnk:" + num(n) + ":" + num(k));
      const PointSet set = generate(spec);
      mpz_class size(static_cast<unsigned long>(set.size()));
      const long at_size = cube_counting_lower_bound(n, size).value;
      const long above = cube_counting_lower_bound(n, size + 1).value;
      report.checks.push_back({label("cube counting", spec), at_size == k && above == k + 1,
                               "N = |V| gives " + num(at_size) + ", N = |V| + 1 gives " + num(above)});
      const AcNumbers ac = ac_numbers(set, ac_options(options, swaps(set.field(), set.dim())));
      report.checks.push_back(bound_chain(label("bound chain", spec), set, ac.max_value, ac.optimal));
    }
    const FamilySpec spec = family("cube:" + num(n));
    const PointSet set = generate(spec);
    const AcNumbers ac = ac_numbers(set, ac_options(options, symmetry_generators(spec)));
    report.checks.push_back(bound_chain(label("bound chain", spec), set, ac.max_value, ac.optimal));
  }
}

// Transitive symmetry makes AC(V, .) constant. Every point is solved on its
// own, without using the symmetry.
void suite_main4(const VerifyOptions& options, VerifyReport& report) {
  std::vector<std::string> specs;
  for (long n = 1; n <= std::min<long>(report.max_n, 3); ++n) specs.push_back("cube:" + num(n));
  specs.push_back("perm:3");
  specs.push_back("ag:2:2");
  specs.push_back("ag:2:3");
  for (const std::string& text : specs) {
    const FamilySpec spec = family(text);
    const PointSet set = generate(spec);
    const std::vector<AffineMap> gens = symmetry_generators(spec);
    const OrbitPartition orbits = orbit_reduce(set, gens);
    const AcNumbers ac = ac_numbers(set, ac_options(options));
    const bool ok = orbits.is_transitive && ac.optimal && ac.max_value == ac.min_value;
    report.checks.push_back({label("constancy", spec), ok,
                             std::string(orbits.is_transitive ? "transitive" : "not transitive") + ", per-point values " +
                                 num(ac.min_value) + ".." + num(ac.max_value)});
  }
}

void suite_sharpness(const VerifyOptions& options, VerifyReport& report) {
  const long top = std::min<long>(report.max_n, 4);
  for (long n = 1; n <= top; ++n) {
    for (long k = 0; k < n; ++k) {
      const FamilySpec spec = family("vnk:" + num(n) + ":" + num(k));
      const PointSet set = generate(spec);
      const std::vector<Hyperplane> witness = sharp_cover_vnk(n, k);
      const bool witness_ok = witness.size() == static_cast<std::size_t>(k) && verify_cover(set, set[0], witness);
      const AcNumbers ac = ac_numbers(set, ac_options(options, swaps(set.field(), set.dim())));
      bool covers_ok = true;
      for (const CoverSolution& s : ac.per_point) covers_ok = covers_ok && verify_cover(set, s.excluded, s.hyperplanes);
      report.checks.push_back({label("AC = k", spec), witness_ok && covers_ok && ac.optimal && ac.max_value == k,
                               "AC " + num(ac.max_value) + ", sum-hyperplane witness " +
                                   (witness_ok ? "accepted" : "rejected")});
    }
  }
  for (long n = 1; n <= top; ++n) {
    const FamilySpec spec = family("cube:" + num(n));
    const AcNumbers ac = ac_numbers(generate(spec), ac_options(options, symmetry_generators(spec)));
    report.checks.push_back({label("AC = n", spec), ac.optimal && ac.max_value == n && ac.min_value == n,
                             "AC " + num(ac.max_value) + ", ac " + num(ac.min_value)});
  }
  const std::vector<std::pair<long, long>> grid = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
  for (auto [n, q] : grid) {
    if (n > report.max_n) continue;
    const FamilySpec spec = family("jnq:" + num(n) + ":" + num(q));
    const AcNumbers ac = ac_numbers(generate(spec), ac_options(options));
    report.checks.push_back(
        {label("AC = q - 1", spec), ac.optimal && ac.max_value == q - 1, "AC " + num(ac.max_value)});
  }
}

void suite_binomial(const VerifyOptions&, VerifyReport& report) {
  for (long n = 1; n <= report.max_n; ++n) {
    std::string failure;
    long checked = 0;
    for (long k = -n + 1; k <= n; ++k) {
      const BinomialCheck check = check_binomial_inequalities(n, k);
      ++checked;
      if (!check.passed() && failure.empty()) failure = "fails at k = " + num(k);
    }
    report.checks.push_back({"binomial n=" + num(n), failure.empty(),
                             failure.empty() ? num(checked) + " values of k" : failure});
  }
}

void suite_szw(const VerifyOptions&, VerifyReport& report) {
  for (long n = 1; n <= report.max_n; ++n) {
    const PointSet cube = generate(family("cube:" + num(n)));
    for (long k = 0; k < n; ++k) {
      const FamilySpec spec = family("vnk:" + num(n) + ":" + num(k));
      const PointSet set = generate(spec);
      const Polynomial f = szw_sharp_polynomial(n, k);
      const bool in_ideal = GroebnerData(set).normal_form(f).is_zero();
      bool nonzero_off = true;
      for (const Point& v : cube.points()) {
        if (!set.contains(v)) nonzero_off = nonzero_off && !f.evaluate(v).is_zero();
      }
      report.checks.push_back({label("sharp polynomial", spec), in_ideal && nonzero_off,
                               std::string(in_ideal ? "normal form 0" : "normal form nonzero") +
                                   (nonzero_off ? ", nonzero off V" : ", vanishes off V")});
    }
  }
}

struct Suite {
  long default_max_n;
  std::function<void(const VerifyOptions&, VerifyReport&)> run;
};

const std::map<std::string, Suite, std::less<>>& suites() {
  static const std::map<std::string, Suite, std::less<>> table = {
      {"main", {5, suite_main}},           {"main2", {3, suite_main2}},       {"main3", {4, suite_main3}},
      {"main4", {3, suite_main4}},         {"sharpness", {4, suite_sharpness}}, {"binomial", {30, suite_binomial}},
      {"szw", {5, suite_szw}},
  };
  return table;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"main", "main2", "main3", "main4", "sharpness", "binomial", "szw"};
  return names;
}

VerifyReport run_verify_suite(std::string_view suite, const VerifyOptions& options) {
  auto it = suites().find(suite);
  if (it == suites().end()) {
    std::string known;
    for (const std::string& name : verify_suite_names()) known += (known.empty() ? "" : ", ") + name;
    throw Error("unknown suite '" + std::string(suite) + "' (known: " + known + ")");
  }
  VerifyReport report;
  report.suite = it->first;
  report.max_n = limit(options, it->second.default_max_n);
  it->second.run(options, report);
  return report;
}

}  // namespace almostcover
