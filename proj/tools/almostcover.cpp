// almostcover: Groebner bases of vanishing ideals, almost-cover lower bounds
// and exact minimum almost covers from the command line.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "almostcover/bounds.hpp"
#include "almostcover/cover.hpp"
#include "almostcover/error.hpp"
#include "almostcover/families.hpp"
#include "almostcover/io.hpp"
#include "almostcover/vanishing.hpp"
#include "almostcover/verify.hpp"

namespace ac = almostcover;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

struct InputArgs {
  std::string file;
  std::string family;
};

struct Loaded {
  ac::PointSet set;
  std::optional<ac::FamilySpec> spec;
  json description;
};

Loaded load(const InputArgs& args) {
  if (args.file.empty() == args.family.empty()) throw ac::Error("give exactly one of an input file or --family");
  if (!args.family.empty()) {
    ac::FamilySpec spec = ac::FamilySpec::parse(args.family);
    return {ac::generate(spec), spec, json{{"kind", "family"}, {"spec", spec.to_string()}}};
  }
  return {ac::read_point_set_file(args.file), std::nullopt, json{{"kind", "file"}, {"path", args.file}}};
}

unsigned thread_count() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ALMOSTCOVER_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (*end != '\0' || cap == 0) throw ac::Error("ALMOSTCOVER_THREADS must be a positive integer");
    threads = static_cast<unsigned>(std::min<unsigned long>(cap, threads));
  }
  return threads;
}

std::string str(long long value) { return std::to_string(value); }

json point_json(const ac::Point& p) {
  json out = json::array();
  for (const ac::Scalar& c : p.coords()) out.push_back(c.to_string());
  return out;
}

json bound_json(const ac::BoundReport& r) {
  json out{{"method", ac::to_string(r.method)}, {"value", str(r.value)}};
  if (r.certificate_index) out["certificate_index"] = str(static_cast<long long>(*r.certificate_index));
  if (r.certificate_point) out["certificate_point"] = point_json(*r.certificate_point);
  json details = json::object();
  for (const auto& [key, value] : r.details) details[key] = value;
  out["details"] = details;
  return out;
}

json solution_json(const ac::CoverSolution& s) {
  json hyperplanes = json::array();
  for (const ac::Hyperplane& h : s.hyperplanes) hyperplanes.push_back(h.to_string());
  json out{{"index", str(static_cast<long long>(s.excluded_index))},
           {"point", point_json(s.excluded)},
           {"size", str(static_cast<long long>(s.size))},
           {"lower_bound", str(s.lower_bound_used)},
           {"optimal", s.optimal},
           {"nodes", std::to_string(s.nodes)},
           {"hyperplanes", hyperplanes}};
  if (s.transported_from) out["transported_from"] = str(static_cast<long long>(*s.transported_from));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const std::string& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

// A command's JSON document and its human-readable rendering.
struct Report {
  json doc;
  std::vector<std::string> lines;
  int exit_code = 0;

  Report(const std::string& command, const Loaded* in) {
    doc["schema"] = 1;
    doc["command"] = command;
    if (in != nullptr) {
      doc["input"] = in->description;
      doc["field"] = in->set.field().name();
      doc["dim"] = str(static_cast<long long>(in->set.dim()));
      doc["size"] = str(static_cast<long long>(in->set.size()));
    }
    doc["results"] = json::object();
    doc["optimal"] = true;
    doc["warnings"] = json::array();
  }

  void warn(const std::string& message) {
    doc["warnings"].push_back(message);
    lines.push_back("warning: " + message);
  }
};

std::string headline(const Loaded& in) {
  const std::string name = in.spec ? in.spec->to_string() : in.description["path"].get<std::string>();
  return name + " over " + in.set.field().name() + ", dim " + str(static_cast<long long>(in.set.dim())) + ", " +
         str(static_cast<long long>(in.set.size())) + " points";
}

std::size_t checked_index(const ac::PointSet& set, std::size_t index) {
  if (index >= set.size()) {
    throw ac::Error("point index " + std::to_string(index) + " out of range (set has " + std::to_string(set.size()) +
                    " points)");
  }
  return index;
}

void require_sound(const ac::GroebnerData& gb) {
  const std::vector<std::string> problems = gb.check_invariants();
  if (!problems.empty()) throw ac::InvariantViolation("Groebner data: " + join(problems, "; "));
}

Report cmd_gb(const InputArgs& input) {
  const Loaded in = load(input);
  Report report("gb", &in);
  const ac::GroebnerData gb(in.set);
  require_sound(gb);
  json basis = json::array();
  json sm = json::array();
  std::vector<std::string> sm_text;
  for (const ac::Polynomial& g : gb.basis()) basis.push_back(g.to_string());
  for (const ac::Monomial& m : gb.standard_monomials()) {
    sm.push_back(m.to_string());
    sm_text.push_back(m.to_string());
  }
  report.doc["results"] = {{"order", "deglex"},
                           {"basis", basis},
                           {"standard_monomials", sm},
                           {"max_standard_degree", str(gb.max_standard_degree())}};
  report.lines.push_back(headline(in));
  report.lines.push_back("standard monomials (" + str(static_cast<long long>(sm_text.size())) +
                         "): " + join(sm_text, ", "));
  report.lines.push_back("basis (" + str(static_cast<long long>(gb.basis().size())) + "):");
  for (const ac::Polynomial& g : gb.basis()) report.lines.push_back("  " + g.to_string());
  return report;
}

struct BoundArgs {
  std::string method = "all";
  std::optional<std::size_t> point;
};

Report cmd_bound(const InputArgs& input, const BoundArgs& args) {
  const Loaded in = load(input);
  Report report("bound", &in);
  const long n = static_cast<long>(in.set.dim());
  const mpz_class count(static_cast<unsigned long>(in.set.size()));
  const bool all = args.method == "all";
  if (args.method == "cube" && !in.set.is_zero_one()) throw ac::Error("the cube method needs a 0-1 point set");
  std::optional<ac::Point> point;
  if (args.point) point = in.set[checked_index(in.set, *args.point)];

  std::vector<ac::BoundReport> bounds;
  if (all) {
    const ac::CorollaryBounds cor = ac::cor_bounds(n, count);
    bounds.push_back(cor.e_root);
    bounds.push_back(cor.four_n);
  }
  if (all || args.method == "count") bounds.push_back(ac::counting_lower_bound(n, count));
  if ((all && in.set.is_zero_one()) || args.method == "cube") {
    bounds.push_back(ac::cube_counting_lower_bound(n, count));
  }
  if (all || args.method == "cert") {
    const ac::GroebnerData gb(in.set);
    require_sound(gb);
    bounds.push_back(ac::certificate_lower_bound(gb, point));
  }

  json list = json::array();
  report.lines.push_back(headline(in));
  for (const ac::BoundReport& b : bounds) {
    list.push_back(bound_json(b));
    std::string line = ac::to_string(b.method) + ": AC >= " + str(b.value);
    if (b.certificate_point) line += " at " + b.certificate_point->to_string();
    report.lines.push_back(line);
  }
  report.doc["results"]["bounds"] = list;

  if (all) {
    // cor_e <= count <= cube <= cert; cor_4n is a yes/no statement and
    // stays outside the chain.
    std::vector<long> chain;
    std::vector<std::string> names;
    for (const ac::BoundReport& b : bounds) {
      if (b.method == ac::BoundMethod::cor_4n) continue;
      chain.push_back(b.value);
      names.push_back(ac::to_string(b.method));
    }
    bool holds = true;
    for (std::size_t i = 1; i < chain.size(); ++i) {
      // With --point the certificate is per point and may sit below the
      // global counting bounds.
      if (point && i + 1 == chain.size()) break;
      holds = holds && chain[i - 1] <= chain[i];
    }
    report.doc["results"]["chain"] = {{"order", join(names, " <= ")}, {"holds", holds}};
    report.lines.push_back("chain " + join(names, " <= ") + (holds ? ": holds" : ": VIOLATED"));
    if (!holds) throw ac::InvariantViolation("bound ordering violated");
  }
  return report;
}

struct SolveArgs {
  std::optional<std::size_t> point;
  bool all = false;
  std::uint64_t budget = 10'000'000;
  bool exhaustive = false;
  bool no_symmetry = false;
};

constexpr const char* kBudgetWarning = "search budget exhausted; reported sizes are upper bounds";

void cross_check(const ac::PointSet& set, const ac::CoverSolution& s, const ac::SolveOptions& opts, json& entry,
                 std::vector<std::string>& lines) {
  const ac::CoverSolution ex = ac::exhaustive_hyperplane_cover(set, s.excluded, opts);
  entry["exhaustive"] = solution_json(ex);
  lines.push_back("  exhaustive hyperplane search: " + str(static_cast<long long>(ex.size)));
  if (s.optimal && ex.optimal && ex.size != s.size) {
    throw ac::InvariantViolation("exhaustive hyperplane search found " + std::to_string(ex.size) +
                                 " but the trace search found " + std::to_string(s.size) + " at " +
                                 s.excluded.to_string());
  }
}

Report cmd_solve(const InputArgs& input, const SolveArgs& args) {
  if (args.all == args.point.has_value()) throw ac::Error("give exactly one of --point or --all");
  const Loaded in = load(input);
  Report report("solve", &in);
  ac::SolveOptions opts;
  opts.budget = args.budget;
  report.lines.push_back(headline(in));

  if (args.point) {
    const std::size_t index = checked_index(in.set, *args.point);
    const ac::GroebnerData gb(in.set);
    require_sound(gb);
    const ac::CoverSolution s = ac::min_almost_cover(gb, index, opts);
    json entry = solution_json(s);
    report.lines.push_back("AC(V, " + s.excluded.to_string() + ") " + (s.optimal ? "= " : "<= ") +
                           str(static_cast<long long>(s.size)) + " (certificate bound " + str(s.lower_bound_used) +
                           ", " + std::to_string(s.nodes) + " nodes)");
    for (const ac::Hyperplane& h : s.hyperplanes) report.lines.push_back("  " + h.to_string());
    if (args.exhaustive) cross_check(in.set, s, opts, entry, report.lines);
    report.doc["results"] = {{"solution", entry}};
    report.doc["optimal"] = s.optimal;
    if (!s.optimal) report.warn(kBudgetWarning);
    return report;
  }

  ac::AcOptions options;
  options.solve = opts;
  options.threads = thread_count();
  if (in.spec && !args.no_symmetry) {
    try {
      options.symmetry = ac::symmetry_generators(*in.spec);
    } catch (const ac::Error&) {
      // No declared symmetry: every point is solved.
    }
  }
  const ac::AcNumbers numbers = ac::ac_numbers(in.set, options);
  json per_point = json::array();
  report.lines.push_back(std::string("AC ") + (numbers.optimal ? "= " : "<= ") + str(numbers.max_value) + ", ac " +
                         (numbers.optimal ? "= " : "<= ") + str(numbers.min_value));
  for (const ac::CoverSolution& s : numbers.per_point) {
    json entry = solution_json(s);
    std::vector<std::string> hs;
    for (const ac::Hyperplane& h : s.hyperplanes) hs.push_back(h.to_string());
    report.lines.push_back("  #" + str(static_cast<long long>(s.excluded_index)) + " " + s.excluded.to_string() +
                           ": " + str(static_cast<long long>(s.size)) + (hs.empty() ? "" : "  [" + join(hs, "; ") + "]"));
    if (args.exhaustive) cross_check(in.set, s, opts, entry, report.lines);
    per_point.push_back(entry);
  }
  json results{{"AC", str(numbers.max_value)}, {"ac", str(numbers.min_value)}};
  if (numbers.orbits) {
    results["orbits"] = str(static_cast<long long>(numbers.orbits->orbits.size()));
    results["transitive"] = numbers.orbits->is_transitive;
    if (numbers.orbits->is_transitive && numbers.optimal && numbers.max_value != numbers.min_value) {
      throw ac::InvariantViolation("transitive symmetry but AC != ac");
    }
  }
  results["per_point"] = per_point;
  report.doc["results"] = results;
  report.doc["optimal"] = numbers.optimal;
  if (!numbers.optimal) report.warn(kBudgetWarning);
  return report;
}

struct VerifyArgs {
  std::string suite;
  long max_n = 0;
  std::uint64_t budget = 10'000'000;
};

Report cmd_verify(const VerifyArgs& args) {
  ac::VerifyOptions options;
  options.max_n = args.max_n;
  options.threads = thread_count();
  options.budget = args.budget;
  const ac::VerifyReport result = ac::run_verify_suite(args.suite, options);
  Report report("verify", nullptr);
  json checks = json::array();
  for (const ac::VerifyCheck& c : result.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    report.lines.push_back(std::string(c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail);
  }
  report.doc["results"] = {
      {"suite", result.suite}, {"max_n", str(result.max_n)}, {"checks", checks}, {"passed", result.passed()}};
  report.lines.push_back(result.suite + ": " + (result.passed() ? "all checks passed" : "FAILED"));
  if (!result.passed()) report.exit_code = kExitFailedCheck;
  return report;
}

Report cmd_points(const InputArgs& input) {
  const Loaded in = load(input);
  Report report("points", &in);
  json points = json::array();
  for (const ac::Point& p : in.set.points()) points.push_back(point_json(p));
  report.doc["results"] = {{"points", points}};
  const std::string text = ac::write_point_set(in.set);
  std::size_t start = 0;
  for (std::size_t end; (end = text.find('\n', start)) != std::string::npos; start = end + 1) {
    report.lines.push_back(text.substr(start, end - start));
  }
  return report;
}

void add_input(CLI::App* sub, InputArgs& input) {
  sub->add_option("input", input.file, "Point-set file");
  sub->add_option("--family", input.family,
                  "Generated family: cube:n, vnk:n:k, vnkt:n:k:T, jnq:n:q[:images], inq:n:q, perm:n, ag:n:q, "
                  "optionally followed by @rational or @gf:p");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases of vanishing ideals, almost-cover bounds and exact almost covers"};
  app.require_subcommand(1);
  bool as_json = false;
  bool no_timings = false;
  app.add_flag("--json", as_json, "Print the JSON report instead of text");
  app.add_flag("--no-timings", no_timings, "Leave timings out of the report");

  InputArgs gb_in, bound_in, solve_in, points_in;
  BoundArgs bound_args;
  SolveArgs solve_args;
  VerifyArgs verify_args;

  CLI::App* gb = app.add_subcommand("gb", "Reduced deglex Groebner basis and standard monomials of I(V)");
  add_input(gb, gb_in);

  CLI::App* bound = app.add_subcommand("bound", "Lower bounds on the almost-cover number");
  add_input(bound, bound_in);
  bound->add_option("--method", bound_args.method, "count, cube, cert or all")
      ->check(CLI::IsMember({"count", "cube", "cert", "all"}));
  bound->add_option("--point", bound_args.point, "Point index for the certificate bound");

  CLI::App* solve = app.add_subcommand(
      "solve",
      "Exact minimum almost covers. Hyperplane traces are enumerated once per set by walking its lattice of closed subsets, "
      "roughly O(|V|^n) work, so exact search is meant for desk-scale inputs: up to about 30 points in "
      "dimension 4 or less, never more than 64 points.");
  add_input(solve, solve_in);
  solve->add_option("--point", solve_args.point, "Index of the excluded point");
  solve->add_flag("--all", solve_args.all, "Solve every point and report AC and ac");
  solve->add_option("--budget", solve_args.budget, "Branch-and-bound node limit per point")
      ->capture_default_str();
  solve->add_flag("--exhaustive", solve_args.exhaustive,
                  "Cross-check against every hyperplane of GF(p)^n (prime fields only)");
  solve->add_flag("--no-symmetry", solve_args.no_symmetry, "Do not reduce by the family's symmetry group");

  CLI::App* verify = app.add_subcommand("verify", "Run a theorem verification suite");
  verify->add_option("suite", verify_args.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(ac::verify_suite_names()));
  verify->add_option("--max-n", verify_args.max_n, "Largest dimension in the suite's grid");
  verify->add_option("--budget", verify_args.budget, "Branch-and-bound node limit per point")
      ->capture_default_str();

  CLI::App* points = app.add_subcommand("points", "Print the point set in file format");
  add_input(points, points_in);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    std::optional<Report> report;
    if (*gb) report = cmd_gb(gb_in);
    if (*bound) report = cmd_bound(bound_in, bound_args);
    if (*solve) report = cmd_solve(solve_in, solve_args);
    if (*verify) report = cmd_verify(verify_args);
    if (*points) report = cmd_points(points_in);
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    report->doc["timings"] = json::object();
    if (!no_timings) report->doc["timings"]["total_ms"] = std::to_string(static_cast<long long>(elapsed.count()));
    if (as_json) {
      std::cout << report->doc.dump(2) << "\n";
    } else {
      for (const std::string& line : report->lines) std::cout << line << "\n";
    }
    return report->exit_code;
  } catch (const ac::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ac::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}
