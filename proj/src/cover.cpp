#include "almostcover/cover.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "almostcover/error.hpp"

namespace almostcover {
namespace {

constexpr PointMask bit(std::size_t i) { return PointMask{1} << i; }

void require_cover_size(const PointSet& set) {
  if (set.size() > kMaxCoverPoints) {
    throw Error("cover search supports at most " + std::to_string(kMaxCoverPoints) + " points, got " +
                std::to_string(set.size()));
  }
}

PointMask all_points(std::size_t count) { return count == 64 ? ~PointMask{0} : bit(count) - 1; }

// Lexicographic order of the increasing index lists.
bool index_list_less(PointMask a, PointMask b) {
  while (a != 0 && b != 0) {
    int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

std::vector<Point> points_of(const PointSet& set, PointMask mask) {
  std::vector<Point> pts;
  for (std::size_t i : mask_indices(mask)) pts.push_back(set[i]);
  return pts;
}

PointMask trace_of(const PointSet& set, const Hyperplane& h) {
  PointMask m = 0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (eval_form(h, set[i]).is_zero()) m |= bit(i);
  }
  return m;
}

class CoverSearch {
 public:
  CoverSearch(std::span<const PointMask> sets, PointMask universe, std::size_t floor, std::uint64_t budget)
      : universe_(universe), floor_(floor), budget_(budget) {
    for (std::size_t s = 0; s < sets.size(); ++s) {
      PointMask useful = sets[s] & universe;
      if (useful == 0) continue;
      sets_.push_back(useful);
      original_.push_back(s);
    }
    containing_.assign(64, {});
    neighbours_.assign(64, 0);
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      for (std::size_t e : mask_indices(sets_[s])) {
        containing_[e].push_back(s);
        neighbours_[e] |= sets_[s];
      }
    }
    for (std::size_t e : mask_indices(universe_)) {
      if (containing_[e].empty()) throw Error("candidate sets do not cover element " + std::to_string(e));
    }
  }

  SetCoverResult run() {
    best_ = greedy();
    if (best_.size() > floor_) {
      std::vector<std::size_t> stack;
      search(universe_, stack);
    }
    SetCoverResult out;
    for (std::size_t s : best_) out.chosen.push_back(original_[s]);
    std::sort(out.chosen.begin(), out.chosen.end());
    out.optimal = !aborted_;
    out.nodes = nodes_;
    return out;
  }

 private:
  std::vector<std::size_t> greedy() const {
    std::vector<std::size_t> chosen;
    PointMask uncovered = universe_;
    while (uncovered != 0) {
      std::size_t pick = 0;
      int gain = -1;
      for (std::size_t s = 0; s < sets_.size(); ++s) {
        int g = std::popcount(sets_[s] & uncovered);
        if (g > gain) {
          gain = g;
          pick = s;
        }
      }
      chosen.push_back(pick);
      uncovered &= ~sets_[pick];
    }
    return chosen;
  }

  std::size_t lower_bound(PointMask uncovered) const {
    if (uncovered == 0) return 0;
    int widest = 0;
    for (PointMask s : sets_) widest = std::max(widest, std::popcount(s & uncovered));
    const auto count = static_cast<std::size_t>(std::popcount(uncovered));
    std::size_t ratio = (count + static_cast<std::size_t>(widest) - 1) / static_cast<std::size_t>(widest);
    // Elements no two of which share a set each need their own set.
    std::size_t packing = 0;
    PointMask blocked = 0;
    for (std::size_t e : mask_indices(uncovered)) {
      if (blocked & bit(e)) continue;
      ++packing;
      blocked |= neighbours_[e];
    }
    return std::max(ratio, packing);
  }

  void search(PointMask uncovered, std::vector<std::size_t>& stack) {
    if (aborted_ || best_.size() <= floor_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (uncovered == 0) {
      if (stack.size() < best_.size()) best_ = stack;
      return;
    }
    if (stack.size() + lower_bound(uncovered) >= best_.size()) return;

    std::size_t branch = 0;
    std::size_t fewest = SIZE_MAX;
    for (std::size_t e : mask_indices(uncovered)) {
      if (containing_[e].size() < fewest) {
        fewest = containing_[e].size();
        branch = e;
      }
    }
    std::vector<std::size_t> options = containing_[branch];
    std::stable_sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) {
      return std::popcount(sets_[a] & uncovered) > std::popcount(sets_[b] & uncovered);
    });
    std::vector<PointMask> tried;
    for (std::size_t s : options) {
      PointMask gain = sets_[s] & uncovered;
      // A set whose useful part is inside an already explored one cannot do better.
      if (std::any_of(tried.begin(), tried.end(), [&](PointMask t) { return (gain & ~t) == 0; })) continue;
      tried.push_back(gain);
      stack.push_back(s);
      search(uncovered & ~sets_[s], stack);
      stack.pop_back();
      if (aborted_ || best_.size() <= floor_) return;
    }
  }

  PointMask universe_;
  std::size_t floor_;
  std::uint64_t budget_;
  std::vector<PointMask> sets_;
  std::vector<std::size_t> original_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<PointMask> neighbours_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

CoverSolution realize(const PointSet& set, std::size_t excluded, std::span<const PointMask> traces) {
  CoverSolution out;
  out.excluded = set[excluded];
  out.excluded_index = excluded;
  out.size = traces.size();
  for (PointMask t : traces) {
    std::vector<Point> pts = points_of(set, t);
    out.hyperplanes.push_back(hyperplane_containing_avoiding(affine_span(pts), out.excluded));
    out.traces.push_back(trace_of(set, out.hyperplanes.back()));
  }
  return out;
}

void check_solution(const PointSet& set, const CoverSolution& s) {
  if (!verify_cover(set, s.excluded, s.hyperplanes)) {
    throw InvariantViolation("computed cover at " + s.excluded.to_string() + " is not an almost cover");
  }
  if (s.optimal && static_cast<long>(s.size) < s.lower_bound_used) {
    throw InvariantViolation("optimal cover of size " + std::to_string(s.size) + " at " + s.excluded.to_string() +
                             " is below the certificate bound " + std::to_string(s.lower_bound_used));
  }
}

}  // namespace

std::vector<std::size_t> mask_indices(PointMask mask) {
  std::vector<std::size_t> out;
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

PointMask affine_closure(const PointSet& set, PointMask generators) {
  require_cover_size(set);
  if (generators == 0) return 0;
  std::vector<Point> pts = points_of(set, generators);
  AffineSubspace span = affine_span(pts);
  PointMask closure = generators;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!(closure & bit(i)) && span.contains(set[i])) closure |= bit(i);
  }
  return closure;
}

TraceFamily trace_family(const PointSet& set, const Point& v) { return trace_family(set, set.index_of(v)); }

TraceFamily trace_family(const PointSet& set, std::size_t excluded) {
  if (excluded >= set.size()) throw Error("excluded point index out of range");
  return trace_family(set, excluded, coatoms(set));
}

TraceFamily trace_family(const PointSet& set, std::size_t excluded, std::span<const PointMask> hyperplane_traces) {
  require_cover_size(set);
  if (excluded >= set.size()) throw Error("excluded point index out of range");
  TraceFamily family{excluded, {}};
  for (PointMask t : hyperplane_traces) {
    if (!(t & bit(excluded))) family.traces.push_back(t);
  }
  std::sort(family.traces.begin(), family.traces.end(), index_list_less);
  return family;
}

// Walks the lattice of closed sets upward from the single points. For a
// closed set F the points outside F fall into classes by the direction of
// their residue modulo span(F); F plus one class is exactly a closed set
// covering F. F is a coatom when a single class remains.
std::vector<PointMask> coatoms(const PointSet& set) {
  require_cover_size(set);
  if (set.size() < 2) return {};
  const Field field = set.field();
  const std::size_t n = set.dim();

  struct Closed {
    PointMask mask;
    std::vector<std::size_t> generators;  // affinely independent
  };
  std::vector<Closed> pending;
  std::unordered_set<PointMask> seen;
  for (std::size_t j = 0; j < set.size(); ++j) {
    pending.push_back(Closed{bit(j), {j}});
    seen.insert(bit(j));
  }
  std::vector<PointMask> out;
  while (!pending.empty()) {
    Closed c = std::move(pending.back());
    pending.pop_back();
    const Point& base = set[c.generators.front()];
    std::vector<Vector> dirs;
    std::vector<std::size_t> pivots;
    if (c.generators.size() > 1) {
      std::vector<Vector> rows;
      for (std::size_t g = 1; g < c.generators.size(); ++g) rows.push_back(subtract(set[c.generators[g]].coords(), base.coords()));
      RowEchelon e = rref(Matrix(field, std::move(rows)));
      dirs.assign(e.reduced.data().begin(), e.reduced.data().begin() + static_cast<std::ptrdiff_t>(e.rank));
      pivots = std::move(e.pivots);
    }

    std::map<Vector, PointMask> classes;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (c.mask & bit(i)) continue;
      Vector w = subtract(set[i].coords(), base.coords());
      for (std::size_t r = 0; r < dirs.size(); ++r) {
        const Scalar coef = w[pivots[r]];
        if (coef.is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k) w[k] -= coef * dirs[r][k];
      }
      auto lead = std::find_if(w.begin(), w.end(), [](const Scalar& x) { return !x.is_zero(); });
      if (lead == w.end()) throw InvariantViolation("closed set misses a point of its own span");
      const Scalar inv = lead->inverse();
      for (Scalar& x : w) x *= inv;
      classes[std::move(w)] |= bit(i);
    }
    if (classes.size() == 1) {
      out.push_back(c.mask);
      continue;
    }
    for (const auto& [direction, extra] : classes) {
      const PointMask grown = c.mask | extra;
      if (!seen.insert(grown).second) continue;
      std::vector<std::size_t> gens = c.generators;
      gens.push_back(static_cast<std::size_t>(std::countr_zero(extra)));
      pending.push_back(Closed{grown, std::move(gens)});
    }
  }
  std::sort(out.begin(), out.end(), index_list_less);
  return out;
}

SetCoverResult min_set_cover(std::span<const PointMask> sets, PointMask universe, std::size_t floor,
                             std::uint64_t budget) {
  if (universe == 0) return SetCoverResult{{}, true, 0};
  return CoverSearch(sets, universe, floor, budget).run();
}

CoverSolution min_almost_cover(const PointSet& set, const Point& v, const SolveOptions& options) {
  require_cover_size(set);
  GroebnerData gb(set);
  return min_almost_cover(gb, set.index_of(v), options);
}

CoverSolution min_almost_cover(const GroebnerData& gb, std::size_t excluded, const SolveOptions& options) {
  require_cover_size(gb.points());
  return min_almost_cover(gb, excluded, options, coatoms(gb.points()));
}

CoverSolution min_almost_cover(const GroebnerData& gb, std::size_t excluded, const SolveOptions& options,
                               std::span<const PointMask> hyperplane_traces) {
  const PointSet& set = gb.points();
  if (excluded >= set.size()) throw Error("excluded point index out of range");
  const long floor = gb.separating_degree(excluded);
  TraceFamily family = trace_family(set, excluded, hyperplane_traces);
  const PointMask universe = all_points(set.size()) & ~bit(excluded);
  SetCoverResult result = min_set_cover(family.traces, universe, static_cast<std::size_t>(floor), options.budget);

  std::vector<PointMask> chosen;
  for (std::size_t i : result.chosen) chosen.push_back(family.traces[i]);
  CoverSolution out = realize(set, excluded, chosen);
  out.lower_bound_used = floor;
  out.optimal = result.optimal;
  out.nodes = result.nodes;
  check_solution(set, out);
  return out;
}

CoverSolution exhaustive_hyperplane_cover(const PointSet& set, const Point& v, const SolveOptions& options,
                                          std::size_t max_hyperplanes) {
  require_cover_size(set);
  const Field field = set.field();
  if (field.is_rational()) throw Error("exhaustive hyperplane mode needs a prime field");
  const std::size_t excluded = set.index_of(v);
  const std::uint64_t p = field.characteristic();
  const std::size_t n = set.dim();

  // (p^n - 1) / (p - 1) normals with leading entry 1, times p offsets.
  mpz_class total = 0;
  for (std::size_t lead = 0; lead < n; ++lead) {
    mpz_class tail;
    mpz_ui_pow_ui(tail.get_mpz_t(), p, n - 1 - lead);
    total += tail;
  }
  total *= p;
  if (total > max_hyperplanes) throw Error("too many hyperplanes for exhaustive mode: " + total.get_str());

  std::vector<Hyperplane> candidates;
  std::vector<PointMask> traces;
  std::unordered_set<PointMask> seen;
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t free = n - 1 - lead;
    std::vector<std::uint64_t> digits(free, 0);
    while (true) {
      Vector normal(n, field.zero());
      normal[lead] = field.one();
      for (std::size_t i = 0; i < free; ++i) normal[lead + 1 + i] = field.from_integer(mpz_class(digits[i]));
      for (std::uint64_t off = 0; off < p; ++off) {
        Hyperplane h(normal, field.from_integer(mpz_class(off)));
        PointMask t = trace_of(set, h);
        if (t == 0 || (t & bit(excluded)) || !seen.insert(t).second) continue;
        candidates.push_back(h);
        traces.push_back(t);
      }
      std::size_t i = 0;
      while (i < free && ++digits[i] == p) digits[i++] = 0;
      if (i == free) break;
    }
  }

  const PointMask universe = all_points(set.size()) & ~bit(excluded);
  GroebnerData gb(set);
  CoverSolution out;
  out.excluded = v;
  out.excluded_index = excluded;
  out.lower_bound_used = gb.separating_degree(excluded);

  std::uint64_t nodes = 0;
  std::vector<std::size_t> combo;
  std::optional<std::vector<std::size_t>> found;
  // Plain combinations of each size in increasing order.
  for (std::size_t size = 0; size <= traces.size() && !found; ++size) {
    combo.resize(size);
    for (std::size_t i = 0; i < size; ++i) combo[i] = i;
    while (true) {
      if (++nodes > options.budget) break;
      PointMask covered = 0;
      for (std::size_t i : combo) covered |= traces[i];
      if ((covered & universe) == universe) {
        found = combo;
        break;
      }
      std::size_t i = size;
      while (i > 0 && combo[i - 1] == traces.size() - size + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
    if (nodes > options.budget) break;
  }
  out.nodes = nodes;
  if (!found) {
    // Budget exhausted: fall back to every candidate, which always covers.
    for (std::size_t i = 0; i < traces.size(); ++i) {
      out.hyperplanes.push_back(candidates[i]);
      out.traces.push_back(traces[i]);
    }
    out.optimal = false;
  } else {
    for (std::size_t i : *found) {
      out.hyperplanes.push_back(candidates[i]);
      out.traces.push_back(traces[i]);
    }
    out.optimal = true;
  }
  out.size = out.hyperplanes.size();
  check_solution(set, out);
  return out;
}

bool verify_cover(const PointSet& set, const Point& v, std::span<const Hyperplane> hyperplanes) {
  for (const Hyperplane& h : hyperplanes) {
    if (h.dim() != set.dim() || v.dim() != set.dim()) return false;
    if (h.offset().field() != set.field()) return false;
    if (eval_form(h, v).is_zero()) return false;
  }
  for (const Point& u : set.points()) {
    if (u == v) continue;
    bool covered = std::any_of(hyperplanes.begin(), hyperplanes.end(),
                               [&](const Hyperplane& h) { return eval_form(h, u).is_zero(); });
    if (!covered) return false;
  }
  return true;
}

AcNumbers ac_numbers(const PointSet& set, const AcOptions& options) {
  require_cover_size(set);
  GroebnerData gb(set);
  const std::vector<PointMask> hyperplane_traces = coatoms(set);
  AcNumbers out;
  const std::size_t count = set.size();

  std::vector<std::size_t> work;
  if (!options.symmetry.empty()) {
    out.orbits = orbit_reduce(set, options.symmetry);
    for (const auto& orbit : out.orbits->orbits) work.push_back(orbit.front());
  } else {
    for (std::size_t i = 0; i < count; ++i) work.push_back(i);
  }

  std::vector<std::optional<CoverSolution>> solved(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      std::size_t w = next.fetch_add(1);
      if (w >= work.size()) return;
      try {
        solved[work[w]] = min_almost_cover(gb, work[w], options.solve, hyperplane_traces);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, work.size());
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  if (out.orbits) {
    for (std::size_t i = 0; i < count; ++i) {
      if (solved[i]) continue;
      const std::size_t rep = out.orbits->orbits[out.orbits->orbit_of[i]].front();
      const CoverSolution& source = *solved[rep];
      const AffineMap& g = out.orbits->transport[i];
      CoverSolution moved;
      moved.excluded = set[i];
      moved.excluded_index = i;
      moved.size = source.size;
      for (const Hyperplane& h : source.hyperplanes) {
        moved.hyperplanes.push_back(g.apply(h));
        moved.traces.push_back(trace_of(set, moved.hyperplanes.back()));
      }
      moved.lower_bound_used = gb.separating_degree(i);
      moved.optimal = source.optimal;
      moved.transported_from = rep;
      check_solution(set, moved);
      solved[i] = std::move(moved);
    }
  }

  for (std::size_t i = 0; i < count; ++i) {
    const CoverSolution& s = *solved[i];
    const long size = static_cast<long>(s.size);
    if (i == 0 || size > out.max_value) out.max_value = size;
    if (i == 0 || size < out.min_value) out.min_value = size;
    out.optimal = out.optimal && s.optimal;
    out.per_point.push_back(s);
  }
  return out;
}

}  // namespace almostcover
