#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "almostcover/linalg.hpp"
#include "almostcover/symmetry.hpp"
#include "almostcover/vanishing.hpp"

namespace almostcover {

// Subsets of a point set as bitmasks over point indices. Cover search is
// limited to sets of at most 64 points.
using PointMask = std::uint64_t;
inline constexpr std::size_t kMaxCoverPoints = 64;

std::vector<std::size_t> mask_indices(PointMask mask);

// Maximal affinely closed subsets of V \ {v}. A hyperplane missing v meets V
// in a closed set avoiding v; conversely the affine span of a closed set C
// avoiding v misses v (otherwise v would lie in span(C) ∩ V = C), so some
// hyperplane contains C and misses v. Minimum covers by hyperplanes and by
// maximal closed sets therefore have the same size.
struct TraceFamily {
  std::size_t excluded;
  // Sorted lexicographically by increasing point-index lists.
  std::vector<PointMask> traces;
};

// Throws Error if v is not in the set or the set is too large.
TraceFamily trace_family(const PointSet& set, const Point& v);
TraceFamily trace_family(const PointSet& set, std::size_t excluded);
// Filters precomputed coatoms(set) instead of recomputing them.
TraceFamily trace_family(const PointSet& set, std::size_t excluded, std::span<const PointMask> hyperplane_traces);

// The maximal proper closed subsets of V, i.e. the traces H ∩ V of the
// hyperplanes of span(V) spanned by points of V. The maximal closed sets
// avoiding v are exactly the coatoms not containing v, so one enumeration
// serves every excluded point.
std::vector<PointMask> coatoms(const PointSet& set);

// span(S) ∩ V as a mask.
PointMask affine_closure(const PointSet& set, PointMask generators);

struct SetCoverResult {
  std::vector<std::size_t> chosen;  // indices into the candidate sets
  bool optimal = false;
  std::uint64_t nodes = 0;
};

// Exact minimum cover of universe by candidate sets: greedy incumbent, then
// depth-first branch and bound that branches on the uncovered element in the
// fewest candidates and prunes with max(ceil(|U| / largest set), pairwise
// disjoint element packing). Search stops as soon as the incumbent meets
// floor. Throws Error when the candidates cannot cover the universe.
SetCoverResult min_set_cover(std::span<const PointMask> sets, PointMask universe, std::size_t floor = 0,
                             std::uint64_t budget = 10'000'000);

struct CoverSolution {
  Point excluded;
  std::size_t excluded_index = 0;
  std::size_t size = 0;
  std::vector<Hyperplane> hyperplanes;
  std::vector<PointMask> traces;
  long lower_bound_used = 0;
  bool optimal = false;
  std::uint64_t nodes = 0;
  // Set when the solution was transported from an orbit representative.
  std::optional<std::size_t> transported_from;
};

struct SolveOptions {
  std::uint64_t budget = 10'000'000;
};

CoverSolution min_almost_cover(const PointSet& set, const Point& v, const SolveOptions& options = {});
// Reuses a Groebner basis for the certificate floor.
CoverSolution min_almost_cover(const GroebnerData& gb, std::size_t excluded, const SolveOptions& options = {});
CoverSolution min_almost_cover(const GroebnerData& gb, std::size_t excluded, const SolveOptions& options,
                               std::span<const PointMask> hyperplane_traces);

// Cross-check for prime fields: enumerates every hyperplane of GF(p)^n,
// keeps the traces that miss v and finds the smallest cover by trying all
// combinations of increasing size. Throws Error over the rationals or when
// there are more than max_hyperplanes hyperplanes.
CoverSolution exhaustive_hyperplane_cover(const PointSet& set, const Point& v, const SolveOptions& options = {},
                                          std::size_t max_hyperplanes = 100'000);

// True iff every point other than v lies on some hyperplane and v on none.
bool verify_cover(const PointSet& set, const Point& v, std::span<const Hyperplane> hyperplanes);

struct AcOptions {
  SolveOptions solve;
  // When nonempty, one representative per orbit is solved and its cover is
  // transported to the rest of the orbit.
  std::vector<AffineMap> symmetry;
  unsigned threads = 1;
};

struct AcNumbers {
  long max_value = 0;  // AC(V)
  long min_value = 0;  // ac(V)
  std::vector<CoverSolution> per_point;
  bool optimal = true;
  std::optional<OrbitPartition> orbits;
};

AcNumbers ac_numbers(const PointSet& set, const AcOptions& options = {});

}  // namespace almostcover
