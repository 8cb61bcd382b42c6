#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "almostcover/field.hpp"
#include "almostcover/linalg.hpp"
#include "almostcover/polynomial.hpp"
#include "almostcover/symmetry.hpp"

namespace almostcover {

enum class FamilyKind {
  cube,  // {0,1}^n
  vnk,   // characteristic vectors of subsets of size <= k
  vnkt,  // vnk plus the characteristic vector of T, |T| > k
  jnq,   // non-decreasing sequences over [q] embedded into the field
  inq,   // non-decreasing sequences over [q] as integers
  perm,  // permutations of (1, ..., n)
  ag,    // all of GF(q)^n
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::cube;
  long n = 1;
  long k = 0;
  long q = 2;
  std::vector<std::size_t> subset;  // T for vnkt, one-based
  std::vector<long> embedding;      // images of 1..q for jnq; empty = identity
  Field field;

  // Grammar: kind:params[@field], e.g. "cube:3", "vnk:4:2", "vnkt:3:1:1,2",
  // "jnq:2:3", "jnq:2:3:0,1,5@gf:7", "inq:2:3", "perm:3", "ag:2:3".
  // Throws Error on unknown kinds or invalid parameters.
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;

  // Throws Error when the parameters are out of range.
  void validate() const;
};

// Deterministic order: vnk and vnkt list subsets by size and then
// lexicographically (vnkt appends v_T); the other families list points in
// lexicographic coordinate order.
PointSet generate(const FamilySpec& spec);

// The k hyperplanes sum(x) = i, 1 <= i <= k, an almost cover of V(n,k) at the
// origin.
std::vector<Hyperplane> sharp_cover_vnk(long n, long k, Field field = Field::rational());

// prod_{j=0}^{k} (sum(x) - j) over the rationals. Checks on return that it
// vanishes on V(n,k) and nowhere else on the cube.
Polynomial szw_sharp_polynomial(long n, long k);

// Affine maps generating a group that acts transitively on the family:
// coordinate swaps and flips for cube, coordinate swaps for perm,
// translations and swaps for ag. Throws Error("no declared symmetry") for
// the other families.
std::vector<AffineMap> symmetry_generators(const FamilySpec& spec);

}  // namespace almostcover
