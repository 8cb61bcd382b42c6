#include "almostcover/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <set>

#include "almostcover/error.hpp"

namespace almostcover {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

long parse_long(std::string_view text, std::string_view spec) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error("bad integer '" + std::string(text) + "' in family spec '" + std::string(spec) + "'");
  }
  return value;
}

std::string join(const auto& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

Field default_field(const FamilySpec& spec) {
  if (spec.kind == FamilyKind::ag) return Field::prime(static_cast<std::uint64_t>(spec.q));
  return Field::rational();
}

Point zero_one_point(const Field& field, long n, const std::vector<std::size_t>& ones) {
  Vector coords(static_cast<std::size_t>(n), field.zero());
  for (std::size_t i : ones) coords[i] = field.one();
  return Point(std::move(coords));
}

void subsets_of_size(long n, long size, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> combo(static_cast<std::size_t>(size));
  std::iota(combo.begin(), combo.end(), 0);
  const auto un = static_cast<std::size_t>(n);
  const auto us = static_cast<std::size_t>(size);
  while (true) {
    out.push_back(combo);
    std::size_t i = us;
    while (i > 0 && combo[i - 1] == un - us + i - 1) --i;
    if (i == 0) return;
    ++combo[i - 1];
    for (std::size_t j = i; j < us; ++j) combo[j] = combo[j - 1] + 1;
  }
}

// Lexicographic tuples over {0, ..., base-1}.
std::vector<std::vector<long>> all_tuples(long n, long base) {
  std::vector<std::vector<long>> out;
  std::vector<long> digits(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(digits);
    long i = n - 1;
    while (i >= 0 && ++digits[static_cast<std::size_t>(i)] == base) digits[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return out;
  }
}

void non_decreasing(long n, long q, std::vector<long>& prefix, std::vector<std::vector<long>>& out) {
  if (static_cast<long>(prefix.size()) == n) {
    out.push_back(prefix);
    return;
  }
  long start = prefix.empty() ? 1 : prefix.back();
  for (long value = start; value <= q; ++value) {
    prefix.push_back(value);
    non_decreasing(n, q, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Scalar> embedding_images(const FamilySpec& spec) {
  std::vector<Scalar> images;
  for (long i = 1; i <= spec.q; ++i) {
    long value = spec.embedding.empty() ? i : spec.embedding[static_cast<std::size_t>(i - 1)];
    images.push_back(spec.field.from_int(value));
  }
  return images;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  FamilySpec spec;
  std::string_view body = text;
  std::optional<Field> field;
  if (auto at = text.find('@'); at != std::string_view::npos) {
    body = text.substr(0, at);
    field = Field::parse_name(text.substr(at + 1));
  }
  std::vector<std::string_view> parts = split(body, ':');
  const std::string_view kind = parts[0];
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo || parts.size() > hi) {
      throw Error("wrong number of parameters in family spec '" + std::string(text) + "'");
    }
  };
  auto num = [&](std::size_t i) { return parse_long(parts[i], text); };
  if (kind == "cube") {
    need(2, 2);
    spec.kind = FamilyKind::cube;
    spec.n = num(1);
  } else if (kind == "vnk") {
    need(3, 3);
    spec.kind = FamilyKind::vnk;
    spec.n = num(1);
    spec.k = num(2);
  } else if (kind == "vnkt") {
    need(4, 4);
    spec.kind = FamilyKind::vnkt;
    spec.n = num(1);
    spec.k = num(2);
    for (std::string_view t : split(parts[3], ',')) {
      long idx = parse_long(t, text);
      if (idx < 1) throw Error("subset indices are one-based in '" + std::string(text) + "'");
      spec.subset.push_back(static_cast<std::size_t>(idx));
    }
  } else if (kind == "jnq") {
    need(3, 4);
    spec.kind = FamilyKind::jnq;
    spec.n = num(1);
    spec.q = num(2);
    if (parts.size() == 4) {
      for (std::string_view t : split(parts[3], ',')) spec.embedding.push_back(parse_long(t, text));
    }
  } else if (kind == "inq") {
    need(3, 3);
    spec.kind = FamilyKind::inq;
    spec.n = num(1);
    spec.q = num(2);
  } else if (kind == "perm") {
    need(2, 2);
    spec.kind = FamilyKind::perm;
    spec.n = num(1);
  } else if (kind == "ag") {
    need(3, 3);
    spec.kind = FamilyKind::ag;
    spec.n = num(1);
    spec.q = num(2);
  } else {
    throw Error("unknown family kind '" + std::string(kind) + "' (expected cube, vnk, vnkt, jnq, inq, perm or ag)");
  }
  if (spec.kind == FamilyKind::ag && spec.q < 2) throw Error("ag needs q >= 2");
  if (spec.kind == FamilyKind::ag && !is_prime(static_cast<std::uint64_t>(spec.q))) {
    throw Error("ag:n:q needs a prime q; prime powers are not supported");
  }
  spec.field = field ? *field : default_field(spec);
  spec.validate();
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out;
  switch (kind) {
    case FamilyKind::cube: out = "cube:" + std::to_string(n); break;
    case FamilyKind::vnk: out = "vnk:" + std::to_string(n) + ":" + std::to_string(k); break;
    case FamilyKind::vnkt: out = "vnkt:" + std::to_string(n) + ":" + std::to_string(k) + ":" + join(subset); break;
    case FamilyKind::jnq:
      out = "jnq:" + std::to_string(n) + ":" + std::to_string(q);
      if (!embedding.empty()) out += ":" + join(embedding);
      break;
    case FamilyKind::inq: out = "inq:" + std::to_string(n) + ":" + std::to_string(q); break;
    case FamilyKind::perm: out = "perm:" + std::to_string(n); break;
    case FamilyKind::ag: out = "ag:" + std::to_string(n) + ":" + std::to_string(q); break;
  }
  if (field != default_field(*this)) out += "@" + field.name();
  return out;
}

void FamilySpec::validate() const {
  if (n < 1) throw Error("family dimension must be at least 1");
  switch (kind) {
    case FamilyKind::cube:
      if (n > 20) throw Error("cube dimension too large");
      break;
    case FamilyKind::vnk:
    case FamilyKind::vnkt:
      if (k < 0 || k >= n) throw Error("need 0 <= k < n");
      if (n > 20) throw Error("dimension too large");
      if (kind == FamilyKind::vnkt) {
        std::set<std::size_t> distinct(subset.begin(), subset.end());
        if (distinct.size() != subset.size()) throw Error("repeated index in T");
        for (std::size_t t : subset) {
          if (t < 1 || t > static_cast<std::size_t>(n)) throw Error("T must be a subset of [n]");
        }
        if (static_cast<long>(subset.size()) <= k) throw Error("need |T| > k");
      }
      break;
    case FamilyKind::jnq:
    case FamilyKind::inq: {
      if (q < 2) throw Error("need q > 1");
      if (kind == FamilyKind::inq && !field.is_rational()) throw Error("inq lives in the rationals");
      if (!embedding.empty() && static_cast<long>(embedding.size()) != q) {
        throw Error("embedding must list q images");
      }
      std::vector<Scalar> images = embedding_images(*this);
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        throw Error("embedding of [q] into " + field.name() + " is not injective");
      }
      break;
    }
    case FamilyKind::perm:
      if (n > 8) throw Error("permutohedron dimension too large");
      break;
    case FamilyKind::ag:
      if (field.is_rational() || field.characteristic() != static_cast<std::uint64_t>(q)) {
        throw Error("ag:n:q lives in GF(q)^n");
      }
      if (n > 8) throw Error("affine space dimension too large");
      break;
  }
}

PointSet generate(const FamilySpec& spec) {
  spec.validate();
  const Field& field = spec.field;
  const auto n = static_cast<std::size_t>(spec.n);
  std::vector<Point> points;
  switch (spec.kind) {
    case FamilyKind::cube:
      for (const auto& t : all_tuples(spec.n, 2)) {
        Vector coords;
        for (long x : t) coords.push_back(field.from_int(x));
        points.emplace_back(std::move(coords));
      }
      break;
    case FamilyKind::vnk:
    case FamilyKind::vnkt: {
      std::vector<std::vector<std::size_t>> subsets;
      for (long size = 0; size <= spec.k; ++size) subsets_of_size(spec.n, size, subsets);
      for (const auto& s : subsets) points.push_back(zero_one_point(field, spec.n, s));
      if (spec.kind == FamilyKind::vnkt) {
        std::vector<std::size_t> t;
        for (std::size_t i : spec.subset) t.push_back(i - 1);
        points.push_back(zero_one_point(field, spec.n, t));
      }
      break;
    }
    case FamilyKind::jnq:
    case FamilyKind::inq: {
      std::vector<Scalar> images = embedding_images(spec);
      std::vector<std::vector<long>> seqs;
      std::vector<long> prefix;
      non_decreasing(spec.n, spec.q, prefix, seqs);
      for (const auto& s : seqs) {
        Vector coords;
        for (long x : s) coords.push_back(images[static_cast<std::size_t>(x - 1)]);
        points.emplace_back(std::move(coords));
      }
      break;
    }
    case FamilyKind::perm: {
      std::vector<long> perm(n);
      std::iota(perm.begin(), perm.end(), 1);
      do {
        Vector coords;
        for (long x : perm) coords.push_back(field.from_int(x));
        points.emplace_back(std::move(coords));
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
    case FamilyKind::ag:
      for (const auto& t : all_tuples(spec.n, spec.q)) {
        Vector coords;
        for (long x : t) coords.push_back(field.from_int(x));
        points.emplace_back(std::move(coords));
      }
      break;
  }
  return PointSet(field, n, std::move(points));
}

std::vector<Hyperplane> sharp_cover_vnk(long n, long k, Field field) {
  if (n < 1 || k < 0 || k >= n) throw Error("need 0 <= k < n");
  std::vector<Hyperplane> out;
  for (long i = 1; i <= k; ++i) {
    out.emplace_back(Vector(static_cast<std::size_t>(n), field.one()), field.from_int(i));
  }
  return out;
}

Polynomial szw_sharp_polynomial(long n, long k) {
  if (n < 1 || k < 0 || k >= n) throw Error("need 0 <= k < n");
  const Field field = Field::rational();
  const auto nv = static_cast<std::size_t>(n);
  Polynomial sum(field, nv);
  for (std::size_t i = 0; i < nv; ++i) sum = sum + Polynomial::variable(field, nv, i);
  Polynomial f = Polynomial::constant(field, nv, field.one());
  for (long j = 0; j <= k; ++j) f = f * (sum - Polynomial::constant(field, nv, field.from_int(j)));

  FamilySpec cube{FamilyKind::cube, n, 0, 2, {}, {}, field};
  const PointSet vertices = generate(cube);
  for (const Point& p : vertices.points()) {
    long weight = 0;
    for (const Scalar& c : p.coords()) weight += c.is_one() ? 1 : 0;
    if (f.evaluate(p).is_zero() != (weight <= k)) {
      throw InvariantViolation("sharp polynomial misbehaves at " + p.to_string());
    }
  }
  return f;
}

std::vector<AffineMap> symmetry_generators(const FamilySpec& spec) {
  const Field& field = spec.field;
  const auto n = static_cast<std::size_t>(spec.n);
  std::vector<AffineMap> gens;
  switch (spec.kind) {
    case FamilyKind::cube:
      for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(AffineMap::swap(field, n, i, i + 1));
      for (std::size_t i = 0; i < n; ++i) gens.push_back(AffineMap::flip(field, n, i));
      break;
    case FamilyKind::perm:
      for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(AffineMap::swap(field, n, i, i + 1));
      break;
    case FamilyKind::ag:
      for (std::size_t i = 0; i < n; ++i) {
        Vector shift(n, field.zero());
        shift[i] = field.one();
        gens.push_back(AffineMap::translation(std::move(shift)));
      }
      for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(AffineMap::swap(field, n, i, i + 1));
      break;
    default:
      throw Error("no declared symmetry for family " + spec.to_string());
  }
  PointSet set = generate(spec);
  for (const AffineMap& g : gens) validate_symmetry(set, g);
  return gens;
}

}  // namespace almostcover
