#include "almostcover/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "almostcover/error.hpp"

namespace almostcover {

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exps_(std::move(exponents)), degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0})) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  if (index >= nvars) throw Error("variable index out of range");
  std::vector<std::uint32_t> e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

Monomial Monomial::square_free(std::size_t nvars, std::span<const std::size_t> support) {
  std::vector<std::uint32_t> e(nvars, 0);
  for (std::size_t i : support) {
    if (i >= nvars) throw Error("variable index out of range");
    e[i] = 1;
  }
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (other.nvars() != nvars()) throw Error("monomial dimension mismatch");
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = other.exps_[i] - exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::is_square_free() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) out.push_back(i);
  }
  return out;
}

Scalar Monomial::evaluate(const Point& p) const {
  if (p.dim() != nvars()) throw Error("dimension mismatch evaluating monomial");
  if (p.dim() == 0) return Scalar{};
  Scalar value = p[0].field().one();
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    for (std::uint32_t k = 0; k < exps_[i]; ++k) value *= p[i];
  }
  return value;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw Error("monomial dimension mismatch");
  std::vector<std::uint32_t> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering compare(TermOrder order, const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw Error("monomial dimension mismatch");
  if (order == TermOrder::deglex) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  }
  return a.exponents() <=> b.exponents();
}

namespace {

void canonicalize(std::vector<Term>& terms, TermOrder order) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return compare(order, x.monomial, y.monomial) > 0; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (Term& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coefficient.is_zero(); });
  terms = std::move(merged);
}

}  // namespace

Polynomial::Polynomial(Field field, std::size_t nvars, TermOrder order)
    : field_(field), nvars_(nvars), order_(order) {}

Polynomial::Polynomial(Field field, std::size_t nvars, std::vector<Term> terms, TermOrder order)
    : field_(field), nvars_(nvars), order_(order), terms_(std::move(terms)) {
  for (const Term& t : terms_) {
    if (t.monomial.nvars() != nvars_) throw Error("monomial dimension mismatch");
    require_same_field(t.coefficient.field(), field_);
  }
  canonicalize(terms_, order_);
}

Polynomial Polynomial::constant(Field field, std::size_t nvars, const Scalar& c) {
  return monomial(field, nvars, Monomial::one(nvars), c);
}

Polynomial Polynomial::monomial(Field field, std::size_t nvars, const Monomial& m, const Scalar& c) {
  return Polynomial(field, nvars, {Term{m, c}});
}

Polynomial Polynomial::variable(Field field, std::size_t nvars, std::size_t index) {
  return monomial(field, nvars, Monomial::variable(nvars, index), field.one());
}

Polynomial Polynomial::linear_form(const Hyperplane& h) {
  const Field field = h.offset().field();
  const std::size_t n = h.dim();
  std::vector<Term> terms;
  for (std::size_t i = 0; i < n; ++i) terms.push_back(Term{Monomial::variable(n, i), h.normal()[i]});
  terms.push_back(Term{Monomial::one(n), -h.offset()});
  return Polynomial(field, n, std::move(terms));
}

int Polynomial::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.front();
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_) {
    if (t.monomial == m) return t.coefficient;
  }
  return field_.zero();
}

Scalar Polynomial::evaluate(const Point& p) const {
  if (p.dim() != nvars_) throw Error("dimension mismatch evaluating polynomial");
  Scalar sum = field_.zero();
  for (const Term& t : terms_) sum += t.coefficient * t.monomial.evaluate(p);
  return sum;
}

Polynomial Polynomial::with_order(TermOrder order) const { return Polynomial(field_, nvars_, terms_, order); }

void Polynomial::check_compatible(const Polynomial& other) const {
  require_same_field(field_, other.field_);
  if (nvars_ != other.nvars_) throw Error("polynomial dimension mismatch");
  if (order_ != other.order_) throw Error("polynomial term order mismatch");
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  std::vector<Term> merged;
  merged.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end()) {
      merged.push_back(*i++);
      continue;
    }
    if (i == a.terms_.end()) {
      merged.push_back(*j++);
      continue;
    }
    auto c = compare(a.order_, i->monomial, j->monomial);
    if (c > 0) {
      merged.push_back(*i++);
    } else if (c < 0) {
      merged.push_back(*j++);
    } else {
      Scalar sum = i->coefficient + j->coefficient;
      if (!sum.is_zero()) merged.push_back(Term{i->monomial, std::move(sum)});
      ++i;
      ++j;
    }
  }
  Polynomial out(a.field_, a.nvars_, a.order_);
  out.terms_ = std::move(merged);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (Term& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& x : a.terms_) {
    for (const Term& y : b.terms_) products.push_back(Term{x.monomial * y.monomial, x.coefficient * y.coefficient});
  }
  return Polynomial(a.field_, a.nvars_, std::move(products), a.order_);
}

Polynomial Polynomial::scaled(const Scalar& c) const { return times(Monomial::one(nvars_), c); }

Polynomial Polynomial::times(const Monomial& m, const Scalar& c) const {
  require_same_field(c.field(), field_);
  Polynomial out(field_, nvars_, order_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the term order.
  for (const Term& t : terms_) out.terms_.push_back(Term{t.monomial * m, t.coefficient * c});
  return out;
}

Polynomial Polynomial::without_leading_term() const {
  Polynomial out(field_, nvars_, order_);
  if (!terms_.empty()) out.terms_.assign(terms_.begin() + 1, terms_.end());
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_ || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  Polynomial bb = b.order_ == a.order_ ? b : b.with_order(a.order_);
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == bb.terms_[i].monomial) || a.terms_[i].coefficient != bb.terms_[i].coefficient) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    bool negative = field_.is_rational() && t.coefficient.rational() < 0;
    Scalar mag = negative ? -t.coefficient : t.coefficient;
    std::string body;
    if (t.monomial.degree() == 0) {
      body = mag.to_string();
    } else if (mag.is_one()) {
      body = t.monomial.to_string();
    } else {
      body = mag.to_string() + "*" + t.monomial.to_string();
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, Field field, std::size_t nvars, TermOrder order)
      : text_(text), field_(field), nvars_(nvars), order_(order) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = take() == '-';
    }
    while (true) {
      Term t = parse_term();
      if (negative) t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
      skip_ws();
      if (pos_ == text_.size()) break;
      char op = take();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
    }
    return Polynomial(field_, nvars_, std::move(terms), order_);
  }

 private:
  Term parse_term() {
    Scalar coef = field_.one();
    std::vector<std::uint32_t> exps(nvars_, 0);
    while (true) {
      skip_ws();
      if (peek() == 'x') {
        ++pos_;
        std::size_t index = parse_uint();
        if (index == 0 || index > nvars_) fail("variable x" + std::to_string(index) + " out of range");
        std::uint32_t power = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          power = static_cast<std::uint32_t>(parse_uint());
        }
        exps[index - 1] += power;
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '/') {
          ++pos_;
          if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
          while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        try {
          coef *= field_.parse(text_.substr(start, pos_ - start));
        } catch (const Error& e) {
          fail(e.what());
        }
      } else {
        fail("expected a number or a variable");
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return Term{Monomial(std::move(exps)), std::move(coef)};
  }

  std::size_t parse_uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::size_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::size_t>(take() - '0');
      if (value > 1'000'000) fail("integer too large");
    }
    return value;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  Field field_;
  std::size_t nvars_;
  TermOrder order_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, Field field, std::size_t nvars, TermOrder order) {
  return PolyParser(text, field, nvars, order).parse();
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors, TermOrder order) {
  for (const Polynomial& g : divisors) {
    if (g.is_zero()) throw Error("reduction by the zero polynomial");
    require_same_field(g.field(), f.field());
    if (g.nvars() != f.nvars()) throw Error("polynomial dimension mismatch");
  }
  std::vector<Polynomial> gs;
  gs.reserve(divisors.size());
  for (const Polynomial& g : divisors) gs.push_back(g.order() == order ? g : g.with_order(order));

  Polynomial rest = f.order() == order ? f : f.with_order(order);
  std::vector<Term> remainder;
  // Terms moved to the remainder are larger than everything left in rest and
  // are irreducible, so the leading term of rest is always the largest
  // reducible monomial.
  while (!rest.is_zero()) {
    const Term lead = rest.leading_term();
    const Polynomial* hit = nullptr;
    for (const Polynomial& g : gs) {
      if (g.leading_monomial().divides(lead.monomial)) {
        hit = &g;
        break;
      }
    }
    if (hit == nullptr) {
      remainder.push_back(lead);
      rest = rest.without_leading_term();
      continue;
    }
    Monomial u = hit->leading_monomial().quotient_of(lead.monomial);
    Scalar factor = lead.coefficient / hit->leading_coefficient();
    rest = rest - hit->times(u, factor);
  }
  return Polynomial(f.field(), f.nvars(), std::move(remainder), order);
}

}  // namespace almostcover
