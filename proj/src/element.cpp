#include "weyl/element.hpp"

#include <algorithm>

namespace weyl {

std::string to_string(const Ambient& a) {
  std::string kind = a.kind == Algebra::weyl          ? "A"
                     : a.kind == Algebra::homogenized ? "hA"
                                                      : "cA";
  return kind + "(n=" + std::to_string(a.n) + ",l=" + std::to_string(a.l) +
         ")";
}

namespace {

void validate_monomial(const Ambient& amb, const Monomial& m,
                       const char* where) {
  if (m.x.size() != amb.n || m.d.size() != amb.n)
    throw AmbientError(std::string(where) + ": monomial arity mismatch");
  if (m.pos < 0 || m.pos >= amb.l)
    throw AmbientError(std::string(where) + ": monomial position out of range");
  if (m.x0 != 0 && !amb.uses_x0())
    throw AmbientError(std::string(where) + ": X0 exponent in a plain Weyl element");
}

}  // namespace

Element Element::term(Ambient amb, Monomial m, Rational c) {
  validate_monomial(amb, m, "Element::term");
  Element e(amb);
  if (c != 0) e.terms_.push_back({std::move(m), std::move(c)});
  return e;
}

Element Element::constant(Ambient amb, Rational c) {
  return term(amb, Monomial(amb.n), std::move(c));
}

Element Element::x0(Ambient amb, int power) {
  Monomial m(amb.n);
  m.x0 = power;
  return term(amb, m, 1);
}

Element Element::x(Ambient amb, int v, int power) {
  Monomial m(amb.n);
  m.x[v] = power;
  return term(amb, m, 1);
}

Element Element::d(Ambient amb, int v, int power) {
  Monomial m(amb.n);
  m.d[v] = power;
  return term(amb, m, 1);
}

Element Element::from_terms(Ambient amb, std::vector<Term> terms) {
  TermAccumulator acc;
  for (auto& t : terms) {
    validate_monomial(amb, t.monomial, "Element::from_terms");
    acc[t.monomial] += t.coefficient;
  }
  return collapse(amb, std::move(acc));
}

Element from_sorted_terms(Ambient amb, std::vector<Term>&& terms) {
  Element e(amb);
  e.terms_ = std::move(terms);
  return e;
}

Element collapse(Ambient amb, TermAccumulator&& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  // map iteration is already in structural order
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  return from_sorted_terms(amb, std::move(out));
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
        return structural_compare(t.monomial, key) < 0;
      });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

Degrees Element::degrees() const {
  Degrees r;
  r.x_degree.assign(amb_.n, std::nullopt);
  r.d_degree.assign(amb_.n, std::nullopt);
  for (const auto& t : terms_) {
    const Monomial& m = t.monomial;
    auto up = [](std::optional<long>& slot, long v) {
      if (!slot || v > *slot) slot = v;
    };
    up(r.total, m.degree());
    up(r.total_x, m.x.sum());
    up(r.total_d, m.d.sum());
    for (int v = 0; v < amb_.n; ++v) {
      up(r.x_degree[v], m.x[v]);
      up(r.d_degree[v], m.d[v]);
    }
    if (!r.x0_order || m.x0 < *r.x0_order) r.x0_order = m.x0;
  }
  return r;
}

std::optional<long> Element::degree() const {
  std::optional<long> r;
  for (const auto& t : terms_) {
    long d = t.monomial.degree();
    if (!r || d > *r) r = d;
  }
  return r;
}

std::optional<long> Element::x0_order() const {
  std::optional<long> r;
  for (const auto& t : terms_)
    if (!r || t.monomial.x0 < *r) r = t.monomial.x0;
  return r;
}

long Element::x_variable_degree(int v) const {
  long r = 0;
  for (const auto& t : terms_) r = std::max(r, long(t.monomial.x[v]));
  return r;
}

long Element::d_variable_degree(int v) const {
  long r = 0;
  for (const auto& t : terms_) r = std::max(r, long(t.monomial.d[v]));
  return r;
}

bool Element::depends_on_x(int v) const { return x_variable_degree(v) > 0; }
bool Element::depends_on_d(int v) const { return d_variable_degree(v) > 0; }

bool Element::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = terms_.front().monomial.degree();
  for (const auto& t : terms_)
    if (t.monomial.degree() != d) return false;
  return true;
}

std::optional<long> Element::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.front().monomial.degree();
}

Element Element::operator-() const { return scaled(-1); }

Element Element::operator+(const Element& o) const {
  require_same_ambient(amb_, o.amb_, "add");
  // merge of two structurally sorted term lists
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() ||
        (a != terms_.end() &&
         structural_compare(a->monomial, b->monomial) < 0)) {
      out.push_back(*a++);
    } else if (a == terms_.end() ||
               structural_compare(b->monomial, a->monomial) < 0) {
      out.push_back(*b++);
    } else {
      Rational c = a->coefficient + b->coefficient;
      if (c != 0) out.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  return from_sorted_terms(amb_, std::move(out));
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::scaled(const Rational& c) const {
  if (c == 0) return Element(amb_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial, t.coefficient * c});
  return from_sorted_terms(amb_, std::move(out));
}

Element Element::at_position(int pos, int l) const {
  if (amb_.l != 1) throw AmbientError("at_position: source must be scalar");
  if (pos < 0 || pos >= l) throw AmbientError("at_position: bad position");
  Ambient amb = amb_;
  amb.l = l;
  TermAccumulator acc;
  for (const auto& t : terms_) {
    Monomial m = t.monomial;
    m.pos = pos;
    acc.emplace(std::move(m), t.coefficient);
  }
  return collapse(amb, std::move(acc));
}

Element Element::component(int pos) const {
  Ambient amb = amb_.scalar();
  TermAccumulator acc;
  for (const auto& t : terms_)
    if (t.monomial.pos == pos) {
      Monomial m = t.monomial;
      m.pos = 0;
      acc.emplace(std::move(m), t.coefficient);
    }
  return collapse(amb, std::move(acc));
}

Element Element::shift_x0_down(int k) const {
  TermAccumulator acc;
  for (const auto& t : terms_) {
    if (t.monomial.x0 < k)
      throw AmbientError("shift_x0_down: X0 power does not divide");
    Monomial m = t.monomial;
    m.x0 -= k;
    acc.emplace(std::move(m), t.coefficient);
  }
  return collapse(amb_, std::move(acc));
}

namespace {

// D^a X^b = sum_k C(a,k) C(b,k) k! (central)^k X^{b-k} D^{a-k} per variable,
// with central = 1 in A and X0^2 in hA; the commutative twin has no
// correction terms. Iterated from the defining relations.
void multiply_terms_into(TermAccumulator& acc, const Ambient& amb,
                         const Term& left, const Term& right) {
  const Monomial& a = left.monomial;
  const Monomial& b = right.monomial;
  Monomial base;
  base.pos = b.pos;
  base.x0 = a.x0 + b.x0;
  base.x = a.x + b.x;
  base.d = a.d + b.d;
  Rational c = left.coefficient * right.coefficient;

  if (amb.kind == Algebra::commutative) {
    acc[base] += c;
    return;
  }

  const int n = amb.n;
  std::vector<int> kmax(n), k(n, 0);
  for (int v = 0; v < n; ++v) kmax[v] = std::min(a.d[v], b.x[v]);

  for (;;) {
    Integer num = 1;
    long ksum = 0;
    for (int v = 0; v < n; ++v) {
      if (k[v] > 0)
        num *= binomial(a.d[v], k[v]) * binomial(b.x[v], k[v]) *
               factorial(k[v]);
      ksum += k[v];
    }
    Monomial m = base;
    for (int v = 0; v < n; ++v) {
      m.x[v] -= k[v];
      m.d[v] -= k[v];
    }
    if (amb.kind == Algebra::homogenized) m.x0 += 2 * static_cast<int>(ksum);
    acc[m] += c * Rational(num);

    // odometer over the correction exponents
    int v = 0;
    while (v < n && k[v] == kmax[v]) k[v++] = 0;
    if (v == n) break;
    ++k[v];
  }
}

}  // namespace

Element multiply(const Element& a, const Element& b) {
  if (a.ambient().kind != b.ambient().kind || a.ambient().n != b.ambient().n)
    throw AmbientError("multiply: ambient mismatch");
  if (a.ambient().l != 1)
    throw AmbientError("multiply: left factor must be a scalar");
  TermAccumulator acc;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      multiply_terms_into(acc, b.ambient(), ta, tb);
  return collapse(b.ambient(), std::move(acc));
}

}  // namespace weyl
