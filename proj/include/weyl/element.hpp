#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "weyl/algebra.hpp"
#include "weyl/monomial.hpp"
#include "weyl/rational.hpp"

namespace weyl {

struct Term {
  Monomial monomial;
  Rational coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

// Degree data of an element or vector. Empty optionals are the infinite
// sentinels of the zero element: total/per-variable degrees are -infinity,
// the X0-order is +infinity.
struct Degrees {
  std::optional<long> total;
  std::optional<long> total_x;
  std::optional<long> total_d;
  std::vector<std::optional<long>> x_degree;  // per variable, index 0 = X1
  std::vector<std::optional<long>> d_degree;
  std::optional<long> x0_order;
};

// An element of A^l, hA^l or the commutative twin: a canonical normal-ordered
// sparse sum of monomials with nonzero rational coefficients. Terms are kept
// sorted under the structural order, so equality is structural equality.
// Values are immutable once built; every operation returns a fresh value.
class Element {
 public:
  Element() = default;
  explicit Element(Ambient amb) : amb_(amb) {}

  static Element zero(Ambient amb) { return Element(amb); }
  static Element term(Ambient amb, Monomial m, Rational c);
  static Element constant(Ambient amb, Rational c);
  // generators of the scalar algebra (l is taken from amb but pos = 0)
  static Element x0(Ambient amb, int power = 1);
  static Element x(Ambient amb, int v, int power = 1);  // v is 0-based
  static Element d(Ambient amb, int v, int power = 1);
  static Element from_terms(Ambient amb, std::vector<Term> terms);

  const Ambient& ambient() const { return amb_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  bool is_monomial() const { return terms_.size() == 1; }
  // coefficient of a monomial, zero if absent
  Rational coefficient(const Monomial& m) const;

  Degrees degrees() const;
  std::optional<long> degree() const;       // nullopt = -infinity (zero)
  std::optional<long> x0_order() const;     // nullopt = +infinity (zero)
  long x_variable_degree(int v) const;      // 0 for the zero element
  long d_variable_degree(int v) const;
  bool depends_on_x(int v) const;
  bool depends_on_d(int v) const;

  bool is_homogeneous() const;
  // degree if homogeneous and nonzero
  std::optional<long> homogeneous_degree() const;

  Element operator-() const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element scaled(const Rational& c) const;

  // embed a scalar at a position of a rank-l module
  Element at_position(int pos, int l) const;
  // extract one component as a scalar element
  Element component(int pos) const;

  // divide out X0^k; requires X0^k to divide every term
  Element shift_x0_down(int k) const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  friend Element collapse(Ambient, std::map<Monomial, Rational, MonomialStructLess>&&);
  friend Element from_sorted_terms(Ambient, std::vector<Term>&&);

  Ambient amb_;
  std::vector<Term> terms_;  // sorted by structural order, no zero coeffs
};

// Normal-ordered product. The left factor must be a scalar (l = 1) over the
// same algebra; the result lives in the right factor's module.
Element multiply(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) {
  return multiply(a, b);
}
inline Element operator*(const Rational& c, const Element& a) {
  return a.scaled(c);
}

using TermAccumulator = std::map<Monomial, Rational, MonomialStructLess>;
Element collapse(Ambient amb, TermAccumulator&& acc);
// terms must be structurally sorted with nonzero coefficients
Element from_sorted_terms(Ambient amb, std::vector<Term>&& terms);

}  // namespace weyl
