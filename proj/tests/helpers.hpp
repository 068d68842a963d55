#pragma once

#include <string>
#include <vector>

#include "weyl/element.hpp"
#include "weyl/linalg.hpp"
#include "weyl/prng.hpp"

namespace weyl::testing {

// ---- independent multiplication oracle ----
//
// Multiplies one generator at a time using only the single-step rewrite
// D_v X_v = X_v D_v + central; never touches the closed commutation formula
// used by the library.

inline Element naive_generator_mul(char kind, int v, const Element& b) {
  TermAccumulator acc;
  const Ambient& amb = b.ambient();
  for (const auto& t : b.terms()) {
    Monomial m = t.monomial;
    if (kind == '0') {
      m.x0 += 1;
      acc[m] += t.coefficient;
    } else if (kind == 'x') {
      m.x[v] += 1;
      acc[m] += t.coefficient;
    } else {
      // D_v X^i D^j = X^i D^{j + e_v} + i_v * central * X^{i - e_v} D^j
      Monomial main = m;
      main.d[v] += 1;
      acc[main] += t.coefficient;
      if (m.x[v] > 0) {
        Monomial corr = m;
        corr.x[v] -= 1;
        if (amb.kind == Algebra::homogenized) corr.x0 += 2;
        acc[corr] += t.coefficient * m.x[v];
      }
    }
  }
  return collapse(amb, std::move(acc));
}

inline Element naive_multiply(const Element& a, const Element& b) {
  Element out = Element::zero(b.ambient());
  for (const auto& t : a.terms()) {
    Element acc = b;
    // peel the generators of the monomial right to left
    for (int v = b.ambient().n - 1; v >= 0; --v)
      for (int e = 0; e < t.monomial.d[v]; ++e)
        acc = naive_generator_mul('d', v, acc);
    for (int v = b.ambient().n - 1; v >= 0; --v)
      for (int e = 0; e < t.monomial.x[v]; ++e)
        acc = naive_generator_mul('x', v, acc);
    for (int e = 0; e < t.monomial.x0; ++e)
      acc = naive_generator_mul('0', -1, acc);
    out = out + acc.scaled(t.coefficient);
  }
  return out;
}

// ---- random data ----

inline Monomial random_monomial(SplitMix64& rng, const Ambient& amb,
                                long max_degree) {
  Monomial m(amb.n);
  m.pos = static_cast<int>(rng.range(0, amb.l - 1));
  long budget = rng.range(0, max_degree);
  const int slots = 2 * amb.n + (amb.uses_x0() ? 1 : 0);
  for (int s = 0; s < slots && budget > 0; ++s) {
    long e = rng.range(0, budget);
    int slot = static_cast<int>(rng.range(0, slots - 1));
    if (amb.uses_x0() && slot == 2 * amb.n)
      m.x0 += static_cast<int>(e);
    else if (slot < amb.n)
      m.x[slot] += static_cast<int>(e);
    else
      m.d[slot - amb.n] += static_cast<int>(e);
    budget -= e;
  }
  return m;
}

inline Rational random_coefficient(SplitMix64& rng) {
  long num = rng.range(-9, 9);
  if (num == 0) num = 1;
  long den = rng.range(1, 4);
  return rat(num, den);
}

inline Element random_element(SplitMix64& rng, const Ambient& amb,
                              long max_degree, int max_terms) {
  std::vector<Term> terms;
  int count = static_cast<int>(rng.range(1, max_terms));
  for (int i = 0; i < count; ++i)
    terms.push_back({random_monomial(rng, amb, max_degree),
                     random_coefficient(rng)});
  return Element::from_terms(amb, std::move(terms));
}

inline Element random_homogeneous(SplitMix64& rng, const Ambient& amb,
                                  long degree, int max_terms) {
  std::vector<Monomial> pool;
  linalg::for_each_monomial(amb.n, amb.l, degree, amb.uses_x0(),
                            [&](const Monomial& m) { pool.push_back(m); });
  std::vector<Term> terms;
  int count = static_cast<int>(rng.range(1, max_terms));
  for (int i = 0; i < count; ++i)
    terms.push_back({pool[rng.range(0, static_cast<long>(pool.size()) - 1)],
                     random_coefficient(rng)});
  return Element::from_terms(amb, std::move(terms));
}

// ---- affine span oracle ----
//
// The linear space spanned by coefficient-bounded combinations
// { t a_v : deg t <= p }, cut down to total degree <= m. Pure row
// reduction; no completion machinery involved.

class AffineSpan {
 public:
  AffineSpan(const std::vector<Element>& gens, long coeff_degree)
      : coeff_degree_(coeff_degree) {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      amb_ = g.ambient();
      for (long p = 0; p <= coeff_degree; ++p)
        linalg::for_each_monomial(
            amb_.n, 1, p, amb_.uses_x0(), [&](const Monomial& t) {
              rows_.push_back(
                  multiply(Element::term(amb_.scalar(), t, 1), g));
            });
    }
  }

  // dim of the span intersected with the degree <= m filtration piece
  long dimension_at(long m) const {
    // columns: monomials of degree > m first, so pivot rows confined to the
    // trailing block span exactly the intersection
    linalg::MonomialTable table;
    long top = 0;
    for (const auto& r : rows_)
      if (auto d = r.degree()) top = std::max(top, *d);
    for (long p = top; p > m; --p)
      linalg::for_each_monomial(amb_.n, amb_.l, p, amb_.uses_x0(),
                                [&](const Monomial& mo) { table.id(mo); });
    long boundary = table.size();
    for (long p = m; p >= 0; --p)
      linalg::for_each_monomial(amb_.n, amb_.l, p, amb_.uses_x0(),
                                [&](const Monomial& mo) { table.id(mo); });
    linalg::Rref rref;
    for (const auto& r : rows_) {
      linalg::MonomialTable* t = &table;
      linalg::SparseRow row;
      for (const auto& term : r.terms())
        row.emplace_back(*t->find(term.monomial), term.coefficient);
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      rref.insert(std::move(row));
    }
    long dim = 0;
    for (const auto& [pivot, idx] : rref.pivots())
      if (pivot >= boundary) ++dim;
    return dim;
  }

  bool member(const Element& f) const {
    linalg::MonomialTable table;
    linalg::Rref rref;
    for (const auto& r : rows_) {
      auto row = rowify(r, table);
      rref.insert(std::move(row));
    }
    return rref.member(rowify(f, table));
  }

 private:
  static linalg::SparseRow rowify(const Element& e,
                                  linalg::MonomialTable& table) {
    linalg::SparseRow row;
    for (const auto& t : e.terms())
      row.emplace_back(table.id(t.monomial), t.coefficient);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  }

  Ambient amb_;
  long coeff_degree_;
  std::vector<Element> rows_;
};

}  // namespace weyl::testing
