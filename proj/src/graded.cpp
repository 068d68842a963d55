#include "weyl/graded.hpp"

#include <algorithm>

namespace weyl {

namespace {

Element pad_terms_to(const Element& z, long target) {
  Ambient amb = z.ambient().homogenized_twin();
  TermAccumulator acc;
  for (const auto& t : z.terms()) {
    Monomial m = t.monomial;
    m.x0 += static_cast<int>(target - m.degree());
    acc[m] += t.coefficient;
  }
  return collapse(amb, std::move(acc));
}

}  // namespace

Element homogenize(const Element& z) {
  if (z.ambient().kind != Algebra::weyl)
    throw AmbientError("homogenize: expected a plain Weyl element");
  if (z.is_zero()) return Element::zero(z.ambient().homogenized_twin());
  return pad_terms_to(z, *z.degree());
}

std::vector<Element> homogenize_jointly(std::span<const Element> rows) {
  long target = 0;
  for (const auto& r : rows) {
    if (r.ambient().kind != Algebra::weyl)
      throw AmbientError("homogenize: expected plain Weyl elements");
    if (auto d = r.degree()) target = std::max(target, *d);
  }
  std::vector<Element> out;
  out.reserve(rows.size());
  for (const auto& r : rows)
    out.push_back(r.is_zero() ? Element::zero(r.ambient().homogenized_twin())
                              : pad_terms_to(r, target));
  return out;
}

Element dehomogenize(const Element& z) {
  if (z.ambient().kind != Algebra::homogenized)
    throw AmbientError("dehomogenize: expected a homogenized element");
  Ambient amb = z.ambient().affine_twin();
  TermAccumulator acc;
  for (const auto& t : z.terms()) {
    Monomial m = t.monomial;
    m.x0 = 0;
    acc[m] += t.coefficient;
  }
  return collapse(amb, std::move(acc));
}

GradedPieceBasis graded_piece(std::span<const Element> generators, long m) {
  GradedPieceBasis out;
  out.degree = m;
  if (generators.empty()) return out;
  Ambient amb = generators.front().ambient();
  const bool with_x0 = amb.uses_x0();

  linalg::MonomialTable table;
  // fixed column enumeration of the full degree-m piece
  linalg::for_each_monomial(amb.n, amb.l, m, with_x0,
                            [&](const Monomial& mo) { table.id(mo); });

  linalg::Rref rref;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    require_same_ambient(amb, g.ambient(), "graded_piece");
    auto deg = g.homogeneous_degree();
    if (!deg) throw AmbientError("graded_piece: generators must be homogeneous");
    if (*deg > m) continue;
    linalg::for_each_monomial(
        amb.n, 1, m - *deg, with_x0, [&](const Monomial& mult) {
          Element prod = multiply(Element::term(amb.scalar(), mult, 1), g);
          rref.insert(linalg::element_row(prod, table));
        });
  }
  for (const auto& row : rref.basis())
    out.basis.push_back(linalg::row_element(row, table, amb));
  return out;
}

std::vector<Element> gr_generators(std::span<const Element> saturated) {
  std::vector<Element> out;
  out.reserve(saturated.size());
  for (const auto& b : saturated) {
    Element affine = dehomogenize(b);
    if (affine.is_zero()) continue;
    long top = *affine.degree();
    Ambient amb = affine.ambient().commutative_twin();
    TermAccumulator acc;
    for (const auto& t : affine.terms())
      if (t.monomial.degree() == top) acc[t.monomial] += t.coefficient;
    out.push_back(collapse(amb, std::move(acc)));
  }
  return out;
}

SaturationResult saturate_x0(std::vector<Element> generators,
                             const MonomialOrder& order,
                             CompletionLimits limits) {
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.ambient().kind != Algebra::homogenized || !g.is_homogeneous())
      throw AmbientError("saturate_x0: generators must be homogeneous over hA");
  }
  MonomialOrder loop_order =
      order.with_module_mode(ModuleMode::top).induced();

  JanetBasis input_basis = autoreduce(complete(generators, loop_order, limits));
  JanetBasis basis = input_basis;
  std::vector<SaturationRound> trace;

  int total_stripped = 0;
  for (;;) {
    int stripped = 0;
    std::vector<Element> next;
    next.reserve(basis.size());
    for (const auto& g : basis.elements()) {
      auto ord = g.x0_order();
      if (ord && *ord > 0) {
        stripped += static_cast<int>(*ord);
        next.push_back(g.shift_x0_down(static_cast<int>(*ord)));
      } else {
        next.push_back(g);
      }
    }
    trace.push_back({basis.size(), stripped});
    if (stripped == 0) break;
    if (static_cast<int>(trace.size()) > limits.max_basis_size)
      throw ResourceLimitError("saturate_x0: round cap exceeded");
    total_stripped += stripped;
    basis = autoreduce(complete(std::move(next), loop_order, limits));
  }

  // certify the stabilization exponent: the least nu per generator with
  // generator * X0^nu inside the input module, by normal form
  int exponent = 0;
  for (const auto& g : basis.elements()) {
    int nu = 0;
    Element z = g;
    while (!normal_form(z, input_basis).is_zero()) {
      ++nu;
      if (nu > total_stripped + 1)
        throw ResourceLimitError("saturate_x0: membership certificate failed");
      z = multiply(Element::x0(z.ambient().scalar()), z);
    }
    exponent = std::max(exponent, nu);
  }
  return SaturationResult{exponent, basis.elements(), std::move(trace),
                          std::move(input_basis)};
}

}  // namespace weyl
