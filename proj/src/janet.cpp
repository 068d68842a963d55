#include "weyl/janet.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

namespace weyl {

namespace {

Element monomial_element(const Ambient& amb, const Monomial& m) {
  return Element::term(amb.scalar(), m, 1);
}

// one reduction step: cancel the coefficient of f at monomial target using g
Element reduce_monomial_by(const Element& f, const Monomial& target,
                           const Rational& coeff, const Element& g,
                           const Term& g_lead) {
  Monomial cof = g_lead.monomial.quotient_of(target);
  Rational factor = coeff / g_lead.coefficient;
  Element adjust = multiply(monomial_element(f.ambient(), cof), g);
  return f - adjust.scaled(factor);
}

struct PreparedBasis {
  const std::vector<Element>* elements;
  std::vector<Term> leads;
};

// full normal form against elements with precomputed leading terms
Element normal_form_impl(Element f, const PreparedBasis& basis,
                         const MonomialOrder& order,
                         int skip_index = -1) {
  Element out = Element::zero(f.ambient());
  while (!f.is_zero()) {
    Term top = *hdt(f, order);
    bool reduced = false;
    for (std::size_t i = 0; i < basis.leads.size(); ++i) {
      if (static_cast<int>(i) == skip_index) continue;
      if (basis.leads[i].monomial.divides(top.monomial)) {
        f = reduce_monomial_by(f, top.monomial, top.coefficient,
                               (*basis.elements)[i], basis.leads[i]);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out = out + Element::term(f.ambient(), top.monomial, top.coefficient);
      f = f - Element::term(f.ambient(), top.monomial, top.coefficient);
    }
  }
  return out;
}

PreparedBasis prepare(const std::vector<Element>& elements,
                      const MonomialOrder& order) {
  PreparedBasis b;
  b.elements = &elements;
  b.leads.reserve(elements.size());
  for (const auto& e : elements) b.leads.push_back(*hdt(e, order));
  return b;
}

Element monic(const Element& e, const MonomialOrder& order) {
  auto h = hdt(e, order);
  if (!h || h->coefficient == 1) return e;
  return e.scaled(1 / h->coefficient);
}

}  // namespace

Element normal_form(const Element& f, const JanetBasis& basis) {
  if (!basis.complete())
    throw AmbientError("normal_form: basis is not complete");
  if (!f.is_zero())
    require_same_ambient(f.ambient(),
                         basis.size() ? basis.elements()[0].ambient()
                                      : f.ambient(),
                         "normal_form");
  PreparedBasis pb = prepare(basis.elements(), basis.order());
  return normal_form_impl(f, pb, basis.order());
}

JanetBasis complete(std::vector<Element> generators, MonomialOrder order,
                    CompletionLimits limits) {
  std::vector<Element> basis;
  bool homogeneous = true;
  Ambient amb;
  bool have_amb = false;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!have_amb) {
      amb = g.ambient();
      have_amb = true;
    } else {
      require_same_ambient(amb, g.ambient(), "complete");
    }
    homogeneous = homogeneous && g.is_homogeneous();
  }
  if (!have_amb)
    return JanetBasis({}, std::move(order), true, false, true);
  if (order.n() != amb.n || order.l() != amb.l)
    throw AmbientError("complete: order does not match the ambient");
  if (amb.kind == Algebra::homogenized && !order.is_induced())
    order = order.induced();

  // (lcm degree, sequence number) -> pair of basis indices
  using PairKey = std::pair<long, long>;
  std::set<std::pair<PairKey, std::pair<int, int>>> pairs;
  long seq = 0;
  std::vector<Term> leads;

  auto push_element = [&](Element e) {
    e = monic(e, order);
    if (auto deg = e.degree(); deg && *deg > limits.max_degree)
      throw ResourceLimitError("complete: degree cap exceeded");
    if (static_cast<int>(basis.size()) + 1 > limits.max_basis_size)
      throw ResourceLimitError("complete: basis size cap exceeded");
    Term lead = *hdt(e, order);
    int idx = static_cast<int>(basis.size());
    for (int j = 0; j < idx; ++j) {
      if (leads[j].monomial.pos != lead.monomial.pos) continue;
      Monomial lcm = Monomial::lcm(leads[j].monomial, lead.monomial);
      pairs.insert({{lcm.degree(), seq++}, {j, idx}});
    }
    basis.push_back(std::move(e));
    leads.push_back(std::move(lead));
  };

  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    PreparedBasis pb = prepare(basis, order);
    pb.leads = leads;  // prepare recomputes; reuse is safe either way
    Element r = normal_form_impl(g, pb, order);
    if (!r.is_zero()) push_element(std::move(r));
  }

  while (!pairs.empty()) {
    auto it = pairs.begin();
    auto [i, j] = it->second;
    pairs.erase(it);
    const Monomial lcm = Monomial::lcm(leads[i].monomial, leads[j].monomial);
    Element si = multiply(
        monomial_element(amb, leads[i].monomial.quotient_of(lcm)), basis[i]);
    Element sj = multiply(
        monomial_element(amb, leads[j].monomial.quotient_of(lcm)), basis[j]);
    // both sides are monic at the lcm monomial
    Element s = si - sj;
    PreparedBasis pb{&basis, leads};
    Element r = normal_form_impl(std::move(s), pb, order);
    if (!r.is_zero()) push_element(std::move(r));
  }

  return JanetBasis(std::move(basis), std::move(order), true, false,
                    homogeneous);
}

JanetBasis autoreduce(const JanetBasis& input) {
  if (!input.complete())
    throw AmbientError("autoreduce: basis is not complete");
  const MonomialOrder& order = input.order();

  // minimality: keep only elements whose leading monomial is not divisible
  // by another kept one; ascending scan makes the choice deterministic
  std::vector<int> by_lead(input.size());
  for (int i = 0; i < input.size(); ++i) by_lead[i] = i;
  std::vector<Term> leads;
  leads.reserve(input.size());
  for (const auto& e : input.elements()) leads.push_back(*hdt(e, order));
  std::sort(by_lead.begin(), by_lead.end(), [&](int a, int b) {
    auto c = order.compare(leads[a].monomial, leads[b].monomial);
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<Element> kept;
  std::vector<Term> kept_leads;
  for (int idx : by_lead) {
    bool redundant = false;
    for (const auto& kl : kept_leads)
      if (kl.monomial.divides(leads[idx].monomial)) {
        redundant = true;
        break;
      }
    if (!redundant) {
      kept.push_back(input.elements()[idx]);
      kept_leads.push_back(leads[idx]);
    }
  }

  // tail reduction; the normal form depends only on the leading-term module,
  // so a single pass yields the canonical representatives
  std::vector<Element> reduced(kept.size(), Element());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    PreparedBasis pb{&kept, kept_leads};
    Element nf = normal_form_impl(kept[i], pb, order, static_cast<int>(i));
    reduced[i] = monic(nf, order);
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Element& a, const Element& b) {
    return order.compare(hdt(a, order)->monomial, hdt(b, order)->monomial) > 0;
  });
  return JanetBasis(std::move(reduced), order, true, true,
                    input.homogeneous());
}

}  // namespace weyl
