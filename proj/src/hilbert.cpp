#include "weyl/hilbert.hpp"

#include <algorithm>

namespace weyl {

namespace {

using Poly = std::vector<Rational>;  // coefficient of m^k at index k

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Rational poly_coeff(const Poly& p, std::size_t k) {
  return k < p.size() ? p[k] : Rational(0);
}

// C(m + shift, j) as a polynomial in m: prod_{r=0}^{j-1} (m + shift - r) / j!
Poly binomial_poly(const Rational& shift, int j) {
  Poly p{Rational(1)};
  for (int r = 0; r < j; ++r) p = poly_mul(p, Poly{shift - r, Rational(1)});
  Rational f(factorial(j));
  for (auto& c : p) c /= f;
  return p;
}

}  // namespace

Rational evaluate_polynomial(const std::vector<Rational>& coeffs, long m) {
  Rational acc(0);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * m + coeffs[i];
  return acc;
}

std::vector<Monomial> c_shadow(const JanetBasis& basis) {
  if (!basis.complete())
    throw AmbientError("c_shadow: basis is not complete");
  std::vector<Monomial> out;
  out.reserve(basis.size());
  for (const auto& e : basis.elements())
    out.push_back(hdt(e, basis.order())->monomial);
  return out;
}

long monomial_module_piece_dim(std::span<const Monomial> leads, int n, int l,
                               long m, bool with_x0) {
  long count = 0;
  linalg::for_each_monomial(n, l, m, with_x0, [&](const Monomial& mo) {
    for (const auto& lead : leads)
      if (lead.divides(mo)) {
        ++count;
        return;
      }
  });
  return count;
}

HilbertData hilbert_function(std::span<const Element> generators, Ambient amb,
                             HilbertSource source, int m_max,
                             const MonomialOrder& order,
                             CompletionLimits limits) {
  for (const auto& g : generators)
    if (!g.is_zero()) require_same_ambient(g.ambient(), amb, "hilbert_function");
  if (amb.kind != Algebra::weyl)
    throw AmbientError("hilbert_function: generators live in the Weyl algebra");

  std::vector<Element> h;
  h.reserve(generators.size());
  for (const auto& g : generators)
    if (!g.is_zero()) h.push_back(homogenize(g));
  SaturationResult sat = saturate_x0(std::move(h), order, limits);

  HilbertData data;
  data.source = source;
  data.n = amb.n;
  data.l = amb.l;
  data.values.reserve(m_max + 1);

  switch (source) {
    case HilbertSource::affine:
    case HilbertSource::homogenized: {
      for (int m = 0; m <= m_max; ++m) {
        long dim = graded_piece(sat.generators, m).dimension();
        data.values.push_back(
            linalg::free_piece_dimension(amb.n, amb.l, m, true) - dim);
      }
      break;
    }
    case HilbertSource::commutative_shadow: {
      JanetBasis basis =
          autoreduce(complete(sat.generators, order.induced(), limits));
      std::vector<Monomial> leads = c_shadow(basis);
      for (int m = 0; m <= m_max; ++m)
        data.values.push_back(
            linalg::free_piece_dimension(amb.n, amb.l, m, true) -
            monomial_module_piece_dim(leads, amb.n, amb.l, m, true));
      break;
    }
    case HilbertSource::graded_associated: {
      std::vector<Element> gr = gr_generators(sat.generators);
      for (int m = 0; m <= m_max; ++m) {
        long dim = graded_piece(gr, m).dimension();
        data.values.push_back(
            linalg::free_piece_dimension(amb.n, amb.l, m, false) - dim);
      }
      break;
    }
  }
  return data;
}

std::optional<HilbertPolynomial> hilbert_polynomial(const HilbertData& data) {
  const int maxdeg = data.source == HilbertSource::graded_associated
                         ? std::max(2 * data.n - 1, 0)
                         : 2 * data.n;
  const int diff_order = maxdeg + 1;
  const int window = data.n + 2;
  const int len = static_cast<int>(data.values.size());
  if (len < diff_order + window)
    throw AmbientError("hilbert_polynomial: insufficient data");

  // difference table of order maxdeg+1
  std::vector<long> diff(data.values.begin(), data.values.end());
  for (int o = 0; o < diff_order; ++o)
    for (int i = 0; i + 1 < static_cast<int>(diff.size()); ++i)
      diff[i] = diff[i + 1] - diff[i];
  diff.resize(len - diff_order);

  // least base from which every higher difference vanishes to the end;
  // demand a window of consecutive vanishing checks
  int start = static_cast<int>(diff.size());
  while (start > 0 && diff[start - 1] == 0) --start;
  if (static_cast<int>(diff.size()) - start < window) return std::nullopt;

  // Newton forward interpolation from the stable base
  std::vector<Rational> nodes;
  for (int t = 0; t <= maxdeg; ++t) nodes.emplace_back(data.values[start + t]);
  Poly p{};
  std::vector<Rational> delta = nodes;
  for (int t = 0; t <= maxdeg; ++t) {
    // delta[0] currently holds Delta^t H(start)
    Poly basis = binomial_poly(Rational(-start), t);  // C(m - start, t)
    for (auto& c : basis) c *= delta[0];
    Poly acc(std::max(p.size(), basis.size()), Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) acc[i] += p[i];
    for (std::size_t i = 0; i < basis.size(); ++i) acc[i] += basis[i];
    p = std::move(acc);
    for (std::size_t i = 0; i + 1 < delta.size(); ++i)
      delta[i] = delta[i + 1] - delta[i];
    delta.pop_back();
  }
  p = poly_trim(std::move(p));

  // actual stabilization: the least index from which values match exactly
  int stab = len;
  for (int m = len - 1; m >= 0; --m) {
    if (evaluate_polynomial(p, m) == data.values[m])
      stab = m;
    else
      break;
  }
  if (stab > start) return std::nullopt;  // interpolation window was unstable
  HilbertPolynomial out;
  out.coefficients = std::move(p);
  out.stabilization_index = stab;
  return out;
}

long monomial_ideal_quotient_dim(const std::vector<std::vector<int>>& gens,
                                 int nvars, long m) {
  long count = 0;
  std::vector<int> expo(nvars, 0);
  // enumerate compositions of m into nvars parts
  auto rec = [&](auto&& self, int slot, long rest) -> void {
    if (slot == nvars - 1) {
      expo[slot] = static_cast<int>(rest);
      bool standard = true;
      for (const auto& g : gens) {
        bool divides = true;
        for (int v = 0; v < nvars; ++v)
          if (g[v] > expo[v]) {
            divides = false;
            break;
          }
        if (divides) {
          standard = false;
          break;
        }
      }
      if (standard) ++count;
      return;
    }
    for (long e = 0; e <= rest; ++e) {
      expo[slot] = static_cast<int>(e);
      self(self, slot + 1, rest - e);
    }
  };
  if (m < 0) return 0;
  rec(rec, 0, m);
  return count;
}

long monomial_ideal_quotient_cumulative(
    const std::vector<std::vector<int>>& gens, int nvars, long m) {
  long total = 0;
  for (long p = 0; p <= m; ++p)
    total += monomial_ideal_quotient_dim(gens, nvars, p);
  return total;
}

std::vector<std::vector<int>> minimal_monomial_generators(
    std::vector<std::vector<int>> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      bool divides = true;
      for (std::size_t v = 0; v < gens[i].size(); ++v)
        if (gens[j][v] > gens[i][v]) {
          divides = false;
          break;
        }
      // break ties so that equal monomials keep exactly one copy
      if (divides && (gens[j] != gens[i] || j < i)) redundant = true;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

long macaulay_closed_form(const MacaulayConstants& c, long m) {
  const int V = c.nvars;
  if (c.zero_ideal) return binomial(m + V, V).get_si();
  Integer acc = binomial(m + V, V) - 1;
  for (int j = 1; j <= V; ++j) acc -= binomial(m - c.b[j] + j - 1, j);
  return acc.get_si();
}

MacaulayConstants macaulay_constants(std::vector<std::vector<int>> gens,
                                     int nvars) {
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != nvars)
      throw AmbientError("macaulay_constants: generator arity mismatch");
  gens = minimal_monomial_generators(std::move(gens));
  const int V = nvars;

  if (gens.empty()) {
    MacaulayConstants out;
    out.nvars = V;
    out.b.assign(V + 2, 0);
    out.zero_ideal = true;
    return out;
  }

  long maxdeg = 0;
  for (const auto& g : gens) {
    long d = 0;
    for (int e : g) d += e;
    maxdeg = std::max(maxdeg, d);
  }

  long m_max = std::max<long>(maxdeg * V + 2L * (V + 2) + 4, 2L * V + 8);
  for (int attempt = 0; attempt < 8; ++attempt, m_max *= 2) {
    std::vector<long> values;
    for (long m = 0; m <= m_max; ++m)
      values.push_back(monomial_ideal_quotient_cumulative(gens, V, m));

    // fit the eventual polynomial through vanishing V-th differences
    const int diff_order = V;  // degree <= V - 1
    const int window = V + 2;
    const int len = static_cast<int>(values.size());
    if (len < diff_order + 1 + window) continue;
    std::vector<long> diff(values.begin(), values.end());
    for (int o = 0; o < diff_order; ++o)
      for (int i = 0; i + 1 < static_cast<int>(diff.size()); ++i)
        diff[i] = diff[i + 1] - diff[i];
    diff.resize(len - diff_order);
    int start = static_cast<int>(diff.size());
    while (start > 0 && diff[start - 1] == 0) --start;
    if (start > len - diff_order - window) continue;

    Poly p{};
    std::vector<Rational> delta;
    for (int t = 0; t < diff_order; ++t)
      delta.emplace_back(values[start + t]);
    for (int t = 0; t < diff_order; ++t) {
      Poly basis = binomial_poly(Rational(-start), t);
      for (auto& c : basis) c *= delta[0];
      Poly acc(std::max(p.size(), basis.size()), Rational(0));
      for (std::size_t i = 0; i < p.size(); ++i) acc[i] += p[i];
      for (std::size_t i = 0; i < basis.size(); ++i) acc[i] += basis[i];
      p = std::move(acc);
      for (std::size_t i = 0; i + 1 < delta.size(); ++i)
        delta[i] = delta[i + 1] - delta[i];
      delta.pop_back();
    }
    p = poly_trim(std::move(p));

    // triangular recovery of b_V, ..., b_1 from
    //   Q(m) = C(m+V, V) - 1 - P(m) = sum_j C(m - b_j + j - 1, j)
    Poly q = binomial_poly(Rational(V), V);
    q = poly_sub(q, Poly{Rational(1)});
    q = poly_sub(q, p);
    std::vector<Rational> b(V + 2, Rational(0));
    bool ok = true;
    for (int j = V; j >= 1 && ok; --j) {
      if (poly_coeff(q, j) != Rational(1) / Rational(factorial(j))) {
        ok = false;
        break;
      }
      // [m^{j-1}] C(m - b + j - 1, j) = (j(j-1)/2 - j b) / j!
      Rational lower =
          j >= 2 ? Rational(1) / Rational(factorial(j - 1)) : Rational(0);
      Rational lhs = poly_coeff(q, j - 1) - lower;
      Rational bj =
          (Rational(j * (j - 1)) / 2 - lhs * Rational(factorial(j))) /
          Rational(j);
      if (bj.get_den() != 1 || bj < 0) {
        ok = false;
        break;
      }
      b[j] = bj;
      q = poly_sub(q, binomial_poly(Rational(j - 1) - bj, j));
    }
    if (!ok || !poly_trim(q).empty()) continue;
    for (int j = 1; j < V; ++j)
      if (b[j] < b[j + 1]) ok = false;
    if (!ok) continue;

    MacaulayConstants out;
    out.nvars = V;
    out.b.assign(V + 2, 0);
    for (int j = 1; j <= V; ++j) out.b[j] = static_cast<int>(b[j].get_num().get_si());

    // b_0: least degree >= b_1 from which on the closed form holds
    // everywhere (inclusive agreement, so values at m >= b_0 all match)
    long last_fail = -1;
    for (long m = 0; m <= m_max; ++m)
      if (macaulay_closed_form(out, m) != values[m]) last_fail = m;
    long b0 = std::max<long>(out.b[1], last_fail + 1);
    // the closed form must visibly stabilize inside the computed window
    if (last_fail > m_max - window) continue;
    out.b[0] = static_cast<int>(b0);
    return out;
  }
  throw ResourceLimitError("macaulay_constants: no stable window found");
}

}  // namespace weyl
