#include "weyl/linalg.hpp"

#include <algorithm>

namespace weyl::linalg {

SparseRow axpy(const SparseRow& r, const Rational& c, const SparseRow& p) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  auto a = r.begin();
  auto b = p.begin();
  while (a != r.end() || b != p.end()) {
    if (b == p.end() || (a != r.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == r.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational v = a->second + c * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

SparseRow Rref::reduce(SparseRow row) const {
  std::size_t i = 0;
  while (i < row.size()) {
    auto it = pivot_.find(row[i].first);
    if (it == pivot_.end()) {
      ++i;
      continue;
    }
    // pivot rows are monic with leading column row[i].first; the merge can
    // only introduce columns greater than it
    row = axpy(row, -row[i].second, rows_[it->second]);
  }
  return row;
}

std::optional<int> Rref::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return std::nullopt;
  Rational lead = row.front().second;
  if (lead != 1)
    for (auto& [c, v] : row) v /= lead;
  int pcol = row.front().first;
  int idx = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  pivot_[pcol] = idx;
  // back-substitute the new pivot into the older rows
  for (int r = 0; r < idx; ++r) {
    auto& old = rows_[r];
    auto at = std::lower_bound(
        old.begin(), old.end(), pcol,
        [](const std::pair<int, Rational>& e, int col) { return e.first < col; });
    if (at != old.end() && at->first == pcol)
      old = axpy(old, -at->second, rows_[idx]);
  }
  return pcol;
}

std::vector<SparseRow> Rref::basis() const {
  std::vector<SparseRow> out;
  out.reserve(rows_.size());
  for (const auto& [col, idx] : pivot_) out.push_back(rows_[idx]);
  return out;
}

std::vector<SparseRow> nullspace(const std::vector<SparseRow>& rows,
                                 int ncols) {
  Rref rref;
  for (const auto& r : rows) rref.insert(r);
  std::vector<SparseRow> kernel;
  for (int col = 0; col < ncols; ++col) {
    if (rref.has_pivot(col)) continue;
    SparseRow k;
    // x[col] = 1 and for every pivot p: x[p] = -row_p[col]
    for (const auto& [p, idx] : rref.pivots()) {
      const SparseRow& prow = rref.row_for_pivot(p);
      auto at = std::lower_bound(
          prow.begin(), prow.end(), col,
          [](const std::pair<int, Rational>& e, int c) { return e.first < c; });
      if (at != prow.end() && at->first == col) k.emplace_back(p, -at->second);
    }
    k.emplace_back(col, 1);
    std::sort(k.begin(), k.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    kernel.push_back(std::move(k));
  }
  return kernel;
}

std::optional<std::vector<Rational>> solve(const std::vector<SparseRow>& rows,
                                           const std::vector<Rational>& rhs,
                                           int ncols) {
  // augmented system: sum a_j x_j - b = 0, the -b living in column ncols
  Rref rref;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseRow r = rows[i];
    if (rhs[i] != 0) r.emplace_back(ncols, -rhs[i]);
    rref.insert(std::move(r));
  }
  if (rref.has_pivot(ncols)) return std::nullopt;
  std::vector<Rational> x(ncols, Rational(0));
  for (const auto& [p, idx] : rref.pivots()) {
    const SparseRow& prow = rref.row_for_pivot(p);
    if (!prow.empty() && prow.back().first == ncols)
      x[p] = -prow.back().second;  // free unknowns stay zero
  }
  return x;
}

std::vector<Rational> densify(const SparseRow& row, int ncols) {
  std::vector<Rational> out(ncols, Rational(0));
  for (const auto& [c, v] : row) out[c] = v;
  return out;
}

int MonomialTable::id(const Monomial& m) {
  auto [it, inserted] = index_.try_emplace(m, static_cast<int>(monomials_.size()));
  if (inserted) monomials_.push_back(m);
  return it->second;
}

std::optional<int> MonomialTable::find(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

void enumerate_exponents(Monomial& m, int n, long remaining, int slot,
                         bool skip_xn,
                         const std::function<void(const Monomial&)>& fn) {
  // slots: 0..n-1 are X1..Xn, n..2n-1 are D1..Dn, filled left to right;
  // the last slot absorbs the remainder
  if (slot == 2 * n - 1) {
    m.d[n - 1] = static_cast<int>(remaining);
    fn(m);
    m.d[n - 1] = 0;
    return;
  }
  const bool is_x = slot < n;
  const int var = is_x ? slot : slot - n;
  if (skip_xn && is_x && var == n - 1) {
    if (is_x) m.x[var] = 0;
    enumerate_exponents(m, n, remaining, slot + 1, skip_xn, fn);
    return;
  }
  for (long e = remaining; e >= 0; --e) {
    if (is_x)
      m.x[var] = static_cast<int>(e);
    else
      m.d[var] = static_cast<int>(e);
    enumerate_exponents(m, n, remaining - e, slot + 1, skip_xn, fn);
  }
  if (is_x)
    m.x[var] = 0;
  else
    m.d[var] = 0;
}

}  // namespace

void for_each_monomial(int n, int l, long degree, bool with_x0,
                       const std::function<void(const Monomial&)>& fn,
                       bool skip_xn) {
  if (degree < 0) return;
  Monomial m(n);
  for (int pos = 0; pos < l; ++pos) {
    m.pos = pos;
    if (with_x0) {
      for (long e0 = degree; e0 >= 0; --e0) {
        m.x0 = static_cast<int>(e0);
        enumerate_exponents(m, n, degree - e0, 0, skip_xn, fn);
      }
      m.x0 = 0;
    } else {
      enumerate_exponents(m, n, degree, 0, skip_xn, fn);
    }
  }
}

long free_piece_dimension(int n, int l, long m, bool with_x0) {
  if (m < 0) return 0;
  int vars = with_x0 ? 2 * n + 1 : 2 * n;
  return l * binomial(m + vars - 1, vars - 1).get_si();
}

SparseRow element_row(const Element& e, MonomialTable& table) {
  SparseRow row;
  row.reserve(e.terms().size());
  for (const auto& t : e.terms()) row.emplace_back(table.id(t.monomial), t.coefficient);
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

Element row_element(const SparseRow& row, const MonomialTable& table,
                    const Ambient& amb) {
  std::vector<Term> terms;
  terms.reserve(row.size());
  for (const auto& [c, v] : row) terms.push_back({table.monomial(c), v});
  return Element::from_terms(amb, std::move(terms));
}

}  // namespace weyl::linalg
