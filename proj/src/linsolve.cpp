#include "weyl/linsolve.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <limits>
#include <tuple>

#include "weyl/prng.hpp"

namespace weyl {

namespace {

void validate_entry(const Element& e, const Ambient& amb, const char* where) {
  if (e.is_zero()) return;
  require_same_ambient(e.ambient(), amb, where);
  if (!e.is_homogeneous())
    throw AmbientError(std::string(where) + ": entries must be homogeneous");
}

}  // namespace

ShiftedMatrix::ShiftedMatrix(std::vector<std::vector<Element>> entries,
                             std::vector<int> row_shifts,
                             std::vector<int> col_shifts)
    : entries_(std::move(entries)),
      row_shifts_(std::move(row_shifts)),
      col_shifts_(std::move(col_shifts)) {
  ncols_ = static_cast<int>(col_shifts_.size());
  if (entries_.size() != row_shifts_.size())
    throw AmbientError("ShiftedMatrix: row shift count mismatch");
  bool have_amb = false;
  for (const auto& row : entries_) {
    if (static_cast<int>(row.size()) != ncols_)
      throw AmbientError("ShiftedMatrix: ragged rows");
    for (const auto& e : row)
      if (!e.is_zero() && !have_amb) {
        amb_ = e.ambient();
        have_amb = true;
      }
  }
  if (!have_amb) amb_ = Ambient{Algebra::homogenized, 1, 1};
  if (amb_.l != 1 || amb_.kind != Algebra::homogenized)
    throw AmbientError("ShiftedMatrix: entries must be hA scalars");
  int minc = ncols_ ? *std::min_element(col_shifts_.begin(), col_shifts_.end())
                    : 0;
  if (ncols_ && minc != 0)
    throw AmbientError("ShiftedMatrix: least column shift must be zero");
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < ncols_; ++j) {
      const Element& e = entries_[i][j];
      validate_entry(e, amb_, "ShiftedMatrix");
      if (!e.is_zero() &&
          *e.homogeneous_degree() != row_shifts_[i] - col_shifts_[j])
        throw AmbientError("ShiftedMatrix: entry degree violates the shifts");
    }
}

ShiftedMatrix ShiftedMatrix::infer(std::vector<std::vector<Element>> entries,
                                   Ambient scalar_ambient) {
  const int k = static_cast<int>(entries.size());
  const int l = k ? static_cast<int>(entries[0].size()) : 0;
  // propagate deg b_ij = d_i - d'_j across the incidence graph of the
  // nonzero entries; disconnected rows/columns default to shift zero
  std::vector<std::optional<int>> drow(k), dcol(l);
  for (int start = 0; start < l; ++start) {
    if (dcol[start]) continue;
    dcol[start] = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < l; ++j) {
          const Element& e = entries[i][j];
          if (e.is_zero()) continue;
          if (!e.is_homogeneous())
            throw AmbientError("ShiftedMatrix: entries must be homogeneous");
          int deg = static_cast<int>(*e.homogeneous_degree());
          if (dcol[j] && !drow[i]) {
            drow[i] = *dcol[j] + deg;
            changed = true;
          } else if (drow[i] && !dcol[j]) {
            dcol[j] = *drow[i] - deg;
            changed = true;
          } else if (drow[i] && dcol[j] && *drow[i] - *dcol[j] != deg) {
            throw AmbientError("ShiftedMatrix: entry degrees admit no shifts");
          }
        }
    }
  }
  std::vector<int> rs(k, 0), cs(l, 0);
  for (int i = 0; i < k; ++i)
    if (drow[i]) rs[i] = *drow[i];
  for (int j = 0; j < l; ++j)
    if (dcol[j]) cs[j] = *dcol[j];
  if (l) {
    int minc = *std::min_element(cs.begin(), cs.end());
    for (auto& v : cs) v -= minc;
    for (auto& v : rs) v -= minc;
    for (int i = 0; i < k; ++i) {
      bool zero_row = true;
      for (int j = 0; j < l; ++j)
        zero_row = zero_row && entries[i][j].is_zero();
      if (zero_row) rs[i] = 0;
    }
  }
  (void)scalar_ambient;
  return ShiftedMatrix(std::move(entries), std::move(rs), std::move(cs));
}

int ShiftedMatrix::degree_bound() const {
  long d = 0;
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (auto deg = e.degree()) d = std::max(d, *deg);
  return static_cast<int>(d) + 1;
}

bool ShiftedMatrix::depends_on_xn() const {
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (e.depends_on_x(amb_.n - 1)) return true;
  return false;
}

bool ShiftedMatrix::column_is_zero(int j) const {
  for (int i = 0; i < rows(); ++i)
    if (!entries_[i][j].is_zero()) return false;
  return true;
}

ShiftedMatrix ShiftedMatrix::submatrix(const std::vector<int>& row_idx,
                                       const std::vector<int>& col_idx) const {
  std::vector<std::vector<Element>> e;
  std::vector<int> rs, cs;
  for (int i : row_idx) {
    std::vector<Element> row;
    for (int j : col_idx) row.push_back(entries_[i][j]);
    e.push_back(std::move(row));
    rs.push_back(row_shifts_[i]);
  }
  for (int j : col_idx) cs.push_back(col_shifts_[j]);
  int minc = cs.empty() ? 0 : *std::min_element(cs.begin(), cs.end());
  for (auto& v : cs) v -= minc;
  for (auto& v : rs) v -= minc;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    bool zero_row = true;
    for (const auto& x : e[i]) zero_row = zero_row && x.is_zero();
    if (zero_row) rs[i] = 0;
  }
  return ShiftedMatrix(std::move(e), std::move(rs), std::move(cs));
}

namespace {

struct BlockLayout {
  std::vector<long> degree;                  // monomial degree per block
  std::vector<std::vector<Monomial>> monos;  // enumeration per block
  std::vector<int> offset;
  int total = 0;
};

BlockLayout make_layout(const std::vector<long>& degrees, int n,
                        bool xn_free) {
  BlockLayout lay;
  lay.degree = degrees;
  lay.monos.resize(degrees.size());
  lay.offset.resize(degrees.size(), 0);
  for (std::size_t b = 0; b < degrees.size(); ++b) {
    lay.offset[b] = lay.total;
    if (degrees[b] < 0) continue;
    linalg::for_each_monomial(
        n, 1, degrees[b], /*with_x0=*/true,
        [&](const Monomial& m) { lay.monos[b].push_back(m); }, xn_free);
    lay.total += static_cast<int>(lay.monos[b].size());
  }
  return lay;
}

// vector of scalars per block, one component per block position
Element layout_element(const BlockLayout& lay, const linalg::SparseRow& sol,
                       const Ambient& scalar_amb, int width) {
  Ambient amb = scalar_amb;
  amb.l = width;
  std::vector<Term> terms;
  for (const auto& [col, val] : sol) {
    std::size_t blk = 0;
    while (blk < lay.monos.size() &&
           !(col >= lay.offset[blk] &&
             col < lay.offset[blk] + static_cast<int>(lay.monos[blk].size())))
      ++blk;
    Monomial m = lay.monos[blk][col - lay.offset[blk]];
    m.pos = static_cast<int>(blk);
    terms.push_back({std::move(m), val});
  }
  return Element::from_terms(amb, std::move(terms));
}

// assemble the F-linear constraint rows of a graded layer
//   right form: unknown block per column j, sum_j b_ij z_j lands in row i
//   left  form: unknown block per row i,   sum_i Z_i b_ij lands in column j
std::vector<linalg::SparseRow> assemble(const ShiftedMatrix& b,
                                        const BlockLayout& lay, bool left,
                                        linalg::MonomialTable& eq_table) {
  std::vector<std::vector<std::pair<int, Rational>>> eq;
  const int nblocks = static_cast<int>(lay.degree.size());
  for (int blk = 0; blk < nblocks; ++blk) {
    if (lay.degree[blk] < 0) continue;
    for (std::size_t mi = 0; mi < lay.monos[blk].size(); ++mi) {
      int col = lay.offset[blk] + static_cast<int>(mi);
      Element mu = Element::term(b.scalar_ambient(), lay.monos[blk][mi], 1);
      const int other = left ? b.cols() : b.rows();
      for (int o = 0; o < other; ++o) {
        const Element& entry = left ? b.at(blk, o) : b.at(o, blk);
        if (entry.is_zero()) continue;
        Element prod = left ? multiply(mu, entry) : multiply(entry, mu);
        for (const auto& t : prod.terms()) {
          Monomial key = t.monomial;
          key.pos = o;  // equation component
          int eq_id = eq_table.id(key);
          if (eq_id >= static_cast<int>(eq.size())) eq.resize(eq_id + 1);
          eq[eq_id].emplace_back(col, t.coefficient);
        }
      }
    }
  }
  std::vector<linalg::SparseRow> rows;
  rows.reserve(eq.size());
  for (auto& r : eq) {
    std::sort(r.begin(), r.end(),
              [](const auto& a, const auto& b2) { return a.first < b2.first; });
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::optional<Element> find_dependence(const ShiftedMatrix& b,
                                       DependenceQuery query) {
  const int n = b.scalar_ambient().n;
  const long cap = query.degree_cap.value_or(
      static_cast<long>(2 * n + 3) * b.cols() * b.degree_bound());
  if (b.cols() == 0) return std::nullopt;
  const bool xn_free = query.xn_free && !b.depends_on_xn();

  // one unknown block per column, deg z_j = d'_j + t, in both variants
  const int width = b.cols();
  int tmin = 0, max_col_shift = 0;
  for (int j = 0; j < width; ++j) {
    tmin = std::min(tmin, -b.col_shift(j));
    max_col_shift = std::max(max_col_shift, b.col_shift(j));
  }

  for (long t = tmin; t + max_col_shift <= cap; ++t) {
    std::vector<long> degrees(width);
    for (int j = 0; j < width; ++j) degrees[j] = b.col_shift(j) + t;
    BlockLayout lay = make_layout(degrees, n, xn_free);
    if (lay.total == 0) continue;
    linalg::MonomialTable eq_table;
    std::vector<std::vector<std::pair<int, Rational>>> eq;
    for (int blk = 0; blk < width; ++blk) {
      if (lay.degree[blk] < 0) continue;
      for (std::size_t mi = 0; mi < lay.monos[blk].size(); ++mi) {
        int col = lay.offset[blk] + static_cast<int>(mi);
        Element mu = Element::term(b.scalar_ambient(), lay.monos[blk][mi], 1);
        for (int i = 0; i < b.rows(); ++i) {
          const Element& entry = b.at(i, blk);
          if (entry.is_zero()) continue;
          Element prod =
              query.left_side ? multiply(mu, entry) : multiply(entry, mu);
          for (const auto& term : prod.terms()) {
            Monomial key = term.monomial;
            key.pos = i;
            int eq_id = eq_table.id(key);
            if (eq_id >= static_cast<int>(eq.size())) eq.resize(eq_id + 1);
            eq[eq_id].emplace_back(col, term.coefficient);
          }
        }
      }
    }
    std::vector<linalg::SparseRow> rows;
    rows.reserve(eq.size());
    for (auto& r : eq) {
      std::sort(r.begin(), r.end(), [](const auto& a, const auto& b2) {
        return a.first < b2.first;
      });
      rows.push_back(std::move(r));
    }
    auto kernel = linalg::nullspace(rows, lay.total);
    if (!kernel.empty()) {
      Element z =
          layout_element(lay, kernel.front(), b.scalar_ambient(), width);
      auto ord = z.x0_order();
      if (ord && *ord > 0) z = z.shift_x0_down(static_cast<int>(*ord));
      return z;
    }
  }
  return std::nullopt;
}

Element graded_kernel(const ShiftedMatrix& b, DependenceQuery query) {
  if (b.cols() != b.rows() + 1)
    throw AmbientError("graded_kernel: expected an (l-1) x l matrix");
  auto z = find_dependence(b, query);
  if (!z)
    throw ResourceLimitError(
        "graded_kernel: no kernel vector within the degree cap");
  return *z;
}

RankResult rank_right(const ShiftedMatrix& b) {
  RankResult out;
  const int n = b.scalar_ambient().n;
  const int d = b.degree_bound();
  std::vector<int> rows_all(b.rows());
  for (int i = 0; i < b.rows(); ++i) rows_all[i] = i;
  for (int j = 0; j < b.cols(); ++j) {
    if (b.column_is_zero(j)) continue;
    std::vector<int> candidate = out.independent;
    candidate.push_back(j);
    ShiftedMatrix sub = b.submatrix(rows_all, candidate);
    DependenceQuery q;
    q.degree_cap = static_cast<long>(2 * n + 3) *
                   (static_cast<long>(candidate.size()) + 1) * d;
    if (!find_dependence(sub, q)) out.independent.push_back(j);
  }
  out.rank = static_cast<int>(out.independent.size());
  return out;
}

namespace {

// nonzero (z1, z2) with a z1 + c z2 = 0; z2 is nonzero whenever a is
std::pair<Element, Element> pair_kernel(const Element& a, const Element& c) {
  Ambient amb = a.ambient();
  long da = *a.homogeneous_degree();
  long dc = *c.homogeneous_degree();
  long rho = std::max(da, dc);
  ShiftedMatrix m({{a, c}}, {static_cast<int>(rho)},
                  {static_cast<int>(rho - da), static_cast<int>(rho - dc)});
  DependenceQuery q;
  q.degree_cap = static_cast<long>(2 * amb.n + 3) * 2 * (std::max(da, dc) + 1);
  auto z = find_dependence(m, q);
  if (!z)
    throw ResourceLimitError("trapezoidal_form: pair kernel out of budget");
  Element z1 = z->component(0), z2 = z->component(1);
  if (z2.is_zero())
    throw ResourceLimitError("trapezoidal_form: degenerate pair kernel");
  return {z1, z2};
}

long ord_or_max(const Element& e) {
  auto o = e.x0_order();
  return o ? *o : std::numeric_limits<long>::max();
}

}  // namespace

TrapezoidalForm trapezoidalform_impl(const ShiftedMatrix& b);

TrapezoidalForm trapezoidal_form(const ShiftedMatrix& b) {
  if (b.rows() < 1 || b.cols() < 1)
    throw AmbientError("trapezoidal_form: empty matrix");
  return trapezoidalform_impl(b);
}

TrapezoidalForm trapezoidalform_impl(const ShiftedMatrix& b) {
  TrapezoidalForm out;
  RankResult rk = rank_right(b);
  out.rank = rk.rank;
  const int l1 = rk.rank;
  const int k = b.rows();
  out.row_order.resize(k);
  for (int i = 0; i < k; ++i) out.row_order[i] = i;
  out.column_choice = rk.independent;
  if (l1 == 0) return out;

  // Gauss pass with least-ord pivots; E carries the running matrix, Z the
  // accumulated right multiplier
  std::vector<std::vector<Element>> E(k, std::vector<Element>());
  for (int i = 0; i < k; ++i)
    for (int j : out.column_choice) E[i].push_back(b.at(i, j));
  Ambient amb = b.scalar_ambient();
  std::vector<std::vector<Element>> Z(
      l1, std::vector<Element>(l1, Element::zero(amb)));
  for (int i = 0; i < l1; ++i) Z[i][i] = Element::constant(amb, 1);

  auto column_op = [&](int target, int source, const Element& zsrc,
                       const Element& ztgt) {
    // col_target := col_source * zsrc + col_target * ztgt
    for (int r = 0; r < k; ++r)
      E[r][target] =
          multiply(E[r][source], zsrc) + multiply(E[r][target], ztgt);
    for (int r = 0; r < l1; ++r)
      Z[r][target] =
          multiply(Z[r][source], zsrc) + multiply(Z[r][target], ztgt);
  };

  for (int s = 0; s < l1; ++s) {
    // least-ord pivot, ties by smallest (row, column)
    int pi = -1, pj = -1;
    long best = std::numeric_limits<long>::max();
    for (int i = s; i < k; ++i)
      for (int j = s; j < l1; ++j) {
        if (E[i][j].is_zero()) continue;
        long o = ord_or_max(E[i][j]);
        if (o < best) {
          best = o;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0)
      throw AmbientError("trapezoidal_form: rank collapsed during elimination");
    std::swap(E[pi], E[s]);
    std::swap(out.row_order[pi], out.row_order[s]);
    if (pj != s) {
      for (int r = 0; r < k; ++r) std::swap(E[r][pj], E[r][s]);
      for (int r = 0; r < l1; ++r) std::swap(Z[r][pj], Z[r][s]);
      std::swap(out.column_choice[pj], out.column_choice[s]);
    }
    for (int j = s + 1; j < l1; ++j) {
      if (E[s][j].is_zero()) continue;
      auto [z1, z2] = pair_kernel(E[s][s], E[s][j]);
      column_op(j, s, z1, z2);
    }
  }
  // clear the subdiagonal of the top block using the diagonal columns
  for (int s = l1 - 2; s >= 0; --s)
    for (int i = s + 1; i < l1; ++i) {
      if (E[i][s].is_zero()) continue;
      // E[i][i] v2 + E[i][s] v1 = 0 with v1 nonzero
      auto [v2, v1] = pair_kernel(E[i][i], E[i][s]);
      // col_s := col_i * v2 + col_s * v1 zeroes the (i, s) entry
      column_op(s, i, v2, v1);
      if (E[s][s].is_zero())
        throw AmbientError("trapezoidal_form: pivot vanished");
    }
  out.gauss_matrix = E;
  out.gauss_multiplier = Z;

  // Lemma-4 multipliers with certified degree bounds, one kernel per column
  const int n = amb.n;
  const int d = b.degree_bound();
  out.multiplier.assign(l1, std::vector<Element>(l1, Element::zero(amb)));
  for (int r = 0; r < l1; ++r) {
    std::vector<int> rows_sel;
    for (int i = 0; i < l1; ++i)
      if (i != r) rows_sel.push_back(out.row_order[i]);
    ShiftedMatrix sub = b.submatrix(rows_sel, out.column_choice);
    DependenceQuery q;
    q.degree_cap = static_cast<long>(2 * n + 3) * b.cols() * d;
    Element z = graded_kernel(sub, q);
    for (int j = 0; j < l1; ++j) out.multiplier[j][r] = z.component(j);
  }

  // e = sigma(b') * multiplier over all k rows
  out.eliminated.assign(k, std::vector<Element>(l1, Element::zero(amb)));
  for (int i = 0; i < k; ++i)
    for (int r = 0; r < l1; ++r) {
      Element acc = Element::zero(amb);
      for (int j = 0; j < l1; ++j)
        acc = acc +
              multiply(b.at(out.row_order[i], out.column_choice[j]),
                       out.multiplier[j][r]);
      out.eliminated[i][r] = acc;
    }
  for (int r = 0; r < l1; ++r) {
    if (out.eliminated[r][r].is_zero())
      throw AmbientError("trapezoidal_form: diagonal entry vanished");
    for (int i = 0; i < l1; ++i)
      if (i != r && !out.eliminated[i][r].is_zero())
        throw AmbientError("trapezoidal_form: top block is not diagonal");
    for (int i = 0; i < k; ++i)
      if (!out.eliminated[i][r].is_zero() &&
          ord_or_max(out.eliminated[i][r]) < ord_or_max(out.eliminated[r][r]))
        throw AmbientError("trapezoidal_form: ord profile violated");
  }
  return out;
}

SolveOutcome solve_system(const ShiftedMatrix& b, const Element& u,
                          std::optional<long> degree_cap) {
  const int k = b.rows();
  const int l = b.cols();
  const int n = b.scalar_ambient().n;
  const int d = b.degree_bound();
  const long cap =
      degree_cap.value_or(4L * (2 * n + 3) * std::max(l, 1) * d);

  if (u.ambient().l != l || u.ambient().kind != Algebra::homogenized ||
      u.ambient().n != n)
    throw AmbientError("solve_system: right-hand side ambient mismatch");

  // shift compatibility: nonzero u_j homogeneous of degree -d'_j + rho
  std::optional<long> rho;
  for (int j = 0; j < l; ++j) {
    Element uj = u.component(j);
    if (uj.is_zero()) continue;
    auto deg = uj.homogeneous_degree();
    if (!deg)
      throw AmbientError("solve_system: right-hand side is not homogeneous");
    long r = *deg + b.col_shift(j);
    if (rho && *rho != r)
      throw AmbientError("solve_system: right-hand side violates the shifts");
    rho = r;
  }

  const bool xn_free = !b.depends_on_xn() && !u.depends_on_x(n - 1);
  Ambient scalar_amb = b.scalar_ambient();

  auto assemble_layer = [&](long s, bool restrict_xn)
      -> std::tuple<BlockLayout, std::vector<linalg::SparseRow>,
                    linalg::MonomialTable> {
    std::vector<long> degrees(k);
    for (int i = 0; i < k; ++i) degrees[i] = s - b.row_shift(i);
    BlockLayout lay = make_layout(degrees, n, restrict_xn);
    linalg::MonomialTable eq_table;
    auto rows = assemble(b, lay, /*left=*/true, eq_table);
    return {std::move(lay), std::move(rows), std::move(eq_table)};
  };

  // particular solution: the single compatible layer deg Z_i = rho - d_i
  Element particular = Element::zero(Ambient{Algebra::homogenized, n, k});
  if (rho) {
    auto [lay, rows, eq_table] = assemble_layer(*rho, xn_free);
    // register right-hand side monomials as equations too
    std::vector<Rational> rhs;
    for (const auto& t : u.terms()) eq_table.id(t.monomial);
    rhs.assign(eq_table.size(), Rational(0));
    rows.resize(eq_table.size());
    for (const auto& t : u.terms())
      rhs[*eq_table.find(t.monomial)] = t.coefficient;
    auto sol = linalg::solve(rows, rhs, lay.total);
    if (!sol) {
      Unsolvable uns;
      uns.layer = *rho;
      uns.reason =
          "the unique degree-compatible F-linear layer is inconsistent";
      return uns;
    }
    linalg::SparseRow sparse;
    for (int c = 0; c < lay.total; ++c)
      if ((*sol)[c] != 0) sparse.emplace_back(c, (*sol)[c]);
    particular = layout_element(lay, sparse, scalar_amb, k);
  } else if (!u.is_zero()) {
    Unsolvable uns;
    uns.layer = 0;
    uns.reason = "no compatible layer";
    return uns;
  }

  // kernel generators, layer by layer up to the cap
  std::vector<std::pair<Element, long>> gens;  // (generator, internal degree)
  long smin = std::numeric_limits<long>::max();
  for (int i = 0; i < k; ++i) smin = std::min(smin, (long)b.row_shift(i));
  for (long s = smin; s <= cap; ++s) {
    auto [lay, rows, eq_table] = assemble_layer(s, xn_free);
    if (lay.total == 0) continue;
    auto kernel = linalg::nullspace(rows, lay.total);
    if (kernel.empty()) continue;
    // span of the already-found generators inside this layer
    linalg::MonomialTable span_table;
    linalg::Rref span;
    for (const auto& [g, sg] : gens) {
      if (sg > s) continue;
      linalg::for_each_monomial(
          n, 1, s - sg, /*with_x0=*/true, [&](const Monomial& m) {
            Element prod = multiply(Element::term(scalar_amb, m, 1), g);
            span.insert(linalg::element_row(prod, span_table));
          });
    }
    for (const auto& vec : kernel) {
      Element z = layout_element(lay, vec, scalar_amb, k);
      auto row = linalg::element_row(z, span_table);
      if (span.member(row)) continue;
      span.insert(row);
      gens.emplace_back(std::move(z), s);
    }
  }

  SolutionSet result;
  result.particular = particular;
  for (auto& [g, sg] : gens) result.kernel_generators.push_back(g);
  result.certified_degree = cap;
  auto ordu = u.x0_order();
  auto ordz = particular.x0_order();
  if (ordu && ordz && *ordz < *ordu)
    result.ord_deficit = static_cast<int>(*ordu - *ordz);
  return result;
}

LinearAutomorphism::LinearAutomorphism(std::vector<Element> x_images,
                                       std::vector<Element> d_images)
    : x_images_(std::move(x_images)), d_images_(std::move(d_images)) {
  if (x_images_.empty() || x_images_.size() != d_images_.size())
    throw AmbientError("LinearAutomorphism: need images for every generator");
  amb_ = x_images_.front().ambient();
  if (!preserves_relations())
    throw AmbientError("LinearAutomorphism: images violate the relations");
}

bool LinearAutomorphism::preserves_relations() const {
  const int n = amb_.n;
  Element x0sq = Element::x0(amb_, 2);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      Element dx = multiply(d_images_[v], x_images_[w]) -
                   multiply(x_images_[w], d_images_[v]);
      if (v == w ? !(dx == x0sq) : !dx.is_zero()) return false;
      if (!(multiply(x_images_[v], x_images_[w]) -
            multiply(x_images_[w], x_images_[v]))
               .is_zero())
        return false;
      if (!(multiply(d_images_[v], d_images_[w]) -
            multiply(d_images_[w], d_images_[v]))
               .is_zero())
        return false;
    }
  return true;
}

Element LinearAutomorphism::apply(const Element& h) const {
  require_same_ambient(h.ambient(), amb_, "LinearAutomorphism::apply");
  Element out = Element::zero(amb_);
  for (const auto& t : h.terms()) {
    Element prod = Element::constant(amb_, t.coefficient);
    if (t.monomial.x0 > 0)
      prod = multiply(prod, Element::x0(amb_, t.monomial.x0));
    for (int v = 0; v < amb_.n; ++v)
      for (int e = 0; e < t.monomial.x[v]; ++e)
        prod = multiply(prod, x_images_[v]);
    for (int v = 0; v < amb_.n; ++v)
      for (int e = 0; e < t.monomial.d[v]; ++e)
        prod = multiply(prod, d_images_[v]);
    out = out + prod;
  }
  return out;
}

LinearAutomorphism generic_automorphism(const Element& h, std::uint64_t seed) {
  if (h.is_zero() || h.ambient().l != 1 ||
      h.ambient().kind != Algebra::homogenized)
    throw AmbientError("generic_automorphism: need a nonzero hA scalar");
  if (h.x0_order() != 0)
    throw AmbientError("generic_automorphism: ord h must be zero");
  const Ambient amb = h.ambient();
  const int n = amb.n;
  const bool fix_xn = !h.depends_on_x(n - 1);
  const long target = fix_xn ? h.d_variable_degree(n - 1) : *h.degree();

  SplitMix64 rng(seed);
  long bound = 3;
  for (int attempt = 0; attempt < 8; ++attempt, bound *= 2) {
    // per-variable SL2 blocks: X_i -> b1 X_i + b2 D_i, D_i -> b3 X_i + b4 D_i
    std::vector<std::array<Rational, 4>> sl2(n);
    for (int i = 0; i < n; ++i) {
      if (fix_xn && i == n - 1) {
        sl2[i] = {Rational(1), Rational(0), Rational(0), Rational(1)};
        continue;
      }
      Rational b1(rng.range(-bound, bound)), b2(rng.range(-bound, bound)),
          b3(rng.range(-bound, bound));
      if (b1 == 0) b1 = 1;
      Rational b4 = (1 + b2 * b3) / b1;
      sl2[i] = {b1, b2, b3, b4};
    }
    // mixing block: X_i -> sum g1[i][j] X_j, D_i -> sum g4[i][j] D_j with
    // g4 = inverse transpose of g1
    const int mix = fix_xn ? n - 1 : n;
    std::vector<std::vector<Rational>> g1(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) g1[i][i] = 1;
    for (int i = 0; i < mix; ++i)
      for (int j = 0; j < mix; ++j) g1[i][j] = Rational(rng.range(-bound, bound));
    // invert the transpose by Gauss-Jordan
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = g1[j][i];
    for (int i = 0; i < n; ++i) m[i][n + i] = 1;
    bool singular = false;
    for (int c = 0; c < n && !singular; ++c) {
      int p = -1;
      for (int r = c; r < n; ++r)
        if (m[r][c] != 0) {
          p = r;
          break;
        }
      if (p < 0) {
        singular = true;
        break;
      }
      std::swap(m[p], m[c]);
      Rational inv = 1 / m[c][c];
      for (int j = 0; j < 2 * n; ++j) m[c][j] *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == c || m[r][c] == 0) continue;
        Rational f = m[r][c];
        for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
      }
    }
    if (singular) continue;
    std::vector<std::vector<Rational>> g4(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g4[i][j] = m[i][n + j];

    std::vector<Element> xi, di;
    for (int i = 0; i < n; ++i) {
      Element xim = Element::zero(amb), dim = Element::zero(amb);
      for (int j = 0; j < n; ++j) {
        xim = xim + Element::x(amb, j).scaled(sl2[i][0] * g1[i][j]) +
              Element::d(amb, j).scaled(sl2[i][1] * g4[i][j]);
        dim = dim + Element::x(amb, j).scaled(sl2[i][2] * g1[i][j]) +
              Element::d(amb, j).scaled(sl2[i][3] * g4[i][j]);
      }
      xi.push_back(std::move(xim));
      di.push_back(std::move(dim));
    }
    LinearAutomorphism alpha(std::move(xi), std::move(di));
    if (alpha.apply(h).d_variable_degree(n - 1) == target) return alpha;
  }
  throw ResourceLimitError(
      "generic_automorphism: retries exhausted, reseed and try again");
}

}  // namespace weyl
