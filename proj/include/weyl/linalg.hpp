#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "weyl/element.hpp"

namespace weyl::linalg {

// strictly ascending column indices, nonzero values
using SparseRow = std::vector<std::pair<int, Rational>>;

SparseRow axpy(const SparseRow& r, const Rational& c, const SparseRow& p);

// Incremental reduced row echelon form over the rationals. Rows inserted one
// at a time; the stored basis stays fully back-substituted with monic pivots,
// so spans, memberships and intersections are all deterministic.
class Rref {
 public:
  // pivot column if the row enlarged the span, nullopt if it reduced to zero
  std::optional<int> insert(SparseRow row);
  SparseRow reduce(SparseRow row) const;
  bool member(const SparseRow& row) const { return reduce(row).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool has_pivot(int col) const { return pivot_.count(col) > 0; }
  // pivot rows sorted by pivot column
  std::vector<SparseRow> basis() const;
  const std::map<int, int>& pivots() const { return pivot_; }
  const SparseRow& row_for_pivot(int col) const {
    return rows_[pivot_.at(col)];
  }

 private:
  std::vector<SparseRow> rows_;
  std::map<int, int> pivot_;  // pivot column -> index into rows_
};

// Basis of {x : A x = 0} for A given row-wise over ncols unknowns.
// Deterministic: one kernel vector per free column, ascending.
std::vector<SparseRow> nullspace(const std::vector<SparseRow>& rows,
                                 int ncols);

// One solution of A x = b, free unknowns set to zero; nullopt if
// inconsistent.
std::optional<std::vector<Rational>> solve(const std::vector<SparseRow>& rows,
                                           const std::vector<Rational>& rhs,
                                           int ncols);

// Dense view of a sparse vector.
std::vector<Rational> densify(const SparseRow& row, int ncols);

// Bidirectional monomial <-> column index table with a fixed insertion
// order; used to lay elements out as coefficient rows.
class MonomialTable {
 public:
  int id(const Monomial& m);
  std::optional<int> find(const Monomial& m) const;
  const Monomial& monomial(int id) const { return monomials_[id]; }
  int size() const { return static_cast<int>(monomials_.size()); }

 private:
  std::unordered_map<Monomial, int, MonomialHash> index_;
  std::vector<Monomial> monomials_;
};

// All monomials of the given exact total degree over positions 0..l-1,
// emitted in a fixed deterministic order. with_x0 enables the homogenizing
// exponent; skip_xn drops monomials containing X_n.
void for_each_monomial(int n, int l, long degree, bool with_x0,
                       const std::function<void(const Monomial&)>& fn,
                       bool skip_xn = false);

// dimension of the degree-m homogeneous piece of the rank-l free module
// (C(m+2n, 2n) per position with X0, C(m+2n-1, 2n-1) without)
long free_piece_dimension(int n, int l, long m, bool with_x0);

SparseRow element_row(const Element& e, MonomialTable& table);
Element row_element(const SparseRow& row, const MonomialTable& table,
                    const Ambient& amb);

}  // namespace weyl::linalg
