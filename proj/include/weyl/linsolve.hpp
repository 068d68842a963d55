#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "weyl/graded.hpp"

namespace weyl {

// A k x l matrix of homogeneous hA scalars graded by integer shifts:
// every nonzero entry satisfies deg b_ij = row_shift_i - col_shift_j,
// and the least column shift is zero.
class ShiftedMatrix {
 public:
  ShiftedMatrix(std::vector<std::vector<Element>> entries,
                std::vector<int> row_shifts, std::vector<int> col_shifts);

  // derive shifts from the entry degrees; shifts of rows/columns that are
  // not connected to the rest through nonzero entries default to zero
  static ShiftedMatrix infer(std::vector<std::vector<Element>> entries,
                             Ambient scalar_ambient);

  int rows() const { return static_cast<int>(entries_.size()); }
  int cols() const { return ncols_; }
  const Element& at(int i, int j) const { return entries_[i][j]; }
  int row_shift(int i) const { return row_shifts_[i]; }
  int col_shift(int j) const { return col_shifts_[j]; }
  const std::vector<int>& row_shifts() const { return row_shifts_; }
  const std::vector<int>& col_shifts() const { return col_shifts_; }
  const Ambient& scalar_ambient() const { return amb_; }

  // least d with every entry degree < d (at least 1)
  int degree_bound() const;
  bool depends_on_xn() const;
  bool column_is_zero(int j) const;

  ShiftedMatrix submatrix(const std::vector<int>& row_idx,
                          const std::vector<int>& col_idx) const;

 private:
  std::vector<std::vector<Element>> entries_;
  std::vector<int> row_shifts_, col_shifts_;
  int ncols_ = 0;
  Ambient amb_;
};

struct DependenceQuery {
  std::optional<long> degree_cap;  // cap on deg z_j; default (2n+3) l d
  bool left_side = false;          // sum_j z_j b_ij = 0 instead
  bool xn_free = false;            // restrict the ansatz to X_n-free monomials
};

// Least-degree nonzero homogeneous column dependence: z with b z = 0
// (componentwise deg z_j = col_shift_j + t, scanned over ascending t).
// Empty when no dependence exists up to the cap.
std::optional<Element> find_dependence(const ShiftedMatrix& b,
                                       DependenceQuery query = {});

// Kernel vector for the square-minus-one shape k = l-1: guaranteed to exist
// with deg z_j <= (2n+3) l d; normalized so the least X0-order is zero.
Element graded_kernel(const ShiftedMatrix& b, DependenceQuery query = {});

struct RankResult {
  int rank = 0;
  std::vector<int> independent;  // column indices, ascending
};

// Rank from the right of the columns: greedy maximal subfamily with no
// nonzero homogeneous right combination vanishing, each test certified up
// to the Lemma-4 style working degree (2n+3)(s+1)d.
RankResult rank_right(const ShiftedMatrix& b);

struct TrapezoidalForm {
  int rank = 0;                     // l1
  std::vector<int> row_order;       // sigma; new row r = original row_order[r]
  std::vector<int> column_choice;   // l1 original column indices, pivot order
  std::vector<std::vector<Element>> multiplier;   // l1 x l1, degree-bounded
  std::vector<std::vector<Element>> eliminated;   // k x l1, = sigma(b') mult
  // the Gauss-pass byproducts, kept for cross-checks
  std::vector<std::vector<Element>> gauss_multiplier;
  std::vector<std::vector<Element>> gauss_matrix;
};

// Lemma-9 style reduction to trapezoidal form: a right multiplier making the
// top rank x rank block diagonal with nonzero entries, the row permutation
// chosen by least X0-order pivots, and ord e_ij >= ord e'_jj per column.
TrapezoidalForm trapezoidal_form(const ShiftedMatrix& b);

struct SolutionSet {
  Element particular;                      // Z with Z b = u, a k-vector
  std::vector<Element> kernel_generators;  // generate all solutions of Zb = 0
  long certified_degree = 0;  // kernel completeness holds for internal
                              // degrees s <= this (deg Z_i = s - d_i)
  int ord_deficit = 0;        // nu with ord particular >= ord u - nu
};

struct Unsolvable {
  long layer = 0;      // internal degree where the one compatible layer fails
  std::string reason;  // dimension certificate description
};

using SolveOutcome = std::variant<SolutionSet, Unsolvable>;

// Z b = u over hA for homogeneous shift-compatible u (deg u_j = -d'_j + rho).
// Solvability reduces exactly to one F-linear layer, so Unsolvable is a
// proof, not a cap artifact; the kernel generators are complete for all
// internal degrees up to the cap (default 4 (2n+3) l d). When b and u do not
// depend on X_n, neither do the outputs.
SolveOutcome solve_system(const ShiftedMatrix& b, const Element& u,
                          std::optional<long> degree_cap = {});

// A linear change of generators of hA fixing X0 and preserving the defining
// relations; images are degree-one homogeneous elements.
class LinearAutomorphism {
 public:
  LinearAutomorphism(std::vector<Element> x_images,
                     std::vector<Element> d_images);

  const Element& x_image(int v) const { return x_images_[v]; }
  const Element& d_image(int v) const { return d_images_[v]; }
  Element apply(const Element& h) const;
  bool preserves_relations() const;

 private:
  std::vector<Element> x_images_, d_images_;
  Ambient amb_;
};

// Noether-normalization style generic automorphism: ensures the image of h
// has full D_n-degree. Requires ord h = 0. When h does not depend on X_n the
// variant fixing X_n (and sending D_n to itself) is produced, preserving
// X_n-freeness and the D_n-degree. Coefficients are drawn from {-B..B},
// B doubling on failure, at most 8 attempts.
LinearAutomorphism generic_automorphism(const Element& h, std::uint64_t seed);

}  // namespace weyl
