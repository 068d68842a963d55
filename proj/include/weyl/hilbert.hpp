#pragma once

#include <optional>
#include <span>
#include <vector>

#include "weyl/graded.hpp"

namespace weyl {

enum class HilbertSource {
  affine,             // H(M, m) = dim M_m of the filtered quotient
  homogenized,        // H(hM, m), equal to the affine values
  commutative_shadow, // through the monomial shadow of the homogenization
  graded_associated,  // H(gr M, m), the first difference of the affine values
};

struct HilbertData {
  HilbertSource source = HilbertSource::affine;
  int n = 1;
  int l = 1;
  std::vector<long> values;  // H(m) for m = 0..m_max
};

struct HilbertPolynomial {
  std::vector<Rational> coefficients;  // constant term first
  int stabilization_index = 0;  // least m0 with H(m) = P(m) for all m >= m0
};

// Exact Hilbert function of the quotient by the module generated by the
// given affine vectors, computed through the X0-saturated homogenization.
// All four sources agree degreewise with the filtered quotient (the graded
// source gives its first difference).
HilbertData hilbert_function(std::span<const Element> generators, Ambient amb,
                             HilbertSource source, int m_max,
                             const MonomialOrder& order,
                             CompletionLimits limits = {});

// Leading monomials of a complete homogeneous basis; they generate the
// commutative monomial shadow.
std::vector<Monomial> c_shadow(const JanetBasis& basis);

// number of degree-m monomials of the rank-l free module divisible by one of
// the leading monomials (2n+1 variables with X0, 2n without)
long monomial_module_piece_dim(std::span<const Monomial> leads, int n, int l,
                               long m, bool with_x0);

// Newton interpolation on the stable window; the polynomial degree bound is
// 2n for the quotient sources and 2n - 1 for the associated graded one.
// Empty when no stable window exists within the tabulated values; throws
// when the table is too short to decide anything.
std::optional<HilbertPolynomial> hilbert_polynomial(const HilbertData& data);

Rational evaluate_polynomial(const std::vector<Rational>& coeffs, long m);

// ---- Macaulay constants of a monomial ideal in F[Y_0..Y_{nvars-1}] ----

struct MacaulayConstants {
  int nvars = 1;
  // b[0] >= b[1] >= ... >= b[nvars] >= b[nvars+1] = 0
  std::vector<int> b;
  bool zero_ideal = false;  // no generators: the correction sum is dropped
};

// number of standard monomials of total degree exactly m
long monomial_ideal_quotient_dim(const std::vector<std::vector<int>>& gens,
                                 int nvars, long m);
// number of standard monomials of total degree at most m; this cumulative
// count is the function the Macaulay constants describe
long monomial_ideal_quotient_cumulative(
    const std::vector<std::vector<int>>& gens, int nvars, long m);

std::vector<std::vector<int>> minimal_monomial_generators(
    std::vector<std::vector<int>> gens);

// The unique constants reproducing the cumulative Hilbert function in the
// classical binomial form for all sufficiently large m, fitted by the
// triangular coefficient recursion and verified against directly counted
// values; b[0] is the least degree past which the closed form holds
// everywhere, and minimal generator degrees never exceed it. The zero ideal
// is degenerate: its count is the plain leading binomial with no
// corrections.
MacaulayConstants macaulay_constants(std::vector<std::vector<int>> gens,
                                     int nvars);

// right-hand side of the closed form at m (binomials truncated at zero)
long macaulay_closed_form(const MacaulayConstants& c, long m);

}  // namespace weyl
