#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "weyl/element.hpp"

namespace weyl {

enum class OrderBase { deglex, degrevlex };

// term-over-position compares the (i, j) part first; position-over-term
// compares positions first
enum class ModuleMode { top, pot };

// An admissible linear order on module monomials: a base order on the
// combined (i, j) exponent vector, a variable precedence, and a position
// rule. The X0 exponent never enters the base comparison; it is the final
// tie-break, which is exactly the induced order on homogenized monomials
// (the plain order is its restriction to x0 = 0).
class MonomialOrder {
 public:
  // precedence lists variables from least to greatest using ids
  // 0..n-1 = X1..Xn, n..2n-1 = D1..Dn; empty means the default
  // X1 < ... < Xn < D1 < ... < Dn.
  // positions_desc lists module positions from greatest to least (0-based);
  // empty means position 0 greatest, then 1, 2, ...
  MonomialOrder(OrderBase base, int n, int l,
                ModuleMode mode = ModuleMode::top,
                std::vector<int> precedence = {},
                std::vector<int> positions_desc = {});

  static MonomialOrder deglex(int n, int l, ModuleMode mode = ModuleMode::top) {
    return MonomialOrder(OrderBase::deglex, n, l, mode);
  }
  static MonomialOrder degrevlex(int n, int l,
                                 ModuleMode mode = ModuleMode::top) {
    return MonomialOrder(OrderBase::degrevlex, n, l, mode);
  }

  OrderBase base() const { return base_; }
  ModuleMode module_mode() const { return mode_; }
  int n() const { return n_; }
  int l() const { return l_; }
  bool is_induced() const { return induced_; }
  const std::vector<int>& precedence() const { return precedence_; }
  const std::vector<int>& positions_desc() const { return positions_desc_; }

  // the induced order on homogenized monomials (X0 least)
  MonomialOrder induced() const;
  // same base data over a different module mode / rank
  MonomialOrder with_module_mode(ModuleMode m) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

 private:
  OrderBase base_;
  ModuleMode mode_;
  int n_, l_;
  bool induced_ = false;
  std::vector<int> precedence_;      // variable ids, least first
  std::vector<int> positions_desc_;  // positions, greatest first
  std::vector<int> pos_rank_;        // pos -> rank, higher = greater
};

// Leading term under the order; empty for the zero element (Hdt(0) = 0).
std::optional<Term> hdt(const Element& f, const MonomialOrder& order);

// o(f1) < o(f2) in the element sense; the zero element is least.
bool element_less(const Element& f1, const Element& f2,
                  const MonomialOrder& order);

}  // namespace weyl
