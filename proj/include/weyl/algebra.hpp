#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

// Which multiplication rule the ambient ring uses.
//   weyl:         F[X1..Xn, D1..Dn],      D_v X_v - X_v D_v = 1
//   homogenized:  F[X0, X1..Xn, D1..Dn],  D_v X_v - X_v D_v = X0^2, X0 central
//   commutative:  F[X1..Xn, D1..Dn] with all generators commuting; the
//                 associated graded ring of the Weyl algebra
enum class Algebra { weyl, homogenized, commutative };

struct Ambient {
  Algebra kind = Algebra::weyl;
  int n = 1;  // number of X/D pairs
  int l = 1;  // rank of the free module; scalars are l = 1

  friend bool operator==(const Ambient&, const Ambient&) = default;

  bool uses_x0() const { return kind == Algebra::homogenized; }
  Ambient scalar() const { return {kind, n, 1}; }
  Ambient homogenized_twin() const { return {Algebra::homogenized, n, l}; }
  Ambient affine_twin() const { return {Algebra::weyl, n, l}; }
  Ambient commutative_twin() const { return {Algebra::commutative, n, l}; }
};

std::string to_string(const Ambient& a);

struct AmbientError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a configured degree/size budget is exhausted. Never silently
// truncates a result.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require_same_ambient(const Ambient& a, const Ambient& b,
                                 const char* where) {
  if (!(a == b))
    throw AmbientError(std::string(where) + ": ambient mismatch (" +
                       to_string(a) + " vs " + to_string(b) + ")");
}

}  // namespace weyl
