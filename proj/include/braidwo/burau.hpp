#ifndef BRAIDWO_BURAU_HPP
#define BRAIDWO_BURAU_HPP

#include <map>
#include <vector>

#include "braidwo/bignat.hpp"

namespace braidwo {

/// Laurent polynomial in one variable with integer coefficients.
struct Laurent {
  std::map<long, BigNat> c;  // degree -> coefficient, nonzero entries only

  static Laurent term(long deg, long coeff) {
    Laurent p;
    if (coeff) p.c[deg] = coeff;
    return p;
  }
  bool operator==(const Laurent& o) const { return c == o.c; }
};

Laurent add(const Laurent& a, const Laurent& b);
Laurent mul(const Laurent& a, const Laurent& b);

/// 2x2 matrix of Laurent polynomials.
struct Mat2 {
  Laurent a, b, c, d;
  bool operator==(const Mat2& o) const = default;
};

Mat2 mat_mul(const Mat2& x, const Mat2& y);
Mat2 mat_identity();

/// Reduced Burau image of a signed 3-braid word (letters +-1, +-2).
/// Faithful on B_3, so matrix equality decides braid equality.
Mat2 burau(const std::vector<int>& word);

/// Equality of two signed 3-braid words as elements of the group B_3.
bool braid_eq_b3(const std::vector<int>& u, const std::vector<int>& v);

}  // namespace braidwo

#endif
