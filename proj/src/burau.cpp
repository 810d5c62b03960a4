#include "braidwo/burau.hpp"

#include <stdexcept>

namespace braidwo {

Laurent add(const Laurent& a, const Laurent& b) {
  Laurent r = a;
  for (const auto& [deg, coeff] : b.c) {
    auto it = r.c.find(deg);
    if (it == r.c.end()) {
      r.c[deg] = coeff;
    } else {
      it->second += coeff;
      if (sgn(it->second) == 0) r.c.erase(it);
    }
  }
  return r;
}

Laurent mul(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [da, ca] : a.c)
    for (const auto& [db, cb] : b.c) {
      BigNat& slot = r.c[da + db];
      slot += ca * cb;
    }
  for (auto it = r.c.begin(); it != r.c.end();)
    it = sgn(it->second) == 0 ? r.c.erase(it) : std::next(it);
  return r;
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return Mat2{add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)),
              add(mul(x.c, y.a), mul(x.d, y.c)), add(mul(x.c, y.b), mul(x.d, y.d))};
}

Mat2 mat_identity() {
  return Mat2{Laurent::term(0, 1), Laurent{}, Laurent{}, Laurent::term(0, 1)};
}

namespace {

Mat2 letter_matrix(int g) {
  switch (g) {
    case 1:
      return Mat2{Laurent::term(1, -1), Laurent::term(0, 1), Laurent{}, Laurent::term(0, 1)};
    case -1:
      return Mat2{Laurent::term(-1, -1), Laurent::term(-1, 1), Laurent{}, Laurent::term(0, 1)};
    case 2:
      return Mat2{Laurent::term(0, 1), Laurent{}, Laurent::term(1, 1), Laurent::term(1, -1)};
    case -2:
      return Mat2{Laurent::term(0, 1), Laurent{}, Laurent::term(0, 1), Laurent::term(-1, -1)};
    default:
      throw std::invalid_argument("burau: letter out of range");
  }
}

}  // namespace

Mat2 burau(const std::vector<int>& word) {
  Mat2 m = mat_identity();
  for (int g : word) m = mat_mul(m, letter_matrix(g));
  return m;
}

bool braid_eq_b3(const std::vector<int>& u, const std::vector<int>& v) {
  return burau(u) == burau(v);
}

}  // namespace braidwo
