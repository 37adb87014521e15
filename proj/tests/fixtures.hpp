#pragma once

#include <cmath>

#include "eorad/matfun.hpp"
#include "eorad/operator_tuple.hpp"

namespace eorad::testing {

inline const cdouble kI{0.0, 1.0};

// Jordan nilpotent block: ones on the superdiagonal.
inline CMatrix jordan(int n) {
  CMatrix j = CMatrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) j(i, i + 1) = 1.0;
  return j;
}

inline CMatrix J() { return jordan(2); }
inline CMatrix I2() { return CMatrix::Identity(2, 2); }

inline CMatrix diag(cdouble a, cdouble b) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

inline CMatrix mat2(cdouble a, cdouble b, cdouble c, cdouble d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline OperatorTuple pauli() {
  return {mat2(0, 1, 1, 0), mat2(0, -kI, kI, 0), mat2(1, 0, 0, -1)};
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace eorad::testing
