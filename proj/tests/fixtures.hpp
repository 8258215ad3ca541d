#pragma once

#include "dehn/integer_matrix.hpp"

namespace fixture {

/// The 5x6 presentation matrix exactly as printed for the homology lemma,
/// columns (a, b, c, d, e, x). Its (b, b) entry is n; with this sign the
/// cokernel is NOT Z + Z/(n^3 - n^2 + n - 1) (e.g. it is Z at n = 2).
inline dehn::IntegerMatrix printed_lemma_matrix(long n) {
  return {{n, -1, 0, 0, 0, 1},
          {-1, n, 1, 0, 0, 0},
          {0, 1, -1, -1, 0, -1},
          {0, 0, -1, -n, 1, 0},
          {0, 0, 0, 1, n, 1}};
}

/// Same matrix with the (b, b) entry -n, matching the surgery coefficients
/// (n, -n, -1, -n, n) of the chain. This one presents Z + Z/|(n-1)(n^2+1)|.
inline dehn::IntegerMatrix corrected_lemma_matrix(long n) {
  auto m = printed_lemma_matrix(n);
  m(1, 1) = -n;
  return m;
}

}  // namespace fixture
