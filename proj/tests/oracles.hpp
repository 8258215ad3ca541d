#pragma once

// Test-only reference computations. None of these call into the code paths
// they are used to check.

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Rational = boost::rational<std::int64_t>;

/// Continued fraction 1/(a1 + 1/(a2 + ... + 1/ak)) using boost::rational,
/// nothing else. nullopt if a reciprocal of zero is taken.
inline std::optional<Rational> conway_fraction(const std::vector<std::int64_t>& a) {
  Rational x(a.back());
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    if (x.numerator() == 0) return std::nullopt;
    x = Rational(a[i]) + Rational(1) / x;
  }
  if (x.numerator() == 0) return std::nullopt;
  return Rational(1) / x;
}

inline std::int64_t family_p(std::int64_t n) { return n * n * n * n - 2 * n * n * n + 2 * n * n - 2 * n + 1; }
inline std::int64_t family_q(std::int64_t n) { return n * n * n - 2 * n * n + n - 1; }

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

/// Brute-force mirror equivalence of S(p,q): -q is in {q, q^{-1}} mod p,
/// found by scanning residues.
inline bool lens_mirror_equivalent(std::int64_t p, std::int64_t q) {
  if (p <= 2) return true;
  std::int64_t target = mod(-q, p);
  if (target == mod(q, p)) return true;
  for (std::int64_t r = 1; r < p; ++r) {
    if (mod(q * r, p) == 1) return r == target;
  }
  return false;
}

}  // namespace oracle
