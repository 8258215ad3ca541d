#pragma once

// Arbitrary-precision integer type and the handful of number-theoretic
// helpers shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dehn {

using Integer = boost::multiprecision::cpp_int;

/// Thrown for malformed user input (bad numbers, bad documents, bad ranges).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a mathematical precondition of an operation is violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Least non-negative residue of a modulo m (m > 0).
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

struct ExtendedGcd {
  Integer g, x, y;  // a*x + b*y = g, g >= 0
};

inline ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

/// Inverse of a modulo m, if gcd(a, m) = 1.
inline std::optional<Integer> mod_inverse(const Integer& a, const Integer& m) {
  if (m == 1) return Integer(0);
  auto [g, x, y] = extended_gcd(mod(a, m), m);
  if (g != 1) return std::nullopt;
  return mod(x, m);
}

/// Parses an optionally signed decimal integer; the whole string must match.
inline Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  std::size_t j = text.size();
  while (j > i && (text[j - 1] == ' ' || text[j - 1] == '\t')) --j;
  std::string_view s = text.substr(i, j - i);
  std::size_t k = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) k = 1;
  if (k == s.size()) throw InputError("not an integer: '" + std::string(text) + "'");
  for (std::size_t c = k; c < s.size(); ++c) {
    if (s[c] < '0' || s[c] > '9') {
      throw InputError("not an integer: '" + std::string(text) + "'");
    }
  }
  return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
}

inline std::string to_string(const Integer& x) { return x.str(); }

inline bool fits_int64(const Integer& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace dehn
