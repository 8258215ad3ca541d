#pragma once

// Slopes on a torus: unoriented primitive classes p/q in Q u {1/0}, their
// geometric intersection number, and the action of unimodular matrices.

#include "dehn/integer.hpp"

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace dehn {

/// A reduced pair p/q with q > 0, or exactly 1/0 for the meridian.
class Slope {
 public:
  /// Canonical representative of the class of (p, q); (p,q) and (-p,-q)
  /// name the same slope. Throws DomainError on (0, 0).
  static Slope normalize(Integer p, Integer q) {
    if (p == 0 && q == 0) throw DomainError("slope 0/0 is not a slope");
    if (q == 0) return Slope(1, 0);
    Integer g = gcd(p, q);
    p /= g;
    q /= g;
    if (q < 0) {
      p = -p;
      q = -q;
    }
    return Slope(std::move(p), std::move(q));
  }

  static Slope meridian() { return Slope(1, 0); }
  static Slope longitude() { return Slope(0, 1); }
  static Slope integral(Integer n) { return Slope(std::move(n), 1); }

  /// Parses "p/q" or a bare integer "p" (meaning p/1).
  static Slope parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return normalize(parse_integer(text), 1);
    Integer p = parse_integer(text.substr(0, slash));
    Integer q = parse_integer(text.substr(slash + 1));
    if (p == 0 && q == 0) throw InputError("slope 0/0 is not a slope");
    return normalize(std::move(p), std::move(q));
  }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }

  bool is_meridian() const { return q_ == 0; }
  bool is_integral() const { return q_ == 1; }

  /// The slope -p/q.
  Slope negated() const { return normalize(-p_, q_); }

  std::string str() const { return p_.str() + "/" + q_.str(); }

  friend bool operator==(const Slope&, const Slope&) = default;

  /// Orders by denominator first so 1/0 sorts before everything else.
  friend bool operator<(const Slope& a, const Slope& b) {
    if (a.q_ != b.q_) return a.q_ < b.q_;
    return a.p_ < b.p_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Slope& s) {
    return os << s.str();
  }

 private:
  Slope(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {}

  Integer p_;
  Integer q_;
};

/// Minimal geometric intersection number |p1 q2 - q1 p2|.
inline Integer slope_distance(const Slope& a, const Slope& b) {
  return abs(a.p() * b.q() - a.q() * b.p());
}

/// Integral 2x2 matrix (a b; c d) acting on slope coordinates (p, q) as a
/// column vector. Only |ad - bc| = 1 is enforced at construction; use
/// is_involution() to check that it squares to +-Id.
class SlopeInvolution {
 public:
  SlopeInvolution(Integer a, Integer b, Integer c, Integer d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (abs(determinant()) != 1) {
      throw DomainError("slope action (" + a_.str() + "," + b_.str() + ";" + c_.str() +
                        "," + d_.str() + ") is not unimodular");
    }
  }

  static SlopeInvolution identity() { return {1, 0, 0, 1}; }
  /// Exchanges the coordinate axes 1/0 and 0/1.
  static SlopeInvolution swap() { return {0, 1, 1, 0}; }

  /// Parses "a,b,c,d" (row-major).
  static SlopeInvolution parse(std::string_view text) {
    std::vector<Integer> v;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto comma = text.find(',', start);
      if (comma == std::string_view::npos) comma = text.size();
      v.push_back(parse_integer(text.substr(start, comma - start)));
      start = comma + 1;
    }
    if (v.size() != 4) throw InputError("expected four comma-separated entries a,b,c,d");
    try {
      return {v[0], v[1], v[2], v[3]};
    } catch (const DomainError& e) {
      throw InputError(e.what());
    }
  }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  Integer determinant() const { return a_ * d_ - b_ * c_; }

  bool is_involution() const {
    Integer a2 = a_ * a_ + b_ * c_;
    Integer b2 = a_ * b_ + b_ * d_;
    Integer c2 = c_ * a_ + d_ * c_;
    Integer d2 = c_ * b_ + d_ * d_;
    return b2 == 0 && c2 == 0 && a2 == d2 && abs(a2) == 1;
  }

  std::string str() const {
    return "(" + a_.str() + "," + b_.str() + ";" + c_.str() + "," + d_.str() + ")";
  }

 private:
  Integer a_, b_, c_, d_;
};

inline Slope apply_involution(const SlopeInvolution& inv, const Slope& s) {
  return Slope::normalize(inv.a() * s.p() + inv.b() * s.q(), inv.c() * s.p() + inv.d() * s.q());
}

/// Every canonical slope with |p|, |q| <= bound, in Slope ordering.
inline std::vector<Slope> canonical_slopes(const Integer& bound) {
  if (bound < 1) throw DomainError("slope enumeration bound must be >= 1");
  std::vector<Slope> out{Slope::meridian()};
  for (Integer q = 1; q <= bound; ++q) {
    for (Integer p = -bound; p <= bound; ++p) {
      if (gcd(p, q) == 1) out.push_back(Slope::normalize(p, q));
    }
  }
  return out;
}

/// Slopes with |p|, |q| <= bound whose image under inv is the same
/// unoriented class.
inline std::vector<Slope> fixed_slopes(const SlopeInvolution& inv, const Integer& bound) {
  std::vector<Slope> out;
  for (auto& s : canonical_slopes(bound)) {
    if (apply_involution(inv, s) == s) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace dehn
