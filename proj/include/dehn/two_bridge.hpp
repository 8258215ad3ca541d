#pragma once

// Conway words, their continued fractions, Schubert normal forms of
// two-bridge links and the matching lens-space classification.

#include "dehn/integer.hpp"
#include "dehn/slope.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dehn {

/// Twist-region word C(a1, ..., ak). Zero entries are allowed; they only
/// matter if evaluation divides by zero.
class ConwayWord {
 public:
  explicit ConwayWord(std::vector<Integer> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DomainError("Conway word must be nonempty");
  }

  /// Accepts integers separated by commas and/or whitespace, optionally
  /// wrapped as "C(...)".
  static ConwayWord parse(std::string_view text) {
    std::string s(text);
    auto open = s.find('(');
    if (open != std::string::npos) {
      auto close = s.rfind(')');
      if (close == std::string::npos || close < open) throw InputError("unbalanced parentheses");
      std::string head = s.substr(0, open);
      for (char c : head) {
        if (!std::isspace(static_cast<unsigned char>(c)) && c != 'C' && c != 'c') {
          throw InputError("unexpected prefix '" + head + "'");
        }
      }
      s = s.substr(open + 1, close - open - 1);
    }
    std::vector<Integer> v;
    std::string token;
    auto flush = [&] {
      if (!token.empty()) v.push_back(parse_integer(token));
      token.clear();
    };
    for (char c : s) {
      if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else {
        token += c;
      }
    }
    flush();
    if (v.empty()) throw InputError("empty Conway word");
    return ConwayWord(std::move(v));
  }

  const std::vector<Integer>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  std::string str() const { return "C(" + join(0) + ")"; }

  /// "C(a_i, ..., a_k)" for the suffix starting at index i.
  std::string suffix_str(std::size_t i) const { return "C(" + join(i) + ")"; }

  friend bool operator==(const ConwayWord&, const ConwayWord&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ConwayWord& w) { return os << w.str(); }

 private:
  std::string join(std::size_t from) const {
    std::string out;
    for (std::size_t i = from; i < entries_.size(); ++i) {
      if (i > from) out += ",";
      out += entries_[i].str();
    }
    return out;
  }

  std::vector<Integer> entries_;
};

/// Thrown when a continued fraction takes the reciprocal of zero.
class DivisionByZero : public DomainError {
 public:
  DivisionByZero(const std::string& suffix)
      : DomainError("division by zero: " + suffix + " evaluates to 0"), suffix_(suffix) {}
  const std::string& suffix() const { return suffix_; }

 private:
  std::string suffix_;
};

/// 1/(a1 + 1/(a2 + ... + 1/ak)), evaluated exactly from the tail.
inline Slope continued_fraction_eval(const ConwayWord& w) {
  const auto& a = w.entries();
  std::size_t k = a.size();
  Integer num = a[k - 1];
  Integer den = 1;
  for (std::size_t i = k - 1; i-- > 0;) {
    if (num == 0) throw DivisionByZero(w.suffix_str(i + 1));
    Integer next = a[i] * num + den;
    den = std::move(num);
    num = std::move(next);
  }
  if (num == 0) throw DivisionByZero(w.suffix_str(0));
  return Slope::normalize(den, num);
}

/// Entrywise negation; the continued fraction changes sign.
inline ConwayWord conway_mirror(const ConwayWord& w) {
  std::vector<Integer> v;
  v.reserve(w.size());
  for (const auto& x : w.entries()) v.push_back(-x);
  return ConwayWord(std::move(v));
}

/// Schubert normal form S(p, q): p >= 1, 0 <= q < p, gcd(p, q) = 1.
class SchubertForm {
 public:
  /// Reduces q modulo p. Throws DomainError for p < 1 or gcd(p, q) != 1.
  static SchubertForm make(Integer p, const Integer& q) {
    if (p < 1) throw DomainError("Schubert form needs p >= 1, got p = " + p.str());
    Integer r = mod(q, p);
    if (gcd(p, r) != 1) {
      throw DomainError("Schubert form S(" + p.str() + "," + q.str() + ") is not coprime");
    }
    return SchubertForm(std::move(p), std::move(r));
  }

  /// S(alpha, beta mod alpha) for a fraction beta/alpha with alpha >= 1.
  static SchubertForm from_fraction(const Slope& s) {
    if (s.is_meridian()) throw DomainError("1/0 has no Schubert form");
    return make(s.q(), s.p());
  }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }

  bool is_knot() const { return p_ % 2 != 0; }

  std::string str() const { return "S(" + p_.str() + "," + q_.str() + ")"; }

  friend bool operator==(const SchubertForm&, const SchubertForm&) = default;

  friend std::ostream& operator<<(std::ostream& os, const SchubertForm& s) { return os << s.str(); }

 private:
  SchubertForm(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {}

  Integer p_;
  Integer q_;
};

/// Unoriented equivalence of two-bridge links: same p and q' = q^{+-1} mod p.
inline bool schubert_equivalent(const SchubertForm& a, const SchubertForm& b) {
  if (a.p() != b.p()) return false;
  if (a.q() == b.q()) return true;
  return mod(a.q() * b.q(), a.p()) == mod(Integer(1), a.p());
}

/// Mirror image: q -> -q mod p.
inline SchubertForm mirror(const SchubertForm& s) { return SchubertForm::make(s.p(), -s.q()); }

/// Equivalent to its own mirror. For p <= 2 always; otherwise iff q^2 = -1 mod p.
inline bool is_achiral_lens(const SchubertForm& s) {
  if (s.p() <= 2) return true;
  return mod(s.q() * s.q() + 1, s.p()) == 0;
}

inline int component_count(const SchubertForm& s) { return s.is_knot() ? 1 : 2; }

inline void require_family_index(const Integer& n) {
  if (n == 0 || n == 1) {
    throw DomainError("family index n = " + n.str() + " is degenerate (n must not be 0 or 1)");
  }
}

/// n^4 - 2n^3 + 2n^2 - 2n + 1, the order of the lens space of the family.
inline Integer family_p(const Integer& n) {
  return n * n * n * n - 2 * n * n * n + 2 * n * n - 2 * n + 1;
}

/// n^3 - 2n^2 + n - 1.
inline Integer family_q(const Integer& n) { return n * n * n - 2 * n * n + n - 1; }

/// C(n, n, -1, n, n).
inline ConwayWord family_word(const Integer& n) { return ConwayWord({n, n, -1, n, n}); }

inline SchubertForm family_schubert(const Integer& n) {
  require_family_index(n);
  Integer p = family_p(n);
  if (p != (n - 1) * (n - 1) * (n * n + 1)) {
    throw std::logic_error("family_p(" + n.str() + ") does not factor as (n-1)^2(n^2+1)");
  }
  return SchubertForm::make(std::move(p), family_q(n));
}

}  // namespace dehn
