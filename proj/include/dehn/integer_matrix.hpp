#pragma once

// Exact integer matrices, Smith normal form with unimodular transforms, and
// finitely generated abelian groups presented as cokernels.

#include "dehn/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace dehn {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntegerMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DomainError("ragged matrix rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntegerMatrix diagonal(const std::vector<Integer>& d) {
    IntegerMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Appends a row; the matrix must be empty or have matching width.
  void append_row(const std::vector<Integer>& row) {
    if (rows_ == 0 && data_.empty()) cols_ = row.size();
    if (row.size() != cols_) throw DomainError("row width does not match matrix");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

  std::vector<Integer> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  IntegerMatrix transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
  }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product dimension mismatch");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << "[";
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
      os << "]\n";
    }
    return os;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free Gaussian elimination (Bareiss). Square matrices only;
/// the 0x0 determinant is 1.
inline Integer determinant(IntegerMatrix m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Z^free_rank + Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  AbelianGroup(std::size_t free_rank, std::vector<Integer> invariant_factors)
      : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] < 2) throw DomainError("invariant factor " + factors_[i].str() + " < 2");
      if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
        throw DomainError("invariant factors do not form a divisibility chain");
      }
    }
  }

  /// Drops units, maps 0 to free rank, and sorts; `diagonal` must already
  /// form a divisibility chain once units and zeros are removed.
  static AbelianGroup from_diagonal(std::size_t extra_free, const std::vector<Integer>& diagonal) {
    std::size_t free = extra_free;
    std::vector<Integer> f;
    for (const auto& d : diagonal) {
      Integer a = abs(d);
      if (a == 0) {
        ++free;
      } else if (a != 1) {
        f.push_back(std::move(a));
      }
    }
    std::sort(f.begin(), f.end());
    return AbelianGroup(free, std::move(f));
  }

  static AbelianGroup cyclic(const Integer& order) {
    if (order == 1) return {};
    return AbelianGroup(0, {order});
  }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const { return factors_; }

  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  bool is_cyclic() const { return free_rank_ + factors_.size() <= 1; }

  /// Order of the group, or nullopt if infinite.
  std::optional<Integer> order() const {
    if (!is_finite()) return std::nullopt;
    return torsion_order();
  }

  Integer torsion_order() const {
    Integer o = 1;
    for (const auto& d : factors_) o *= d;
    return o;
  }

  /// "Z^2 + Z/2 + Z/6", "Z", "Z/5", or "0" for the trivial group.
  std::string str() const {
    std::string out;
    auto add = [&](const std::string& part) {
      if (!out.empty()) out += " + ";
      out += part;
    };
    if (free_rank_ == 1) add("Z");
    if (free_rank_ > 1) add("Z^" + std::to_string(free_rank_));
    for (const auto& d : factors_) add("Z/" + d.str());
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

  friend std::ostream& operator<<(std::ostream& os, const AbelianGroup& g) { return os << g.str(); }

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> factors_;
};

/// U * M * V = D with U, V unimodular and D diagonal in Smith form.
struct SNFResult {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;

  /// The min(rows, cols) diagonal entries of D.
  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }

  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& d : diagonal()) r += d != 0;
    return r;
  }
};

namespace detail {

/// Position of the nonzero entry of smallest magnitude in the trailing
/// block starting at (t, t), if any.
inline std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(const IntegerMatrix& d,
                                                                          std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = std::move(a);
        if (best_abs == 1) return best;
      }
    }
  }
  return best;
}

}  // namespace detail

/// Smith normal form by repeated smallest-magnitude pivoting. Row
/// operations are mirrored into U and column operations into V, so the
/// result always satisfies U * M * V = D exactly.
inline SNFResult smith_normal_form(const IntegerMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SNFResult r{IntegerMatrix::identity(rows), m, IntegerMatrix::identity(cols)};
  IntegerMatrix& U = r.U;
  IntegerMatrix& D = r.D;
  IntegerMatrix& V = r.V;

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto pivot = detail::smallest_pivot(D, t);
      if (!pivot) return r;  // trailing block is zero
      auto [pi, pj] = *pivot;
      D.swap_rows(t, pi);
      U.swap_rows(t, pi);
      D.swap_cols(t, pj);
      V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        Integer k = -(D(i, t) / D(t, t));
        D.add_row_multiple(i, t, k);
        U.add_row_multiple(i, t, k);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        Integer k = -(D(t, j) / D(t, t));
        D.add_col_multiple(j, t, k);
        V.add_col_multiple(j, t, k);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder now exists; pivot again

      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row into row t and reduce again.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row) {
        D.add_row_multiple(t, *bad_row, 1);
        U.add_row_multiple(t, *bad_row, 1);
        continue;
      }
      if (D(t, t) < 0) {
        D.negate_row(t);
        U.negate_row(t);
      }
      break;
    }
  }
  return r;
}

/// Abelian group with `cols` generators and one relation per row of m.
inline AbelianGroup cokernel(const IntegerMatrix& m) {
  auto snf = smith_normal_form(m);
  auto diag = snf.diagonal();
  return AbelianGroup::from_diagonal(m.cols() - diag.size(), diag);
}

/// Largest matrix dimension accepted by minors_gcd_oracle.
inline constexpr std::size_t kMinorsOracleLimit = 7;

namespace detail {

/// Determinant of the k x k submatrix on (row_idx, col_idx) by Laplace
/// expansion along rows, memoized over the set of columns still in use.
inline Integer minor_determinant(const IntegerMatrix& m, const std::vector<std::size_t>& row_idx,
                                 const std::vector<std::size_t>& col_idx) {
  const std::size_t k = row_idx.size();
  // value[mask] = det of the submatrix using the last popcount(mask) rows
  // and the columns in mask.
  std::vector<Integer> value(std::size_t{1} << k);
  value[0] = 1;
  for (std::size_t mask = 1; mask < value.size(); ++mask) {
    std::size_t used = static_cast<std::size_t>(__builtin_popcountll(mask));
    std::size_t row = row_idx[k - used];
    Integer sum = 0;
    std::size_t position = 0;  // index of column c among set bits of mask
    for (std::size_t c = 0; c < k; ++c) {
      if (!(mask & (std::size_t{1} << c))) continue;
      const Integer& entry = m(row, col_idx[c]);
      if (entry != 0) {
        Integer term = entry * value[mask ^ (std::size_t{1} << c)];
        if (position % 2 == 0) {
          sum += term;
        } else {
          sum -= term;
        }
      }
      ++position;
    }
    value[mask] = std::move(sum);
  }
  return value.back();
}

template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Cokernel via determinantal divisors: Delta_k = gcd of all k x k minors
/// and d_k = Delta_k / Delta_{k-1}. Independent of smith_normal_form and
/// only intended for cross-checking small matrices.
inline AbelianGroup minors_gcd_oracle(const IntegerMatrix& m) {
  if (m.rows() > kMinorsOracleLimit || m.cols() > kMinorsOracleLimit) {
    throw DomainError("minors oracle limited to " + std::to_string(kMinorsOracleLimit) + "x" +
                      std::to_string(kMinorsOracleLimit) + " matrices");
  }
  const std::size_t kmax = std::min(m.rows(), m.cols());
  std::vector<Integer> divisors;
  Integer previous = 1;
  std::size_t rank = 0;
  for (std::size_t k = 1; k <= kmax; ++k) {
    Integer g = 0;
    detail::for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rs) {
      if (g == 1) return;
      detail::for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cs) {
        if (g == 1) return;
        g = gcd(g, detail::minor_determinant(m, rs, cs));
      });
    });
    if (g == 0) break;
    divisors.push_back(g / previous);
    previous = g;
    rank = k;
  }
  return AbelianGroup::from_diagonal(m.cols() - rank, divisors);
}

}  // namespace dehn
