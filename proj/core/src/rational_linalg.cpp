#include "polylog/rational_linalg.hpp"

#include <cstdlib>

#include "polylog/errors.hpp"

namespace polylog {

namespace {

inline bool mul_overflow(long long a, long long b, long long* out) {
  return __builtin_mul_overflow(a, b, out);
}
inline bool sub_overflow(long long a, long long b, long long* out) {
  return __builtin_sub_overflow(a, b, out);
}

}  // namespace

std::size_t IntMatrix::rank_int64(bool& overflow) const {
  overflow = false;
  std::vector<long long> m = a_;
  auto at = [&](std::size_t i, std::size_t j) -> long long& { return m[i * cols_ + j]; };
  std::size_t rank = 0;
  long long prev = 1;
  std::size_t col = 0;
  for (; rank < rows_ && col < cols_; ++col) {
    // pick the nonzero pivot of smallest magnitude to slow Bareiss growth
    std::size_t best = rows_;
    for (std::size_t i = rank; i < rows_; ++i) {
      if (at(i, col) == 0) continue;
      if (best == rows_ || std::llabs(at(i, col)) < std::llabs(at(best, col))) best = i;
    }
    if (best == rows_) continue;
    if (best != rank)
      for (std::size_t j = col; j < cols_; ++j) std::swap(at(rank, j), at(best, j));
    const long long p = at(rank, col);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      const long long f = at(i, col);
      if (f == 0 && p == prev) continue;
      for (std::size_t j = col; j < cols_; ++j) {
        long long t1, t2, num;
        if (mul_overflow(p, at(i, j), &t1) || mul_overflow(f, at(rank, j), &t2) ||
            sub_overflow(t1, t2, &num)) {
          overflow = true;
          return 0;
        }
        at(i, j) = num / prev;  // exact by Bareiss
      }
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t IntMatrix::rank_bigint() const {
  std::vector<BigInt> m(a_.begin(), a_.end());
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * cols_ + j]; };
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; rank < rows_ && col < cols_; ++col) {
    std::size_t best = rows_;
    for (std::size_t i = rank; i < rows_; ++i) {
      if (at(i, col) == 0) continue;
      if (best == rows_ || abs(at(i, col)) < abs(at(best, col))) best = i;
    }
    if (best == rows_) continue;
    if (best != rank)
      for (std::size_t j = col; j < cols_; ++j) std::swap(at(rank, j), at(best, j));
    const BigInt p = at(rank, col);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      const BigInt f = at(i, col);
      for (std::size_t j = col; j < cols_; ++j) at(i, j) = (p * at(i, j) - f * at(rank, j)) / prev;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t IntMatrix::rank() const {
  bool overflow = false;
  const std::size_t r = rank_int64(overflow);
  if (!overflow) return r;
  return rank_bigint();
}

RationalMatrix::Echelon RationalMatrix::rref(
    const std::vector<std::vector<Rational>>& extra_cols) const {
  const std::size_t width = cols_ + extra_cols.size();
  std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(width));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m[i][j] = at(i, j);
    for (std::size_t e = 0; e < extra_cols.size(); ++e) m[i][cols_ + e] = extra_cols[e][i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t piv = rows_;
    for (std::size_t i = row; i < rows_; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == rows_) continue;
    std::swap(m[row], m[piv]);
    const Rational p = m[row][col];
    for (std::size_t j = col; j < width; ++j) m[row][j] /= p;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < width; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivot_col)};
}

std::size_t RationalMatrix::rank() const { return rref({}).pivot_col.size(); }

std::optional<std::vector<Rational>> RationalMatrix::solve(const std::vector<Rational>& b) const {
  if (b.size() != rows_) throw domain_error("solve: rhs size mismatch");
  const Echelon e = rref({b});
  const std::size_t r = e.pivot_col.size();
  // inconsistent iff some zero-row of A has nonzero rhs
  for (std::size_t i = r; i < rows_; ++i)
    if (e.rows[i][cols_] != 0) return std::nullopt;
  std::vector<Rational> x(cols_, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[e.pivot_col[i]] = e.rows[i][cols_];
  return x;
}

std::vector<std::vector<Rational>> RationalMatrix::kernel_basis() const {
  const Echelon e = rref({});
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : e.pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t fc = 0; fc < cols_; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[fc] = 1;
    for (std::size_t i = 0; i < e.pivot_col.size(); ++i) v[e.pivot_col[i]] = -e.rows[i][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool RationalMatrix::in_column_span(const std::vector<Rational>& b) const {
  return solve(b).has_value();
}

}  // namespace polylog
