#ifndef POLYLOG_RATIONAL_LINALG_HPP
#define POLYLOG_RATIONAL_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace polylog {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major.  Exact rank via fraction-free Bareiss
// elimination: int64 fast path with overflow detection, arbitrary-precision
// retry when the fast path overflows.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  long long& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  long long at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::size_t rank() const;

 private:
  std::size_t rank_int64(bool& overflow) const;
  std::size_t rank_bigint() const;

  std::size_t rows_, cols_;
  std::vector<long long> a_;
};

// Dense matrix over Q with reduced-row-echelon solving.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::size_t rank() const;

  // Minimal-support solution of A x = b from the echelon form (free variables
  // pinned to zero); nullopt when the system is inconsistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

  // Basis of the kernel, one vector per free column (deterministic order).
  std::vector<std::vector<Rational>> kernel_basis() const;

  // Is b in the column span?
  bool in_column_span(const std::vector<Rational>& b) const;

 private:
  struct Echelon {
    std::vector<std::vector<Rational>> rows;  // RREF rows of [A | b...]
    std::vector<std::size_t> pivot_col;
  };
  Echelon rref(const std::vector<std::vector<Rational>>& extra_cols) const;

  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

}  // namespace polylog

#endif
