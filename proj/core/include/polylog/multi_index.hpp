#ifndef POLYLOG_MULTI_INDEX_HPP
#define POLYLOG_MULTI_INDEX_HPP

#include <cstdint>
#include <vector>

namespace polylog {

// Exponent vector k in N^g indexing the basis of the truncated module.
// Components are packed 8 bits each, so g <= 8 and every component <= 255.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> comps);
  static MultiIndex zero(int g);
  static MultiIndex unit(int g, int mu);  // 1 in slot mu, 0 elsewhere

  int g() const { return static_cast<int>(comps_.size()); }
  int operator[](int mu) const { return comps_[mu]; }
  int total() const;  // |k|

  MultiIndex bumped(int mu, int delta = 1) const;  // k + delta*1_mu
  MultiIndex plus(const MultiIndex& other) const;

  std::uint64_t key() const;  // packed encoding, unique for g <= 8
  const std::vector<int>& components() const { return comps_; }

  bool operator==(const MultiIndex& o) const { return comps_ == o.comps_; }
  bool operator<(const MultiIndex& o) const;  // by |k|, then lexicographic

 private:
  std::vector<int> comps_;
};

// All k with |k| <= N, sorted by (|k|, lex).  The position of each index in
// this list is the canonical coordinate used by the linear-algebra layer.
std::vector<MultiIndex> enumerate_multi_indices(int g, int N);

// All k with |k| == total, sorted lexicographically.
std::vector<MultiIndex> enumerate_of_total(int g, int total);

long long binomial(int n, int k);

// dim of the |k| <= N block: binom(N+g, g)
long long log_rank(int g, int N);

}  // namespace polylog

#endif
