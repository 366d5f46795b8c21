#include "polylog/multi_index.hpp"

#include <numeric>

#include "polylog/errors.hpp"

namespace polylog {

MultiIndex::MultiIndex(std::vector<int> comps) : comps_(std::move(comps)) {
  if (comps_.empty() || comps_.size() > 8) throw domain_error("MultiIndex: g must be in 1..8");
  for (int c : comps_)
    if (c < 0 || c > 255) throw domain_error("MultiIndex: component out of range");
}

MultiIndex MultiIndex::zero(int g) { return MultiIndex(std::vector<int>(g, 0)); }

MultiIndex MultiIndex::unit(int g, int mu) {
  std::vector<int> c(g, 0);
  c.at(mu) = 1;
  return MultiIndex(std::move(c));
}

int MultiIndex::total() const { return std::accumulate(comps_.begin(), comps_.end(), 0); }

MultiIndex MultiIndex::bumped(int mu, int delta) const {
  std::vector<int> c = comps_;
  c.at(mu) += delta;
  return MultiIndex(std::move(c));
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
  std::vector<int> c = comps_;
  for (int mu = 0; mu < g(); ++mu) c[mu] += other[mu];
  return MultiIndex(std::move(c));
}

std::uint64_t MultiIndex::key() const {
  std::uint64_t k = 0;
  for (int mu = 0; mu < g(); ++mu) k |= static_cast<std::uint64_t>(comps_[mu]) << (8 * mu);
  return k;
}

bool MultiIndex::operator<(const MultiIndex& o) const {
  const int a = total(), b = o.total();
  if (a != b) return a < b;
  return comps_ < o.comps_;
}

std::vector<MultiIndex> enumerate_of_total(int g, int total) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(g, 0);
  // lexicographic enumeration of compositions of `total` into g parts
  auto rec = [&](auto&& self, int slot, int rem) -> void {
    if (slot == g - 1) {
      cur[slot] = rem;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[slot] = v;
      self(self, slot + 1, rem - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

std::vector<MultiIndex> enumerate_multi_indices(int g, int N) {
  std::vector<MultiIndex> out;
  for (int total = 0; total <= N; ++total) {
    auto layer = enumerate_of_total(g, total);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long log_rank(int g, int N) { return binomial(N + g, g); }

}  // namespace polylog
