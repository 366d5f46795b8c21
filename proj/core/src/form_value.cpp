#include "polylog/form_value.hpp"

#include <bit>
#include <cmath>

#include "polylog/errors.hpp"

namespace polylog {

namespace {

int insert_sign_below(std::uint32_t mask, int mu) {
  const std::uint32_t below = mask & ((1u << mu) - 1u);
  return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

}  // namespace

FormValue::FormValue(int g, int N, int twist, Basis kind)
    : g_(g), N_(N), twist_(twist), kind_(kind) {
  if (g < 1 || g > 8) throw domain_error("FormValue: g must be in 1..8");
  if (N < 0) throw domain_error("FormValue: N must be >= 0");
  if (kind == Basis::u) throw domain_error("FormValue: u basis values are not supported");
}

cplx FormValue::entry(const MultiIndex& k, std::uint32_t hol, std::uint32_t anti) const {
  auto it = entries_.find({k.key(), hol, anti});
  return it == entries_.end() ? cplx(0.0, 0.0) : it->second;
}

void FormValue::set(const MultiIndex& k, std::uint32_t hol, std::uint32_t anti, cplx c) {
  if (k.total() > N_) throw domain_error("FormValue: multi-index exceeds truncation");
  entries_[{k.key(), hol, anti}] = c;
}

void FormValue::add(const MultiIndex& k, std::uint32_t hol, std::uint32_t anti, cplx c) {
  if (k.total() > N_) return;
  entries_[{k.key(), hol, anti}] += c;
}

void FormValue::wedge_accumulate(const FormValue& src, int mu, bool antiholomorphic, cplx c) {
  const std::uint32_t bit = 1u << mu;
  for (const auto& [key, v] : src.entries_) {
    const auto [kk, hol, anti] = key;
    if (antiholomorphic) {
      if (anti & bit) continue;
      const int sgn = ((std::popcount(hol) % 2 == 0) ? 1 : -1) * insert_sign_below(anti, mu);
      entries_[{kk, hol, anti | bit}] += static_cast<double>(sgn) * c * v;
    } else {
      if (hol & bit) continue;
      const int sgn = insert_sign_below(hol, mu);
      entries_[{kk, hol | bit, anti}] += static_cast<double>(sgn) * c * v;
    }
  }
}

FormValue& FormValue::operator+=(const FormValue& o) {
  for (const auto& [key, v] : o.entries_) entries_[key] += v;
  return *this;
}

FormValue& FormValue::operator-=(const FormValue& o) {
  for (const auto& [key, v] : o.entries_) entries_[key] -= v;
  return *this;
}

FormValue& FormValue::operator*=(cplx s) {
  for (auto& [key, v] : entries_) v *= s;
  return *this;
}

double FormValue::max_abs() const {
  double m = 0.0;
  for (const auto& [key, v] : entries_) m = std::max(m, std::abs(v));
  return m;
}

double FormValue::max_abs_diff(const FormValue& o) const {
  double m = 0.0;
  for (const auto& [key, v] : entries_) {
    auto it = o.entries_.find(key);
    const cplx ov = it == o.entries_.end() ? cplx(0.0, 0.0) : it->second;
    m = std::max(m, std::abs(v - ov));
  }
  for (const auto& [key, ov] : o.entries_)
    if (!entries_.count(key)) m = std::max(m, std::abs(ov));
  return m;
}

MultiIndex FormValue::unkey(std::uint64_t key) const {
  std::vector<int> comps(g_);
  for (int mu = 0; mu < g_; ++mu) comps[mu] = static_cast<int>((key >> (8 * mu)) & 0xff);
  return MultiIndex(std::move(comps));
}

FormValue conj(const FormValue& v) {
  if (v.kind() != Basis::e)
    throw domain_error("conj(FormValue) is defined on the e (real) basis");
  FormValue out(v.g(), v.N(), v.twist(), Basis::e);
  const double tate = (v.twist() % 2 == 0) ? 1.0 : -1.0;
  for (const auto& [key, c] : v.entries()) {
    const auto [kk, hol, anti] = key;
    const int p = std::popcount(hol), q = std::popcount(anti);
    const double reorder = ((p * q) % 2 == 0) ? 1.0 : -1.0;
    out.add(v.unkey(kk), anti, hol, std::conj(c) * tate * reorder);
  }
  return out;
}

FormValue form_to_e_basis(const FormValue& v, const std::vector<cplx>& t) {
  if (v.kind() == Basis::e) return v;
  if (v.kind() != Basis::omega) throw domain_error("form_to_e_basis expects omega or e");
  FormValue out(v.g(), v.N(), v.twist(), Basis::e);
  const int g = v.g(), N = v.N();
  std::vector<double> x(g);
  for (int nu = 0; nu < g; ++nu) {
    if (t[nu] == cplx(0.0, 0.0)) throw zero_coordinate();
    x[nu] = std::log(std::abs(t[nu]));
  }
  // omega^k = sum_m (-i)^{|k|+|m|} prod x_nu^{m_nu}/m_nu! e^{k+m}
  const cplx mi(0.0, -1.0);
  for (const auto& [key, c] : v.entries()) {
    const auto [kk, hol, anti] = key;
    const MultiIndex k = v.unkey(kk);
    const int rem = N - k.total();
    for (int tot = 0; tot <= rem; ++tot) {
      for (const MultiIndex& m : enumerate_of_total(g, tot)) {
        cplx f = 1.0;
        for (int nu = 0; nu < g; ++nu)
          for (int i = 1; i <= m[nu]; ++i) f *= x[nu] / static_cast<double>(i);
        cplx phase = 1.0;
        for (int i = 0; i < k.total() + tot; ++i) phase *= mi;
        out.add(k.plus(m), hol, anti, c * phase * f);
      }
    }
  }
  return out;
}

}  // namespace polylog
