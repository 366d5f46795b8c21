#include "polylog/log_vector.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include <cmath>

#include "polylog/errors.hpp"

namespace polylog {

namespace {

const double kPi = 3.14159265358979323846264338327950288;

// c^{e} for c in {i, 2*pi*i} and integer e (possibly negative)
cplx unit_power(cplx c, int e) {
  cplx r = 1.0;
  if (e >= 0) {
    for (int i = 0; i < e; ++i) r *= c;
  } else {
    for (int i = 0; i < -e; ++i) r /= c;
  }
  return r;
}

// Generic triangular exponential transform between the omega basis and a
// basis s^k = c^{|k|} exp(sum_nu lambda_nu omega_nu) omega^k:
//   forward (s -> omega):  s^j = sum_m c^{|j|} prod lambda^m/m!  omega^{j+m}
//   inverse (omega -> s):  omega^j = sum_m c^{-|j|-|m|} prod (-lambda)^m/m! s^{j+m}
LogVector exp_transform(const LogVector& v, Basis out_kind, cplx c,
                        const std::vector<cplx>& lambda, bool inverse) {
  LogVector out(v.g(), v.N(), v.twist(), out_kind);
  const int g = v.g(), N = v.N();
  for (const auto& [key, a] : v.coeffs()) {
    if (a == cplx(0.0, 0.0)) continue;
    const MultiIndex j = v.unkey(key);
    const int rem = N - j.total();
    for (int tot = 0; tot <= rem; ++tot) {
      for (const MultiIndex& m : enumerate_of_total(g, tot)) {
        cplx f = 1.0;
        for (int nu = 0; nu < g; ++nu) {
          const cplx l = inverse ? -lambda[nu] : lambda[nu];
          for (int i = 1; i <= m[nu]; ++i) f *= l / static_cast<double>(i);
        }
        const cplx scale =
            inverse ? unit_power(c, -(j.total() + tot)) : unit_power(c, j.total());
        out.add_coeff(j.plus(m), a * scale * f);
      }
    }
  }
  return out;
}

std::vector<cplx> log_abs(const std::vector<cplx>& t) {
  std::vector<cplx> l(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == cplx(0.0, 0.0)) throw zero_coordinate();
    l[i] = std::log(std::abs(t[i]));
  }
  return l;
}

}  // namespace

std::string to_string(Basis b) {
  switch (b) {
    case Basis::omega: return "omega";
    case Basis::u: return "u";
    case Basis::e: return "e";
  }
  return "?";
}

LogVector::LogVector(int g, int N, int twist, Basis kind)
    : g_(g), N_(N), twist_(twist), kind_(kind) {
  if (g < 1 || g > 8) throw domain_error("LogVector: g must be in 1..8");
  if (N < 0) throw domain_error("LogVector: N must be >= 0");
}

void LogVector::set_branch(std::vector<cplx> b) {
  if (kind_ != Basis::u) throw domain_error("branch record only applies to the u basis");
  if (static_cast<int>(b.size()) != g_) throw domain_error("branch record needs g entries");
  branch_ = std::move(b);
}

cplx LogVector::coeff(const MultiIndex& k) const {
  auto it = coeffs_.find(k.key());
  return it == coeffs_.end() ? cplx(0.0, 0.0) : it->second;
}

void LogVector::set_coeff(const MultiIndex& k, cplx c) {
  if (k.g() != g_) throw domain_error("MultiIndex has wrong g");
  if (k.total() > N_) throw domain_error("MultiIndex exceeds truncation");
  coeffs_[k.key()] = c;
}

void LogVector::add_coeff(const MultiIndex& k, cplx c) {
  if (k.g() != g_) throw domain_error("MultiIndex has wrong g");
  if (k.total() > N_) return;  // truncation
  coeffs_[k.key()] += c;
}

MultiIndex LogVector::unkey(std::uint64_t key) const {
  std::vector<int> comps(g_);
  for (int mu = 0; mu < g_; ++mu) comps[mu] = static_cast<int>((key >> (8 * mu)) & 0xff);
  return MultiIndex(std::move(comps));
}

bool LogVector::is_zero(double tol) const {
  for (const auto& [_, c] : coeffs_)
    if (std::abs(c) > tol) return false;
  return true;
}

double LogVector::max_abs_diff(const LogVector& other) const {
  double m = 0.0;
  for (const auto& [key, c] : coeffs_) {
    auto it = other.coeffs().find(key);
    const cplx oc = it == other.coeffs().end() ? cplx(0.0, 0.0) : it->second;
    m = std::max(m, std::abs(c - oc));
  }
  for (const auto& [key, oc] : other.coeffs())
    if (!coeffs_.count(key)) m = std::max(m, std::abs(oc));
  return m;
}

LogVector omega_to_e(const LogVector& v, const std::vector<cplx>& t) {
  if (v.kind() != Basis::omega) throw domain_error("omega_to_e expects an omega-basis vector");
  // the e basis has lambda_nu = -log|t_nu|
  std::vector<cplx> lambda = log_abs(t);
  for (auto& l : lambda) l = -l;
  return exp_transform(v, Basis::e, cplx(0.0, 1.0), lambda, /*inverse=*/true);
}

LogVector e_to_omega(const LogVector& v, const std::vector<cplx>& t) {
  if (v.kind() != Basis::e) throw domain_error("e_to_omega expects an e-basis vector");
  std::vector<cplx> lambda = log_abs(t);
  for (auto& l : lambda) l = -l;
  return exp_transform(v, Basis::omega, cplx(0.0, 1.0), lambda, /*inverse=*/false);
}

namespace {
std::vector<cplx> negated(std::vector<cplx> v) {
  for (auto& z : v) z = -z;
  return v;
}
}  // namespace

LogVector omega_to_u(const LogVector& v, const std::vector<cplx>& t,
                     const std::vector<cplx>& branch) {
  if (v.kind() != Basis::omega) throw domain_error("omega_to_u expects an omega-basis vector");
  if (branch.size() != t.size() || static_cast<int>(t.size()) != v.g())
    throw domain_error("omega_to_u: point/branch size mismatch");
  for (std::size_t mu = 0; mu < t.size(); ++mu)
    if (std::abs(std::exp(branch[mu]) - t[mu]) > 1e-10) throw branch_mismatch();
  // the u basis has lambda_mu = -log t_mu = -branch[mu]
  LogVector out =
      exp_transform(v, Basis::u, cplx(0.0, 2.0 * kPi), negated(branch), /*inverse=*/true);
  out.set_branch(branch);
  return out;
}

LogVector u_to_omega(const LogVector& v) {
  if (v.kind() != Basis::u) throw domain_error("u_to_omega expects a u-basis vector");
  if (v.branch().empty()) throw domain_error("u-basis vector is missing its branch record");
  std::vector<cplx> lambda = v.branch();
  for (auto& l : lambda) l = -l;
  return exp_transform(v, Basis::omega, cplx(0.0, 2.0 * kPi), lambda, /*inverse=*/false);
}

LogVector shift_omega(const LogVector& v, int mu) {
  if (v.kind() != Basis::omega) throw domain_error("shift_omega acts in the omega basis");
  LogVector out(v.g(), v.N(), v.twist(), Basis::omega);
  for (const auto& [key, c] : v.coeffs()) out.add_coeff(v.unkey(key).bumped(mu), c);
  return out;
}

ConnectionMatrix connection_matrix(Basis kind, int g, int N) {
  ConnectionMatrix m{kind, g, N, {}};
  if (kind == Basis::u) return m;  // horizontal basis
  const OneForm form = (kind == Basis::omega) ? OneForm::dlog : OneForm::im_dlog;
  for (const MultiIndex& k : enumerate_multi_indices(g, N)) {
    if (k.total() == N) continue;
    for (int mu = 0; mu < g; ++mu) m.entries.push_back({k, k.bumped(mu), mu, form});
  }
  return m;
}

FiltrationDegree filtration_degree(const LogVector& v) {
  int min_total = -1, max_total = -1;
  for (const auto& [key, c] : v.coeffs()) {
    if (c == cplx(0.0, 0.0)) continue;
    const int tot = v.unkey(key).total();
    if (min_total < 0 || tot < min_total) min_total = tot;
    if (tot > max_total) max_total = tot;
  }
  if (min_total < 0) throw zero_vector();
  return {-2 * min_total - 2 * v.twist(), -max_total - v.twist()};
}

SplitVector splitting_pullback(const LogVector& v, const std::vector<cplx>& zeta, int order_d) {
  if (order_d < 1) throw domain_error("splitting_pullback: order must be >= 1");
  if (static_cast<int>(zeta.size()) != v.g()) throw domain_error("splitting_pullback: bad point");
  for (const cplx& z : zeta) {
    cplx p = 1.0;
    for (int i = 0; i < order_d; ++i) p *= z;
    if (std::abs(p - 1.0) > 1e-10) throw not_torsion();
  }
  LogVector w = [&] {
    switch (v.kind()) {
      case Basis::omega: return v;
      case Basis::e: return e_to_omega(v, zeta);
      case Basis::u: return u_to_omega(v);
    }
    throw domain_error("unreachable basis kind");
  }();
  SplitVector out;
  out.g = v.g();
  const bool merge = (v.g() == 1);
  out.twist = merge ? 0 : v.twist();
  for (const auto& [key, c] : w.coeffs()) {
    if (c == cplx(0.0, 0.0)) continue;
    const MultiIndex k = w.unkey(key);
    const int deg = k.total() + (merge ? v.twist() : 0);
    const std::uint64_t monomial = merge ? MultiIndex({deg}).key() : key;
    out.components[deg][monomial] += c;
  }
  return out;
}

HorizontalityCheck u_horizontality_check(int g, int N, const MultiIndex& k) {
  namespace mp = boost::multiprecision;
  if (k.g() != g || k.total() > N) throw domain_error("u_horizontality_check: bad index");
  // terms of nabla(u^k)/(2 pi i)^{|k|}: key (omega index r, log-monomial a, mu)
  struct Key {
    std::uint64_t r, a;
    int mu;
    bool operator<(const Key& o) const {
      return std::tie(r, a, mu) < std::tie(o.r, o.a, o.mu);
    }
  };
  std::map<Key, mp::cpp_rational> terms;
  std::size_t expanded = 0;
  const int rem = N - k.total();
  for (int tot = 0; tot <= rem; ++tot) {
    for (const MultiIndex& m : enumerate_of_total(g, tot)) {
      // u^k expands with coefficient (-1)^{|m|} / prod m! on (omega^{k+m}, l^m)
      mp::cpp_rational c = (tot % 2 == 0) ? 1 : -1;
      for (int nu = 0; nu < g; ++nu)
        for (int i = 2; i <= m[nu]; ++i) c /= i;
      const MultiIndex r = k.plus(m);
      // (1 (x) d): d(l^m) = sum_nu m_nu l^{m-1_nu} dlog t_nu
      for (int nu = 0; nu < g; ++nu) {
        if (m[nu] == 0) continue;
        terms[{r.key(), m.bumped(nu, -1).key(), nu}] += c * m[nu];
        ++expanded;
      }
      // connection: omega^{r+1_nu} (x) dlog t_nu, truncated at N
      if (r.total() + 1 <= N) {
        for (int nu = 0; nu < g; ++nu) {
          terms[{r.bumped(nu).key(), m.key(), nu}] += c;
          ++expanded;
        }
      }
    }
  }
  for (const auto& [_, c] : terms)
    if (c != 0) return {false, expanded};
  return {true, expanded};
}

std::string to_json_string(const LogVector& v) {
  nlohmann::ordered_json j;
  j["g"] = v.g();
  j["N"] = v.N();
  j["twist"] = v.twist();
  j["kind"] = to_string(v.kind());
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [key, c] : v.coeffs()) {
    nlohmann::ordered_json e;
    e["k"] = v.unkey(key).components();
    e["re"] = c.real();
    e["im"] = c.imag();
    entries.push_back(e);
  }
  j["entries"] = entries;
  if (v.kind() == Basis::u) {
    auto b = nlohmann::ordered_json::array();
    for (const cplx& z : v.branch()) b.push_back({{"re", z.real()}, {"im", z.imag()}});
    j["branch"] = b;
  }
  return j.dump();
}

LogVector log_vector_from_json(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  const std::string kind_s = j.at("kind").get<std::string>();
  Basis kind;
  if (kind_s == "omega") kind = Basis::omega;
  else if (kind_s == "u") kind = Basis::u;
  else if (kind_s == "e") kind = Basis::e;
  else throw domain_error("unknown basis kind in JSON: " + kind_s);
  LogVector v(j.at("g").get<int>(), j.at("N").get<int>(), j.at("twist").get<int>(), kind);
  for (const auto& e : j.at("entries")) {
    MultiIndex k(e.at("k").get<std::vector<int>>());
    v.set_coeff(k, cplx(e.at("re").get<double>(), e.at("im").get<double>()));
  }
  if (kind == Basis::u) {
    std::vector<cplx> b;
    for (const auto& z : j.at("branch"))
      b.emplace_back(z.at("re").get<double>(), z.at("im").get<double>());
    v.set_branch(std::move(b));
  }
  return v;
}

}  // namespace polylog
