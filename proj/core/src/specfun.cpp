#include "polylog/specfun.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <mutex>
#include <vector>

namespace polylog {

namespace {

namespace mp = boost::multiprecision;

constexpr int kMaxOrder = 100;   // largest admissible polylog index
constexpr int kBernoulliMax = 140;
const double kPi = 3.14159265358979323846264338327950288;

// Bernoulli numbers, exact recurrence over rationals, rounded once to double.
// B_1 = -1/2 convention.
const std::vector<double>& bernoulli_table() {
  static const std::vector<double> table = [] {
    std::vector<mp::cpp_rational> b(kBernoulliMax + 1);
    std::vector<mp::cpp_int> binom(kBernoulliMax + 2);
    b[0] = 1;
    for (int m = 1; m <= kBernoulliMax; ++m) {
      // Pascal row for C(m+1, j)
      binom[0] = 1;
      for (int j = 1; j <= m + 1; ++j) binom[j] = binom[j - 1] * (m + 2 - j) / j;
      mp::cpp_rational acc = 0;
      for (int j = 0; j < m; ++j) acc += mp::cpp_rational(binom[j]) * b[j];
      b[m] = -acc / (m + 1);
    }
    std::vector<double> out(kBernoulliMax + 1);
    for (int m = 0; m <= kBernoulliMax; ++m) out[m] = b[m].convert_to<double>();
    return out;
  }();
  return table;
}

// zeta(k) for k = 2..kMaxOrder+60, built once; read-only afterwards.
const std::vector<double>& zeta_table() {
  static const std::vector<double> table = [] {
    const int kmax = kMaxOrder + 60;
    std::vector<double> z(kmax + 1, 0.0);
    const auto& B = bernoulli_table();
    const int M = 32;
    for (int k = 2; k <= kmax; ++k) {
      double s = 0.0;
      for (int n = M - 1; n >= 1; --n) s += std::pow(static_cast<double>(n), -k);
      const double Mk = std::pow(static_cast<double>(M), -k);
      s += 0.5 * Mk;
      s += Mk * M / (k - 1);
      // Euler-Maclaurin tail: sum_j B_{2j}/(2j)! * (k)_{2j-1} * M^{-(k+2j-1)}
      double rising = static_cast<double>(k);  // (k)_{1}
      double fact = 2.0;                       // (2j)! at j=1
      double Mpow = std::pow(static_cast<double>(M), -(k + 1));
      for (int j = 1; j <= 12; ++j) {
        const double term = B[2 * j] / fact * rising * Mpow;
        s += term;
        if (std::abs(term) < 1e-20 * s) break;
        rising *= (k + 2 * j - 1) * static_cast<double>(k + 2 * j);
        fact *= (2 * j + 1) * (2 * j + 2);
        Mpow /= M * M;
      }
      z[k] = s;
    }
    return z;
  }();
  return table;
}

// zeta at an integer argument m <= kMaxOrder+60 with m != 1.
double zeta_int(int m) {
  if (m >= 2) return zeta_table()[m];
  if (m == 0) return -0.5;
  // zeta(-n) = -B_{n+1}/(n+1)
  const int n = -m;
  if (n + 1 > kBernoulliMax) throw non_convergence("zeta argument below tabulated range");
  return -bernoulli_table()[n + 1] / (n + 1);
}

bool on_cut_axis(cplx t) { return t.imag() == 0.0 && t.real() > 1.0; }

// log(-z) for z off (or resolved onto) the ray [1,oo).
cplx log_neg(cplx z, CutSide side) {
  if (on_cut_axis(z)) {
    const double s = (side == CutSide::above) ? -1.0 : 1.0;
    return {std::log(z.real()), s * kPi};
  }
  return std::log(-z);
}

// log(1-t) resolved by the cut side when 1-t lands on (-oo,0).
cplx log_one_minus(cplx t, CutSide side) {
  if (on_cut_axis(t)) {
    const double s = (side == CutSide::above) ? -1.0 : 1.0;
    return {std::log(t.real() - 1.0), s * kPi};
  }
  return std::log(1.0 - t);
}

cplx li_series(int k, cplx t, const EvalConfig& cfg) {
  cplx sum = 0.0;
  cplx tn = 1.0;
  for (int n = 1; n <= cfg.max_terms; ++n) {
    tn *= t;
    const cplx term = tn / std::pow(static_cast<double>(n), k);
    sum += term;
    if (std::abs(term) < cfg.series_tol * (std::abs(sum) + 1e-300)) return sum;
  }
  throw non_convergence("Li series did not converge within max_terms");
}

// Expansion in w = log t, valid for |w| < 2*pi and k >= 2:
//   Li_k(e^w) = sum_{j>=0, j!=k-1} zeta(k-j) w^j/j!
//             + w^{k-1}/(k-1)! (H_{k-1} - log(-w))
cplx li_log_expansion(int k, cplx t, const EvalConfig& cfg) {
  cplx w = std::log(t);
  if (on_cut_axis(t)) w = cplx(std::log(t.real()), 0.0);
  cplx lognw;
  if (w.imag() == 0.0 && w.real() > 0.0) {
    const double s = (cfg.cut_side == CutSide::above) ? -1.0 : 1.0;
    lognw = cplx(std::log(w.real()), s * kPi);
  } else {
    lognw = std::log(-w);
  }
  double harmonic = 0.0;
  for (int i = 1; i <= k - 1; ++i) harmonic += 1.0 / i;

  cplx sum = 0.0;
  cplx wj = 1.0;  // w^j / j!
  int quiet = 0;
  for (int j = 0; j <= cfg.max_terms; ++j) {
    if (j == k - 1) {
      sum += wj * (harmonic - lognw);
    } else {
      const cplx term = zeta_int(k - j) * wj;
      sum += term;
      if (std::abs(term) < cfg.series_tol * (std::abs(sum) + 1e-300)) {
        if (++quiet >= 4 && j > k) return sum;
      } else {
        quiet = 0;
      }
    }
    wj *= w / static_cast<double>(j + 1);
  }
  throw non_convergence("log-expansion of Li did not converge within max_terms");
}

// Inversion for |t| >= 2, k >= 2:
//   Li_k(t) = (-1)^{k-1} Li_k(1/t) - (2 pi i)^k / k! * B_k(1/2 + log(-t)/(2 pi i))
cplx li_inversion(int k, cplx t, const EvalConfig& cfg) {
  const cplx lnt = log_neg(t, cfg.cut_side);
  const cplx twopii(0.0, 2.0 * kPi);
  const cplx x = 0.5 + lnt / twopii;
  cplx pref = 1.0;
  for (int i = 1; i <= k; ++i) pref *= twopii / static_cast<double>(i);
  const cplx small = li_series(k, 1.0 / t, cfg);
  const double sign = (k % 2 == 0) ? -1.0 : 1.0;
  return sign * small - pref * bernoulli_poly(k, x);
}

}  // namespace

std::string to_string(LiRegime r) {
  switch (r) {
    case LiRegime::closed_form: return "closed-form";
    case LiRegime::series: return "series";
    case LiRegime::near_one: return "near-1";
    case LiRegime::inversion: return "inversion";
    case LiRegime::path: return "path";
  }
  return "?";
}

double bernoulli_number(int n) {
  if (n < 0 || n > kBernoulliMax) throw domain_error("bernoulli_number: index out of range");
  return bernoulli_table()[n];
}

cplx bernoulli_poly(int n, cplx x) {
  if (n < 0 || n > kBernoulliMax) throw domain_error("bernoulli_poly: index out of range");
  const auto& B = bernoulli_table();
  // sum_j C(n,j) B_j x^{n-j}, Horner in x
  std::vector<double> binom(n + 1);
  binom[0] = 1.0;
  for (int j = 1; j <= n; ++j) binom[j] = binom[j - 1] * (n + 1 - j) / j;
  cplx acc = 0.0;
  for (int j = 0; j <= n; ++j) {
    acc = acc * x + binom[j] * B[j];
  }
  return acc;
}

double zeta_value(int k) {
  if (k < 2) throw domain_error("zeta_value requires k >= 2");
  if (k > kMaxOrder + 60) return 1.0;  // 1 to double precision far out
  return zeta_table()[k];
}

LiResult li_ex(int k, cplx t, const EvalConfig& cfg) {
  cfg.validate();
  if (k < 1 || k > kMaxOrder) throw domain_error("li: order k out of supported range");
  if (!std::isfinite(t.real()) || !std::isfinite(t.imag()))
    throw domain_error("li: point has non-finite coordinates");
  if (t == cplx(0.0, 0.0)) return {cplx(0.0, 0.0), LiRegime::series};
  if (t == cplx(1.0, 0.0)) {
    if (k == 1) throw pole_at_one();
    return {cplx(zeta_value(k), 0.0), LiRegime::near_one};
  }
  if (k == 1) return {-log_one_minus(t, cfg.cut_side), LiRegime::closed_form};
  const double r = std::abs(t);
  if (r <= 0.5) return {li_series(k, t, cfg), LiRegime::series};
  if (r >= 2.0) return {li_inversion(k, t, cfg), LiRegime::inversion};
  return {li_log_expansion(k, t, cfg), LiRegime::near_one};
}

cplx li(int k, cplx t, const EvalConfig& cfg) { return li_ex(k, t, cfg).value; }

cplx li_path(int k, cplx t, int steps) {
  if (k < 1 || k > kMaxOrder) throw domain_error("li_path: order k out of supported range");
  if (t == cplx(0.0, 0.0)) return 0.0;
  // Series seed at a small point on the ray through t.
  const cplx t0 = 0.25 * t / std::abs(t);
  EvalConfig cfg;
  std::vector<cplx> y(k + 1);
  for (int j = 1; j <= k; ++j) y[j] = li_series(j, t0, cfg);
  const cplx dz = (t - t0) / static_cast<double>(steps);
  auto deriv = [&](const std::vector<cplx>& v, cplx u) {
    std::vector<cplx> d(k + 1);
    d[1] = 1.0 / (1.0 - u);
    for (int j = 2; j <= k; ++j) d[j] = v[j - 1] / u;
    return d;
  };
  auto axpy = [&](const std::vector<cplx>& v, const std::vector<cplx>& d, cplx h) {
    std::vector<cplx> out(k + 1);
    for (int j = 1; j <= k; ++j) out[j] = v[j] + h * d[j];
    return out;
  };
  cplx u = t0;
  for (int s = 0; s < steps; ++s) {
    const auto k1 = deriv(y, u);
    const auto k2 = deriv(axpy(y, k1, 0.5 * dz), u + 0.5 * dz);
    const auto k3 = deriv(axpy(y, k2, 0.5 * dz), u + 0.5 * dz);
    const auto k4 = deriv(axpy(y, k3, dz), u + dz);
    for (int j = 1; j <= k; ++j)
      y[j] += dz / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    u += dz;
  }
  return y[k];
}

cplx l_big(int m, cplx t, const EvalConfig& cfg) {
  if (m < 0) throw domain_error("l_big requires m >= 0");
  if (t == cplx(0.0, 0.0)) throw domain_error("L_m is singular at t = 0");
  if (t == cplx(1.0, 0.0)) throw domain_error("L_m is singular at t = 1");
  const double x = -std::log(std::abs(t));
  cplx sum = 0.0;
  double xpow = 1.0;  // x^{m-k}/(m-k)! built from k = m downwards
  std::vector<double> weight(m + 1);
  weight[m] = 1.0;
  for (int k = m - 1; k >= 0; --k) {
    xpow *= x / (m - k);
    weight[k] = xpow;
  }
  for (int k = 0; k <= m; ++k) sum += weight[k] * li(k + 1, t, cfg);
  return sum;
}

double d_bwr(int m, cplx t, const EvalConfig& cfg) {
  if (m < 1) throw domain_error("d_bwr requires m >= 1");
  static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx z = ipow[m % 4] * l_big(m - 1, t, cfg);
  return z.imag();
}

// D_m(1/t) = -D_m(t) for even m, and
// D_m(1/t) = D_m(t) + (-1)^{(m-1)/2} (log|t|)^m / m! for odd m.
// (The sign pattern follows from the inversion law of the classically
// normalized functions under D_m = Im(i^m L_m).)
double functional_equation_residual(int m, cplx t, const EvalConfig& cfg) {
  if (m < 1) throw domain_error("functional_equation_residual requires m >= 1");
  if (t == cplx(0.0, 0.0) || t == cplx(1.0, 0.0))
    throw domain_error("functional equation undefined at t in {0,1}");
  if (m % 2 == 0) return d_bwr(m, 1.0 / t, cfg) + d_bwr(m, t, cfg);
  double r = d_bwr(m, 1.0 / t, cfg) - d_bwr(m, t, cfg);
  double corr = (((m - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  const double lt = std::log(std::abs(t));
  for (int i = 1; i <= m; ++i) corr *= lt / i;
  return r - corr;
}

}  // namespace polylog
