#include "polylog/specialization.hpp"

#include <cmath>
#include <numeric>

#include "polylog/errors.hpp"

namespace polylog {

namespace {

const double kPi = 3.14159265358979323846264338327950288;

cplx i_power(int m) {
  static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((m % 4) + 4) % 4];
}

}  // namespace

std::vector<cplx> RootOfUnityPoint::coordinates() const {
  if (d < 1) throw domain_error("root of unity order must be >= 1");
  std::vector<cplx> out;
  out.reserve(exponents.size());
  for (int e : exponents) {
    const double theta = 2.0 * kPi * (((e % d) + d) % d) / d;
    out.push_back(std::polar(1.0, theta));
  }
  return out;
}

bool RootOfUnityPoint::is_primitive() const {
  for (int e : exponents)
    if (std::gcd(((e % d) + d) % d, d) != 1) return false;
  return true;
}

bool ExtClassRep::equals(const ExtClassRep& other, double tol) const {
  if (n != other.n) return false;
  // (v - w) / (2 pi i)^n: real iff the class difference lies on the quotient line
  cplx q = value - other.value;
  for (int i = 0; i < n; ++i) q /= cplx(0.0, 2.0 * kPi);
  return std::abs(q.imag()) <= tol;
}

double ExtClassRep::well_defined_part() const {
  // the quotient line (2 pi i)^n R is R for even n and i R for odd n, so the
  // surviving coordinate is Im v (even n) or Re v (odd n)
  return (n % 2 == 1) ? value.real() : value.imag();
}

ExtClassRep ext_class(int n, cplx v) {
  if (n < 1) throw domain_error("ext_class: twist must be >= 1");
  return {n, v};
}

std::vector<ExtClassRep> specialize_pol(const RootOfUnityPoint& zeta, int kmax,
                                        const EvalConfig& cfg) {
  if (zeta.exponents.size() != 1) throw domain_error("specialize_pol: g = 1 only");
  if (((zeta.exponents[0] % zeta.d) + zeta.d) % zeta.d == 0)
    throw domain_error("specialize_pol: zeta = 1 is on the divisor");
  const cplx z = zeta.coordinates()[0];
  std::vector<ExtClassRep> out;
  out.reserve(kmax + 1);
  for (int k = 0; k <= kmax; ++k)
    out.push_back({k + 1, i_power(k) * d_bwr(k + 1, z, cfg)});
  return out;
}

CorollaryReport verify_corollary(int d, int kmax, double tol, const EvalConfig& cfg) {
  if (d < 2) throw domain_error("verify_corollary requires d >= 2");
  CorollaryReport rep;
  rep.d = d;
  rep.kmax = kmax;
  rep.tol = tol;
  bool pass_prim = true, pass_all = true;
  for (int e = 1; e < d; ++e) {
    RootOfUnityPoint zeta{d, {e}};
    const cplx z = zeta.coordinates()[0];
    const auto classes = specialize_pol(zeta, kmax, cfg);
    const bool prim = zeta.is_primitive();
    for (int k = 0; k <= kmax; ++k) {
      CorollaryRow row;
      row.exponent = e;
      row.primitive = prim;
      row.k = k;
      row.d_value = d_bwr(k + 1, z, cfg);
      row.li_value = li(k + 1, z, cfg);
      row.identity_gap = std::abs(row.d_value - (i_power(k) * row.li_value).real());
      const ExtClassRep expected = ext_class(k + 1, i_power(2 * k) * row.li_value);
      cplx q = classes[k].value - expected.value;
      for (int i = 0; i < k + 1; ++i) q /= cplx(0.0, 2.0 * kPi);
      row.class_residual = std::abs(q.imag());
      row.pass = row.identity_gap < tol && classes[k].equals(expected, tol);
      rep.rows.push_back(row);
      pass_all = pass_all && row.pass;
      if (prim) pass_prim = pass_prim && row.pass;
    }
  }
  rep.pass = pass_prim;
  rep.pass_all_nontrivial = pass_all;
  return rep;
}

}  // namespace polylog
