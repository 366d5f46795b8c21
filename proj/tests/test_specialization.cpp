#include <doctest.h>

#include <cmath>
#include <random>

#include "polylog/errors.hpp"
#include "polylog/log_vector.hpp"
#include "polylog/specialization.hpp"

using namespace polylog;

namespace {
const double kPi = 3.14159265358979323846264338327950288;
}

TEST_CASE("ext_class: quotient line") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-1e3, 1e3);
  // the line (2 pi i) R is killed for n = 1
  for (int i = 0; i < 50; ++i) {
    const double r = dist(rng);
    CHECK(ext_class(1, cplx(0.0, 2.0 * kPi * r)).equals(ext_class(1, 0.0)));
  }
  CHECK(ext_class(1, cplx(-std::log(2.0), 0.0)).well_defined_part() ==
        doctest::Approx(-std::log(2.0)).epsilon(1e-15));
  // n = 2: the line is real, the class is determined by Im v
  const cplx v(0.37, -1.21);
  CHECK(ext_class(2, v).equals(ext_class(2, v + 17.0)));
  CHECK(!ext_class(2, v).equals(ext_class(2, v + cplx(0.0, 1e-6))));
  CHECK(ext_class(2, v).well_defined_part() == v.imag());
  CHECK_THROWS_AS(ext_class(0, v), domain_error);
}

TEST_CASE("ext_class: equivalence relation, invariant under the quotient line") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(-50.0, 50.0);
  for (int n = 1; n <= 4; ++n) {
    const cplx v(dist(rng), dist(rng));
    cplx line = 1.0;
    for (int i = 0; i < n; ++i) line *= cplx(0.0, 2.0 * kPi);
    const ExtClassRep a = ext_class(n, v);
    CHECK(a.equals(a));
    for (int trial = 0; trial < 1000; ++trial) {
      const ExtClassRep b = ext_class(n, v + line * dist(rng));
      CHECK(a.equals(b));
      CHECK(b.equals(a));
    }
    // transitivity spot check
    const ExtClassRep c = ext_class(n, v + line * 3.7);
    const ExtClassRep d = ext_class(n, v - line * 11.1);
    CHECK((c.equals(d) == (c.equals(a) && a.equals(d))));
  }
}

TEST_CASE("specialize_pol: frozen values") {
  EvalConfig cfg;
  // zeta = -1, k = 0: the class of -log 2
  const auto at_minus1 = specialize_pol({2, {1}}, 0, cfg);
  REQUIRE(at_minus1.size() == 1);
  CHECK(at_minus1[0].n == 1);
  CHECK(at_minus1[0].equals(ext_class(1, cplx(-std::log(2.0), 0.0)), 1e-14));
  CHECK(at_minus1[0].well_defined_part() ==
        doctest::Approx(-std::log(2.0)).epsilon(1e-14));

  // zeta = i, k = 1: the class of -Li_2(i); well-defined part -Catalan
  const auto at_i = specialize_pol({4, {1}}, 1, cfg);
  const cplx li2_i = li(2, cplx(0.0, 1.0), cfg);
  CHECK(at_i[1].n == 2);
  CHECK(at_i[1].equals(ext_class(2, -li2_i), 1e-13));
  CHECK(std::abs(at_i[1].well_defined_part() + 0.9159655941772190) < 1e-12);

  // all k: the class equals (-1)^k Li_{k+1}(zeta)
  for (int d : {3, 5, 8}) {
    const RootOfUnityPoint zeta{d, {1}};
    const cplx z = zeta.coordinates()[0];
    const auto classes = specialize_pol(zeta, 6, cfg);
    for (int k = 0; k <= 6; ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      CHECK(classes[k].equals(ext_class(k + 1, sign * li(k + 1, z, cfg)), 1e-12));
    }
  }

  CHECK_THROWS_AS(specialize_pol({2, {0}}, 3, cfg), domain_error);   // zeta = 1
  CHECK_THROWS_AS(specialize_pol({4, {1, 2}}, 3, cfg), domain_error);  // g != 1
}

TEST_CASE("specialize_pol depends only on the point, not its presentation") {
  EvalConfig cfg;
  const auto a = specialize_pol({4, {1}}, 5, cfg);
  const auto b = specialize_pol({8, {2}}, 5, cfg);
  const auto c = specialize_pol({12, {3}}, 5, cfg);
  for (int k = 0; k <= 5; ++k) {
    CHECK(std::abs(a[k].value - b[k].value) < 1e-13);
    CHECK(std::abs(a[k].value - c[k].value) < 1e-13);
  }
}

TEST_CASE("verify_corollary") {
  const CorollaryReport r2 = verify_corollary(2, 6, 1e-12);
  CHECK(r2.pass);
  CHECK(r2.pass_all_nontrivial);
  // d=2, k=1: D_2(-1) = 0 and Im Li_2(-1) = 0; the class equality carries the
  // well-defined content (Li_2(-1) = -pi^2/12)
  for (const auto& row : r2.rows) {
    if (row.k != 1) continue;
    CHECK(std::abs(row.d_value) < 1e-14);
    CHECK(std::abs(row.li_value.imag()) < 1e-14);
    CHECK(std::abs(row.li_value.real() + kPi * kPi / 12.0) < 1e-14);
  }

  const CorollaryReport r6 = verify_corollary(6, 8, 1e-11);
  CHECK(r6.pass);
  CHECK(r6.pass_all_nontrivial);
  // primitive flags: exponents 1 and 5 only
  for (const auto& row : r6.rows)
    CHECK(row.primitive == (row.exponent == 1 || row.exponent == 5));

  CHECK_THROWS_AS(verify_corollary(1, 3, 1e-10), domain_error);
}

TEST_CASE("splitting pullback matches specialization entries") {
  EvalConfig cfg;
  const RootOfUnityPoint zeta{6, {1}};
  const cplx z = zeta.coordinates()[0];
  const int kmax = 5;
  // alpha at zeta as an e-basis vector with twist 1
  LogVector alpha(1, kmax, 1, Basis::e);
  for (int m = 0; m <= kmax; ++m)
    alpha.set_coeff(MultiIndex({m}), d_bwr(m + 1, z, cfg));
  const SplitVector split = splitting_pullback(alpha, {z}, 6);
  const auto classes = specialize_pol(zeta, kmax, cfg);
  for (int k = 0; k <= kmax; ++k) {
    const cplx coeff = split.components.at(k + 1).at(MultiIndex({k + 1}).key());
    CHECK(std::abs(coeff - classes[k].value) < 1e-12);
  }
}
