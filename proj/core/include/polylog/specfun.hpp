#ifndef POLYLOG_SPECFUN_HPP
#define POLYLOG_SPECFUN_HPP

#include <complex>
#include <string>

#include "polylog/errors.hpp"

namespace polylog {

using cplx = std::complex<double>;

// Side from which points numerically on the cut [1, oo) are approached.
enum class CutSide { above, below };

struct EvalConfig {
  double series_tol = 1e-16;  // stop a series when |term| < series_tol * |sum|
  int max_terms = 4096;
  CutSide cut_side = CutSide::above;

  void validate() const {
    if (!(series_tol > 0.0 && series_tol < 1.0))
      throw domain_error("EvalConfig: series_tol must lie in (0,1)");
    if (max_terms < 64) throw domain_error("EvalConfig: max_terms must be >= 64");
  }
};

// Which analytic-continuation regime an evaluation went through.
enum class LiRegime { closed_form, series, near_one, inversion, path };

std::string to_string(LiRegime r);

struct LiResult {
  cplx value;
  LiRegime regime;
};

// Principal branch of Li_k on C \ [1,oo).  Points with Im t == 0 and
// Re t >= 1 are resolved by cfg.cut_side.  Li_k(1) = zeta(k) for k >= 2;
// k = 1 throws pole_at_one there.
LiResult li_ex(int k, cplx t, const EvalConfig& cfg = {});
cplx li(int k, cplx t, const EvalConfig& cfg = {});

// Independent evaluation route: integrates the tower
// dLi_1 = dt/(1-t), dLi_{j+1} = Li_j dt/t along the segment [t0, t] with a
// series seed at t0.  Slow but algorithmically disjoint from li(); used as the
// cross-checking oracle.
cplx li_path(int k, cplx t, int steps = 16384);

// L_{m+1}(t) = sum_{k=0}^{m} (-log|t|)^{m-k}/(m-k)! Li_{k+1}(t), m >= 0.
// Off the unit disc the same finite formula is used with continued Li values.
cplx l_big(int m, cplx t, const EvalConfig& cfg = {});

// Bloch-Wigner-Ramakrishnan function D_m(t) = Im(i^m L_m(t)), m >= 1.
// Single-valued real analytic on C \ {0, 1}.
double d_bwr(int m, cplx t, const EvalConfig& cfg = {});

// D_m(1/t) - D_m(t) for even m, D_m(1/t) - D_m(t) - (log|t|)^m/m! for odd m.
// Vanishes identically in exact arithmetic.
double functional_equation_residual(int m, cplx t, const EvalConfig& cfg = {});

// zeta(k) for integer k >= 2, via Euler-Maclaurin summation.
double zeta_value(int k);

// Bernoulli number B_n (B_1 = -1/2 convention), exact value rounded to double.
double bernoulli_number(int n);

// Bernoulli polynomial B_n(x) at a complex argument.
cplx bernoulli_poly(int n, cplx x);

}  // namespace polylog

#endif
