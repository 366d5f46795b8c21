#ifndef POLYLOG_COCYCLE_HPP
#define POLYLOG_COCYCLE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "polylog/form_value.hpp"
#include "polylog/specfun.hpp"

namespace polylog {

// A point of the torus off the divisors t_mu = 0, t_mu = 1.
struct PointSample {
  std::vector<cplx> t;
};

// Deterministic seeded sampling in a polyannulus, bounded away from
// {0}, {1} and the per-coordinate ray [1,oo).
struct SampleBox {
  double r_min = 0.3;
  double r_max = 0.85;
  double theta_min = 0.35;   // |arg t_mu| >= theta_min keeps the cut at bay
  double margin_one = 0.25;  // |t_mu - 1| >= margin_one
};

std::vector<PointSample> sample_points(int g, int count, std::uint64_t seed,
                                       const SampleBox& box = {});

// xi_N = omega^0(g) (x) dt_1/(t_1-1) ^ ... ^ dt_g/(t_g-1): a (g,0)-form with a
// single omega-basis component at k = 0.
FormValue xi_at(int g, int N, const PointSample& p);

// eta = Re(xi) in the e basis.
FormValue eta_at(int g, int N, const PointSample& p);

// eta - xi, both in the e basis.
FormValue eta_minus_xi_at(int g, int N, const PointSample& p);

// The (2g-2)-form alpha: for g = 1, sum_m D_{m+1}(t) e^m(1); for g > 1 the
// alternating sum over mu of the coordinate-mu D-series wedged with the
// holomorphic factors below mu and the conjugated factors above mu.
FormValue alpha_at(int g, int N, const PointSample& p, const EvalConfig& cfg = {});

// Covariant derivative by central finite differences in the 2g real
// coordinate directions plus the exact e-basis connection term at p.
FormValue nabla_numeric(const std::function<FormValue(const PointSample&)>& section,
                        const PointSample& p, double h);

// Closed-form expansion of nabla(xi) at p: the coefficient-derivative terms
// and the connection terms are returned separately; their sum cancels
// identically.
struct XiClosure {
  FormValue d_part;
  FormValue connection_part;
  double residual;  // max |d_part + connection_part|
};

XiClosure nabla_xi_analytic(int g, int N, const PointSample& p);

struct VerificationReport {
  int g = 0, N = 0;
  double tol = 0.0;
  double fd_step = 0.0;
  std::vector<double> residuals;       // per point, nabla(alpha) - (eta - xi)
  double max_residual = 0.0;
  double max_closure_residual = 0.0;   // analytic nabla(xi), nabla(eta)
  bool pass = false;
};

VerificationReport verify_cocycle(int g, int N, const std::vector<PointSample>& points,
                                  double tol, double fd_step, const EvalConfig& cfg = {});

// Least-squares slope of log(residual) against log(h); ~2 for central
// differences.
double fd_convergence_order(int g, int N, const PointSample& p, const std::vector<double>& steps,
                            const EvalConfig& cfg = {});

// Weight/Hodge membership of the triple components from the bookkeeping
// rules (fiber weight, form weight, Cech shift, decalage).
enum class CocycleLabel { xi, eta, alpha };

struct FiltrationCheck {
  bool in_w0;
  std::optional<bool> in_f0;  // empty when membership is not claimed
  int w_intrinsic;            // fiber + form weight of the heaviest term
  int f_intrinsic;            // fiber + form Hodge level of the lightest term
};

FiltrationCheck filtration_check(CocycleLabel label, int g, int N);

}  // namespace polylog

#endif
