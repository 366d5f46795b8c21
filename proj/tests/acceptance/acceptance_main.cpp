// Acceptance suite: runs every stated criterion at its stated tolerance and
// prints one pass/fail line per criterion.  Exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "../box_cocycle_util.hpp"
#include "polylog/cocycle.hpp"
#include "polylog/koszul.hpp"
#include "polylog/log_vector.hpp"
#include "polylog/multi_index.hpp"
#include "polylog/specfun.hpp"
#include "polylog/specialization.hpp"

using namespace polylog;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criterion 1: dimension formula ----------------------------------------
void criterion_dimension_formula() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::string bad;
  for (int g = 1; g <= 4; ++g) {
    for (int N = 0; N <= 6; ++N) {
      const auto dims = slice_cohomology_dims(build_slice(g, N, MultiIndex::zero(g)));
      for (int m = 0; m <= g; ++m) {
        const long long expect = dimension_formula(g, N, m);
        if (dims[m] != expect) {
          pass = false;
          bad += " (g=" + std::to_string(g) + ",N=" + std::to_string(N) +
                 ",m=" + std::to_string(m) + ":" + std::to_string(dims[m]) +
                 "!=" + std::to_string(expect) + ")";
        }
      }
    }
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail), "g<=4, N<=6, exact integer equality, %.1fs",
                seconds_since(t0));
  report(1, "de Rham dimension formula", pass, pass ? detail : detail + bad);
}

// ---- criterion 2: off-zero exactness ----------------------------------------
void criterion_offzero_exactness() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  long long slices = 0;
  for (int g = 1; g <= 3; ++g) {
    for (int N = 0; N <= 4; ++N) {
      for (const auto& a : multidegree_box(g, 2)) {
        if (a.total() == 0) continue;
        ++slices;
        for (long long h : slice_cohomology_dims(build_slice(g, N, a)))
          if (h != 0) pass = false;
      }
    }
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail), "%lld slices with a != 0 all exact, %.1fs", slices,
                seconds_since(t0));
  report(2, "off-zero multidegree exactness", pass, detail);
}

// ---- criterion 3: functional equations + single-valuedness -------------------
void criterion_functional_equations() {
  const auto t0 = std::chrono::steady_clock::now();
  EvalConfig cfg;
  SampleBox box;
  box.r_min = 0.35;
  box.r_max = 2.6;
  box.theta_min = 0.1;
  box.margin_one = 0.25;
  const auto pts = sample_points(1, 500, 20250809, box);
  double max_res = 0.0;
  for (const auto& p : pts)
    for (int m = 1; m <= 10; ++m)
      max_res = std::max(max_res, std::abs(functional_equation_residual(m, p.t[0], cfg)));
  const bool fe_pass = max_res < 1e-9;

  // single-valuedness probe: one-sided limits at eps = 1e-5 by linear
  // Richardson extrapolation (cancels the O(eps) approach term)
  double max_gap = 0.0;
  const double eps = 1e-5;
  for (double x : {1.5, 2.0, 5.0}) {
    for (int m = 1; m <= 8; ++m) {
      const double above =
          2.0 * d_bwr(m, cplx(x, eps), cfg) - d_bwr(m, cplx(x, 2.0 * eps), cfg);
      const double below =
          2.0 * d_bwr(m, cplx(x, -eps), cfg) - d_bwr(m, cplx(x, -2.0 * eps), cfg);
      max_gap = std::max(max_gap, std::abs(above - below));
    }
  }
  const bool sv_pass = max_gap < 1e-6;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "max |residual| = %.2e (tol 1e-9) over 500 pts, m<=10; cut gap = %.2e "
                "(tol 1e-6), %.1fs",
                max_res, max_gap, seconds_since(t0));
  report(3, "functional equations and single-valuedness", fe_pass && sv_pass, detail);
}

// ---- criterion 4: cocycle verification ---------------------------------------
void criterion_cocycle() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  double worst_g1 = 0.0, worst_g23 = 0.0;
  const double h = 5e-5;
  for (int N = 0; N <= 6; ++N) {
    const auto pts = sample_points(1, 100, 4000 + N);
    const auto rep = verify_cocycle(1, N, pts, 1e-6, h);
    worst_g1 = std::max(worst_g1, rep.max_residual);
    pass = pass && rep.pass;
  }
  for (int g = 2; g <= 3; ++g) {
    for (int N = 0; N <= 4; ++N) {
      const auto pts = sample_points(g, 50, 4100 + 10 * g + N);
      const auto rep = verify_cocycle(g, N, pts, 1e-5, h);
      worst_g23 = std::max(worst_g23, rep.max_residual);
      pass = pass && rep.pass;
    }
  }
  double worst_order_lo = 10.0, worst_order_hi = 0.0;
  for (int g = 1; g <= 3; ++g) {
    const auto pts = sample_points(g, 3, 4987 + g);
    for (const auto& p : pts) {
      const double slope = fd_convergence_order(g, 3, p, {1e-3, 5e-4, 2.5e-4});
      worst_order_lo = std::min(worst_order_lo, slope);
      worst_order_hi = std::max(worst_order_hi, slope);
      pass = pass && slope >= 1.7 && slope <= 2.3;
    }
  }
  char detail[200];
  std::snprintf(detail, sizeof(detail),
                "g=1 max residual %.2e (tol 1e-6, 100 pts, N<=6); g=2,3 max %.2e (tol "
                "1e-5, 50 pts, N<=4); FD order in [%.2f, %.2f], %.1fs",
                worst_g1, worst_g23, worst_order_lo, worst_order_hi, seconds_since(t0));
  report(4, "cocycle identity nabla(alpha) = eta - xi", pass, detail);
}

// ---- criterion 5: horizontality -----------------------------------------------
void criterion_horizontality() {
  const auto t0 = std::chrono::steady_clock::now();
  bool sym_pass = true;
  long long checked = 0;
  for (int g = 1; g <= 3; ++g) {
    const int N = 6;
    for (const MultiIndex& k : enumerate_multi_indices(g, N)) {
      ++checked;
      if (!u_horizontality_check(g, N, k).exact_zero) sym_pass = false;
    }
  }
  // numeric check on (2 pi)^{-|k|}-normalized horizontal sections
  double max_res = 0.0;
  for (int g = 1; g <= 2; ++g) {
    const int N = 3;
    const auto pts = sample_points(g, 5, 512 + g);
    for (const MultiIndex& k : enumerate_multi_indices(g, 3)) {
      auto section = [&](const PointSample& q) {
        FormValue v(g, N, 0, Basis::e);
        const int rem = N - k.total();
        for (int tot = 0; tot <= rem; ++tot)
          for (const MultiIndex& m : enumerate_of_total(g, tot)) {
            double f = 1.0;
            for (int nu = 0; nu < g; ++nu) {
              const double theta = std::arg(q.t[nu]);
              for (int i = 1; i <= m[nu]; ++i) f *= -theta / i;
            }
            v.add(k.plus(m), 0, 0, f);
          }
        return v;
      };
      for (const auto& p : pts)
        max_res = std::max(max_res, nabla_numeric(section, p, 2e-6).max_abs());
    }
  }
  const bool num_pass = max_res < 1e-7;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "%lld symbolic cancellations exact (|k|<=6, g<=3); numeric residual %.2e "
                "(tol 1e-7), %.1fs",
                checked, max_res, seconds_since(t0));
  report(5, "horizontality of the u sections", sym_pass && num_pass, detail);
}

// ---- criterion 6: residue ------------------------------------------------------
void criterion_residue() {
  bool pass = true;
  for (int g = 1; g <= 3; ++g) {
    for (int N = 0; N <= 6; ++N) {
      const LogVector r = residue(xi_residue_form(g, N));
      if (r.twist() != 0) pass = false;
      for (const auto& [key, c] : r.coeffs()) {
        const cplx expect =
            (key == MultiIndex::zero(g).key()) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
        if (c != expect) pass = false;
      }
      if (r.coeff(MultiIndex::zero(g)) != cplx(1.0, 0.0)) pass = false;
    }
  }
  report(6, "residue of the geometric class is the unit section", pass,
         "exact equality, g<=3, N<=6");
}

// ---- criterion 7: root-of-unity specialization ----------------------------------
void criterion_specialization() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  double worst_identity = 0.0, worst_class = 0.0;
  for (int d : {2, 3, 4, 6, 12}) {
    const CorollaryReport rep = verify_corollary(d, 8, 1e-11);
    for (const auto& row : rep.rows) {
      worst_identity = std::max(worst_identity, row.identity_gap);
      worst_class = std::max(worst_class, row.class_residual);
      if (row.identity_gap >= 1e-11 || row.class_residual >= 1e-10) pass = false;
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "max identity gap %.2e (tol 1e-11), max class residual %.2e (tol 1e-10), "
                "%.1fs",
                worst_identity, worst_class, seconds_since(t0));
  report(7, "specialization at roots of unity", pass, detail);
}

// ---- criterion 8: reduction vs brute-force classes -------------------------------
void criterion_reduction() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  long long total = 0;
  for (int g = 1; g <= 2; ++g) {
    for (int N = 0; N <= 3; ++N) {
      for (int m = 0; m < g; ++m) {
        const auto c = polylog_test::make_box_complex(g, N, m, 2);
        const auto cocycles = polylog_test::random_cocycles(c, 20, 81000 + g * 100 + N * 10 + m);
        for (const auto& xi : cocycles) {
          ++total;
          const LogFormSymbolic red = reduce_cocycle(xi, m);
          if (!nabla_symbolic(red).is_zero()) pass = false;
          for (const auto& [tk, poly] : red.terms) {
            std::vector<int> comps(g);
            for (int mu = 0; mu < g; ++mu)
              comps[mu] = static_cast<int>((tk.first >> (8 * mu)) & 0xff);
            if (MultiIndex(comps).total() != N && !poly.empty()) pass = false;
          }
          if (!polylog_test::same_class(c, xi, red)) pass = false;
        }
      }
    }
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail), "%lld random cocycles, exact class equality, %.1fs",
                total, seconds_since(t0));
  report(8, "cocycle reduction matches brute-force classes", pass, detail);
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion_dimension_formula();
  criterion_offzero_exactness();
  criterion_functional_equations();
  criterion_cocycle();
  criterion_horizontality();
  criterion_residue();
  criterion_specialization();
  criterion_reduction();
  std::printf("acceptance: %d of 8 criteria passed in %.1fs\n", 8 - failures,
              seconds_since(t0));
  return failures;
}
