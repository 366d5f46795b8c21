#ifndef POLYLOG_SPECIALIZATION_HPP
#define POLYLOG_SPECIALIZATION_HPP

#include <vector>

#include "polylog/specfun.hpp"

namespace polylog {

// A point whose coordinates are d-th roots of unity, zeta_mu = exp(2 pi i
// exponent_mu / d).
struct RootOfUnityPoint {
  int d = 2;
  std::vector<int> exponents;  // mod d

  std::vector<cplx> coordinates() const;
  bool is_primitive() const;  // gcd(exponent, d) == 1 in every slot
};

// Element of C modulo the line (2 pi i)^n R.
struct ExtClassRep {
  int n = 1;       // twist >= 1
  cplx value;

  // v == w  iff  (v - w)/(2 pi i)^n is real within tol.
  bool equals(const ExtClassRep& other, double tol = 1e-10) const;

  // The coordinate of the class along the line complementary to
  // (2 pi i)^n R: Re for odd n, Im for even n (up to sign of i^n).
  double well_defined_part() const;
};

ExtClassRep ext_class(int n, cplx v);

// Pullback of the polylogarithm class to a torsion point of the g = 1 torus:
// entry k is the class of i^k D_{k+1}(zeta) in C/(2 pi i)^{k+1} R, equal to
// the class of (-1)^k Li_{k+1}(zeta).
std::vector<ExtClassRep> specialize_pol(const RootOfUnityPoint& zeta, int kmax,
                                        const EvalConfig& cfg = {});

struct CorollaryRow {
  int exponent;     // zeta = exp(2 pi i exponent / d)
  bool primitive;
  int k;
  double d_value;        // D_{k+1}(zeta)
  cplx li_value;         // Li_{k+1}(zeta)
  double identity_gap;   // |D_{k+1}(zeta) - Re(i^k Li_{k+1}(zeta))|
  double class_residual; // Im part of the quotient test
  bool pass;
};

struct CorollaryReport {
  int d = 0, kmax = 0;
  double tol = 0.0;
  std::vector<CorollaryRow> rows;
  bool pass = false;           // over primitive roots (the stated hypothesis)
  bool pass_all_nontrivial = false;
};

// Checks, for every nontrivial d-th root zeta and k <= kmax, the identity
// D_{k+1}(zeta) = Re(i^k Li_{k+1}(zeta)) and the ext-class equality against
// (-1)^k Li_{k+1}(zeta).  Primitive and non-primitive roots are reported
// separately.
CorollaryReport verify_corollary(int d, int kmax, double tol, const EvalConfig& cfg = {});

}  // namespace polylog

#endif
