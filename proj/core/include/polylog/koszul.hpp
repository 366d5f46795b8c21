#ifndef POLYLOG_KOSZUL_HPP
#define POLYLOG_KOSZUL_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "polylog/log_vector.hpp"
#include "polylog/multi_index.hpp"
#include "polylog/rational_linalg.hpp"

namespace polylog {

// Monomial multidegree of polynomial coefficients t^a.
using MultiDegree = MultiIndex;

// The polynomial logarithmic de Rham complex in one monomial multidegree a:
// level m is spanned by t^a omega^k (x) dlog t_I with |I| = m, and the
// differential acts through the commuting operators a_mu + omega_mu.
struct KoszulSlice {
  int g = 0, N = 0;
  MultiDegree a = MultiIndex::zero(1);
  // basis per level: (position of k in enumerate_multi_indices(g,N), subset mask)
  std::vector<std::vector<std::pair<int, std::uint32_t>>> basis;
  std::vector<IntMatrix> d;  // d[m]: level m -> level m+1, m = 0..g-1

  long long level_dim(int m) const { return static_cast<long long>(basis[m].size()); }
};

KoszulSlice build_slice(int g, int N, const MultiDegree& a);

// Exact d(m+1) o d(m) == 0 check for every consecutive pair.
bool slice_d_squared_zero(const KoszulSlice& s);

// dim H^m for m = 0..g, by exact ranks.
std::vector<long long> slice_cohomology_dims(const KoszulSlice& s);

// dim H^m of the a = 0 slice (= the full de Rham cohomology dimension).
long long cohomology_dim(int g, int N, int m);

// Expected dimension: binom(N+g-1-m, g-1-m) * binom(N+g, m) for m < g, 1 at m = g.
long long dimension_formula(int g, int N, int m);

struct DimensionRow {
  int m;
  long long computed;
  long long expected;
  bool match;
};

struct DimensionReport {
  int g, N;
  std::vector<DimensionRow> rows;
  bool pass;
};

DimensionReport verify_dimension_formula(int g, int N);

// All a in {0..bound}^g.
std::vector<MultiDegree> multidegree_box(int g, int bound);

// --- symbolic forms ----------------------------------------------------------

// Polynomial in t with exact rational coefficients, keyed by multidegree.
using RatPoly = std::map<std::uint64_t, Rational>;

// A global section of the polynomial logarithmic de Rham complex:
// sum over (k, I) of  f_{k,I}(t) omega^k (x) dlog t_I  with |I| = degree.
struct LogFormSymbolic {
  int g = 0, N = 0, degree = 0;
  std::map<std::pair<std::uint64_t, std::uint32_t>, RatPoly> terms;

  void add(const MultiIndex& k, std::uint32_t mask, const MultiDegree& a, const Rational& c);
  bool is_zero() const;
};

// Full covariant differential: (1 (x) d) plus the shift-by-omega_mu term,
// truncated at |k| <= N.
LogFormSymbolic nabla_symbolic(const LogFormSymbolic& xi);

LogFormSymbolic form_sub(const LogFormSymbolic& x, const LogFormSymbolic& y);

// Reduces a nabla-closed form of degree m < g to a cohomologous representative
// supported on |k| = N.  Throws not_a_cocycle / solve_failed.
LogFormSymbolic reduce_cocycle(const LogFormSymbolic& xi, int m);

// --- coordinates on a multidegree box ---------------------------------------

// Fixed ordering of the (a, k, I) basis of degree-m forms supported on a box
// of multidegrees; interface between symbolic forms and exact matrices.
struct BoxBasis {
  int g = 0, N = 0, degree = 0;
  std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint32_t>> items;  // (a, k, I)
  std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint32_t>, std::size_t> index;
};

BoxBasis box_basis(int g, int N, const std::vector<MultiDegree>& box, int degree);

// Matrix of nabla from one box basis to the next (degree + 1).
RationalMatrix box_differential(const BoxBasis& from, const BoxBasis& to);

std::vector<Rational> form_to_vector(const LogFormSymbolic& f, const BoxBasis& basis);
LogFormSymbolic vector_to_form(const std::vector<Rational>& v, const BoxBasis& basis);

// --- residue -----------------------------------------------------------------

// A top form with first-order poles along every Z_mu, presented as
// sum_k f_k(t) omega^k (x) omega^twist (x) dt_1/(t_1-1) ^ ... ^ dt_g/(t_g-1).
struct ResidueForm {
  int g = 0, N = 0, twist = 0;
  std::map<std::uint64_t, RatPoly> coeffs;  // k -> f_k
};

// The geometric class xi_N: f = 1 on k = 0, twist g.
ResidueForm xi_residue_form(int g, int N);

// Coefficientwise evaluation at t = (1,...,1); drops the twist by g.
// Requires twist == g (else not_residue_presentable).
LogVector residue(const ResidueForm& form);

}  // namespace polylog

#endif
