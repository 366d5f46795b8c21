#ifndef POLYLOG_LOG_VECTOR_HPP
#define POLYLOG_LOG_VECTOR_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polylog/multi_index.hpp"

namespace polylog {

using cplx = std::complex<double>;

// Fiber bases of the truncated module: omega (algebraic, connection shifts by
// dlog t_mu), u (horizontal, branch-dependent), e (real structure of the
// Dolbeault model, connection shifts by Im dlog t_mu).
enum class Basis { omega, u, e };

std::string to_string(Basis b);

// Finite coefficient vector over multi-indices |k| <= N, tagged with the
// basis kind and the Tate twist n.  A branch record (one log t_mu value per
// coordinate) is carried iff kind == u.
class LogVector {
 public:
  LogVector(int g, int N, int twist, Basis kind);

  int g() const { return g_; }
  int N() const { return N_; }
  int twist() const { return twist_; }
  Basis kind() const { return kind_; }

  const std::vector<cplx>& branch() const { return branch_; }
  void set_branch(std::vector<cplx> b);

  cplx coeff(const MultiIndex& k) const;
  void set_coeff(const MultiIndex& k, cplx c);
  void add_coeff(const MultiIndex& k, cplx c);
  const std::map<std::uint64_t, cplx>& coeffs() const { return coeffs_; }
  // decode a stored key back into a MultiIndex
  MultiIndex unkey(std::uint64_t key) const;

  bool is_zero(double tol = 0.0) const;
  double max_abs_diff(const LogVector& other) const;

 private:
  int g_, N_, twist_;
  Basis kind_;
  std::vector<cplx> branch_;
  std::map<std::uint64_t, cplx> coeffs_;
};

// --- base change -----------------------------------------------------------

// omega -> e at a point with all t_mu != 0 (throws zero_coordinate).
LogVector omega_to_e(const LogVector& v, const std::vector<cplx>& t);
LogVector e_to_omega(const LogVector& v, const std::vector<cplx>& t);

// omega -> u for a chosen branch (branch[mu] must satisfy
// exp(branch[mu]) == t[mu] within 1e-10, else branch_mismatch).
LogVector omega_to_u(const LogVector& v, const std::vector<cplx>& t,
                     const std::vector<cplx>& branch);
LogVector u_to_omega(const LogVector& v);

// multiplication by the degree-one element in slot mu (the shift operator),
// truncated at |k| <= N; valid in the omega basis.
LogVector shift_omega(const LogVector& v, int mu);

// --- connection ------------------------------------------------------------

enum class OneForm { dlog, im_dlog };

struct ConnectionEntry {
  MultiIndex from;
  MultiIndex to;  // from bumped at mu
  int mu;
  OneForm form;
};

// Formal matrix of the connection in the given basis: shift entries tagged
// dt_mu/t_mu (omega), Im dt_mu/t_mu (e), or none at all (u is horizontal).
struct ConnectionMatrix {
  Basis kind;
  int g, N;
  std::vector<ConnectionEntry> entries;
};

ConnectionMatrix connection_matrix(Basis kind, int g, int N);

// --- filtrations ------------------------------------------------------------

// Smallest W-level containing v and largest F-level containing v:
//   weight = -2 * min present |k| - 2n,   hodge = -max present |k| - n.
// Membership: v in W_w iff w >= weight; v in F^p iff p <= hodge.
struct FiltrationDegree {
  int weight;
  int hodge;
  bool in_weight(int w) const { return w >= weight; }
  bool in_hodge(int p) const { return p <= hodge; }
};

FiltrationDegree filtration_degree(const LogVector& v);

// --- splitting at torsion points --------------------------------------------

// Associated graded at a root-of-unity point: coefficients regrouped by total
// degree, basis relabeled to symmetric monomials.  For g == 1 the Tate twist
// is merged into the degree (omega^k (x) omega^n -> omega^{k+n}).
struct SplitVector {
  int g;
  int twist;  // remaining twist (0 when merged)
  std::map<int, std::map<std::uint64_t, cplx>> components;  // degree -> k -> coeff
};

SplitVector splitting_pullback(const LogVector& v, const std::vector<cplx>& zeta, int order_d);

// --- symbolic horizontality --------------------------------------------------

// Expands nabla(u^k) over Log^N formally (rational coefficients, formal
// log t_nu symbols) and reports whether the two transformation terms cancel
// exactly.
struct HorizontalityCheck {
  bool exact_zero;
  std::size_t terms_expanded;
};

HorizontalityCheck u_horizontality_check(int g, int N, const MultiIndex& k);

// --- serialization -----------------------------------------------------------

// {g, N, twist, kind, entries:[{k:[...], re, im}]}, plus "branch" iff kind=u.
std::string to_json_string(const LogVector& v);
LogVector log_vector_from_json(const std::string& json_text);

}  // namespace polylog

#endif
