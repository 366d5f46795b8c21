#ifndef POLYLOG_FORM_VALUE_HPP
#define POLYLOG_FORM_VALUE_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "polylog/log_vector.hpp"
#include "polylog/multi_index.hpp"

namespace polylog {

// Pointwise value of a module-coefficient (p,q)-form in the coordinate
// coframe {dt_mu, dtbar_mu}: coefficients indexed by
// (multi-index k, holomorphic index set, antiholomorphic index set).
class FormValue {
 public:
  using Key = std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>;

  FormValue(int g, int N, int twist, Basis kind);

  int g() const { return g_; }
  int N() const { return N_; }
  int twist() const { return twist_; }
  Basis kind() const { return kind_; }

  const std::map<Key, cplx>& entries() const { return entries_; }
  cplx entry(const MultiIndex& k, std::uint32_t hol, std::uint32_t anti) const;
  void set(const MultiIndex& k, std::uint32_t hol, std::uint32_t anti, cplx c);
  void add(const MultiIndex& k, std::uint32_t hol, std::uint32_t anti, cplx c);

  // left-wedge by c * dt_mu (antiholomorphic = false) or c * dtbar_mu (true),
  // applied to every entry; repeated coordinates vanish.
  void wedge_accumulate(const FormValue& src, int mu, bool antiholomorphic, cplx c);

  FormValue& operator+=(const FormValue& o);
  FormValue& operator-=(const FormValue& o);
  FormValue& operator*=(cplx s);

  double max_abs() const;
  double max_abs_diff(const FormValue& o) const;

  MultiIndex unkey(std::uint64_t key) const;

 private:
  int g_, N_, twist_;
  Basis kind_;
  std::map<Key, cplx> entries_;
};

// Complex conjugate of the section: conjugates coefficients, swaps the
// holomorphic and antiholomorphic slots (with the reordering sign), fixes the
// real basis e^k, and multiplies by (-1)^twist for the Tate factor.
FormValue conj(const FormValue& v);

// Re-express an omega-basis value in the e basis at the point t.
FormValue form_to_e_basis(const FormValue& v, const std::vector<cplx>& t);

}  // namespace polylog

#endif
