#ifndef POLYLOG_ERRORS_HPP
#define POLYLOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polylog {

// Base class for every error thrown by this library.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Bad argument or evaluation point outside the function's domain.
struct domain_error : error {
  explicit domain_error(const std::string& what) : error(what) {}
};

struct pole_at_one : domain_error {
  pole_at_one() : domain_error("Li_1 has a pole at t = 1") {}
};

struct non_convergence : error {
  explicit non_convergence(const std::string& what) : error(what) {}
};

struct zero_coordinate : domain_error {
  zero_coordinate() : domain_error("coordinate t_mu = 0 is outside the torus") {}
};

struct branch_mismatch : domain_error {
  branch_mismatch() : domain_error("supplied log branch does not exponentiate to the point") {}
};

struct not_torsion : domain_error {
  not_torsion() : domain_error("point is not a vector of d-th roots of unity") {}
};

struct zero_vector : domain_error {
  zero_vector() : domain_error("filtration degree of the zero vector is undefined") {}
};

struct not_a_cocycle : error {
  not_a_cocycle() : error("input form is not nabla-closed") {}
};

// Signals a violated hypothesis of the reduction procedure; unreachable on
// nabla-closed input.
struct solve_failed : error {
  explicit solve_failed(const std::string& what) : error(what) {}
};

struct not_residue_presentable : domain_error {
  not_residue_presentable() : domain_error("form has no residue presentation along t = 1") {}
};

struct stencil_off_domain : domain_error {
  stencil_off_domain() : domain_error("finite-difference stencil leaves the evaluation domain") {}
};

}  // namespace polylog

#endif
