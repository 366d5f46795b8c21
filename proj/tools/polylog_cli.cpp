// Command-line front end: evaluation of the polylogarithm family and the
// verification harnesses, with machine-readable JSON/CSV reports.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage/domain error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <complex>
#include <iostream>
#include <sstream>

#include "polylog/cocycle.hpp"
#include "polylog/errors.hpp"
#include "polylog/koszul.hpp"
#include "polylog/report_io.hpp"
#include "polylog/specfun.hpp"
#include "polylog/specialization.hpp"

namespace {

using polylog::cplx;
using json = nlohmann::ordered_json;

constexpr const char* kSchema = "polylog-hodge/1";

cplx parse_complex(std::string s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw polylog::domain_error("empty complex literal");
  const bool has_i = t.back() == 'i' || t.back() == 'j';
  if (!has_i) return {std::stod(t), 0.0};
  t.pop_back();
  if (t.empty() || t == "+") return {0.0, 1.0};
  if (t == "-") return {0.0, -1.0};
  // split at the last +/- that is not a leading sign or an exponent sign
  std::size_t split = std::string::npos;
  for (std::size_t i = t.size(); i-- > 1;) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, std::stod(t)};
  const std::string re = t.substr(0, split);
  std::string im = t.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return {std::stod(re), std::stod(im)};
}

std::string show_complex(cplx z) {
  std::string s = polylog::format_double(z.real());
  s += (z.imag() < 0 ? "-" : "+");
  s += polylog::format_double(std::abs(z.imag()));
  s += "i";
  return s;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    polylog::write_text_atomic(out_path, content);
}

struct CommonOpts {
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--format", c.format, "Report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", c.out, "Write the report to a file (atomic)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polylogarithm / logarithm-sheaf verification toolkit"};
  app.require_subcommand(1);

  // ---- eval ---------------------------------------------------------------
  auto* eval = app.add_subcommand("eval", "Evaluate li, L or D at a point");
  std::string fn, t_str;
  int order = 1;
  double tol = 1e-16;
  int max_terms = 4096;
  std::string cut = "above";
  eval->add_option("function", fn, "li | L | D")->required()->check(CLI::IsMember({"li", "L", "D"}));
  eval->add_option("index", order, "k for li, m for L/D")->required();
  eval->add_option("t", t_str, "complex point, e.g. 0.3+0.4i")->required();
  eval->add_option("--tol", tol, "series termination tolerance");
  eval->add_option("--max-terms", max_terms, "series term cap");
  eval->add_option("--cut", cut, "side of the cut [1,oo)")->check(CLI::IsMember({"above", "below"}));

  // ---- fe-check -------------------------------------------------------------
  auto* fe = app.add_subcommand("fe-check", "Functional-equation residuals of D_m");
  int fe_mmax = 8, fe_points = 200;
  std::uint64_t fe_seed = 1;
  double fe_tol = 1e-9;
  CommonOpts fe_common;
  fe->add_option("--m-max", fe_mmax, "largest m tested");
  fe->add_option("--points", fe_points, "number of sample points");
  fe->add_option("--seed", fe_seed, "sampling seed");
  fe->add_option("--tol", fe_tol, "pass threshold on |residual|");
  add_common(fe, fe_common);

  // ---- cohomology -----------------------------------------------------------
  auto* coh = app.add_subcommand("cohomology", "Exact cohomology dimension table");
  int coh_g = 1, coh_N = 0, coh_m = -1;
  CommonOpts coh_common{"csv", ""};
  coh->add_option("--g", coh_g, "number of coordinates")->required();
  coh->add_option("--N", coh_N, "truncation level")->required();
  coh->add_option("--m", coh_m, "restrict to one degree");
  add_common(coh, coh_common);

  // ---- cocycle-verify --------------------------------------------------------
  auto* cv = app.add_subcommand("cocycle-verify", "Check nabla(alpha) = eta - xi numerically");
  int cv_g = 1, cv_N = 4, cv_points = 100;
  double cv_tol = 1e-6, cv_h = 1e-4;
  std::uint64_t cv_seed = 1;
  CommonOpts cv_common;
  cv->add_option("--g", cv_g, "number of coordinates")->required();
  cv->add_option("--N", cv_N, "truncation level")->required();
  cv->add_option("--points", cv_points, "number of sample points");
  cv->add_option("--tol", cv_tol, "pass threshold on the residual");
  cv->add_option("--fd-step", cv_h, "finite-difference step");
  cv->add_option("--seed", cv_seed, "sampling seed");
  add_common(cv, cv_common);

  // ---- specialize --------------------------------------------------------------
  auto* sp = app.add_subcommand("specialize", "Root-of-unity specialization table");
  int sp_d = 2, sp_kmax = 8;
  double sp_tol = 1e-11;
  CommonOpts sp_common{"csv", ""};
  sp->add_option("--d", sp_d, "order of the roots of unity")->required();
  sp->add_option("--kmax", sp_kmax, "largest index k");
  sp->add_option("--tol", sp_tol, "pass threshold");
  add_common(sp, sp_common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) {
      polylog::EvalConfig cfg;
      cfg.series_tol = tol;
      cfg.max_terms = max_terms;
      cfg.cut_side = (cut == "above") ? polylog::CutSide::above : polylog::CutSide::below;
      const cplx t = parse_complex(t_str);
      if (fn == "li") {
        const auto r = polylog::li_ex(order, t, cfg);
        std::cout << show_complex(r.value) << " [" << polylog::to_string(r.regime) << "]\n";
      } else if (fn == "L") {
        if (order < 1) throw polylog::domain_error("L index must be >= 1");
        const cplx v = polylog::l_big(order - 1, t, cfg);
        // regime of the deepest polylog the sum went through
        const auto probe = polylog::li_ex(std::max(order, 2), t, cfg);
        std::cout << show_complex(v) << " [" << polylog::to_string(probe.regime) << "]\n";
      } else {
        const double v = polylog::d_bwr(order, t, cfg);
        const auto probe = polylog::li_ex(std::max(order, 2), t, cfg);
        std::cout << polylog::format_double(v) << " [" << polylog::to_string(probe.regime)
                  << "]\n";
      }
      return 0;
    }

    if (*fe) {
      polylog::EvalConfig cfg;
      polylog::SampleBox box;
      box.r_min = 0.35;
      box.r_max = 2.6;
      box.theta_min = 0.1;
      box.margin_one = 0.25;
      const auto pts = polylog::sample_points(1, fe_points, fe_seed, box);
      double max_res = 0.0;
      for (const auto& p : pts)
        for (int m = 1; m <= fe_mmax; ++m)
          max_res = std::max(max_res,
                             std::abs(polylog::functional_equation_residual(m, p.t[0], cfg)));
      const bool pass = max_res < fe_tol;
      json j;
      j["schema"] = kSchema;
      j["command"] = "fe-check";
      j["config"] = {{"m_max", fe_mmax}, {"points", fe_points}, {"seed", fe_seed}, {"tol", fe_tol}};
      j["max_residual"] = max_res;
      j["pass"] = pass;
      if (fe_common.format == "csv") {
        std::ostringstream os;
        os << "m_max,points,seed,tol,max_residual,pass\n"
           << fe_mmax << "," << fe_points << "," << fe_seed << ","
           << polylog::format_double(fe_tol) << "," << polylog::format_double(max_res) << ","
           << (pass ? "true" : "false") << "\n";
        emit(fe_common.out, os.str());
      } else {
        emit(fe_common.out, j.dump() + "\n");
      }
      return pass ? 0 : 1;
    }

    if (*coh) {
      const auto rep = polylog::verify_dimension_formula(coh_g, coh_N);
      bool pass = true;
      std::ostringstream cs;
      cs << "g,N,m,computed_dim,formula_dim,match\n";
      json rows = json::array();
      for (const auto& r : rep.rows) {
        if (coh_m >= 0 && r.m != coh_m) continue;
        pass = pass && r.match;
        cs << coh_g << "," << coh_N << "," << r.m << "," << r.computed << "," << r.expected
           << "," << (r.match ? "true" : "false") << "\n";
        rows.push_back({{"m", r.m},
                        {"computed_dim", r.computed},
                        {"formula_dim", r.expected},
                        {"match", r.match}});
      }
      if (coh_common.format == "json") {
        json j;
        j["schema"] = kSchema;
        j["command"] = "cohomology";
        j["config"] = {{"g", coh_g}, {"N", coh_N}};
        j["rows"] = rows;
        j["pass"] = pass;
        emit(coh_common.out, j.dump() + "\n");
      } else {
        emit(coh_common.out, cs.str());
      }
      return pass ? 0 : 1;
    }

    if (*cv) {
      const auto pts = polylog::sample_points(cv_g, cv_points, cv_seed);
      const auto rep = polylog::verify_cocycle(cv_g, cv_N, pts, cv_tol, cv_h);
      json j;
      j["schema"] = kSchema;
      j["command"] = "cocycle-verify";
      j["g"] = cv_g;
      j["N"] = cv_N;
      j["tol"] = cv_tol;
      j["h"] = cv_h;
      j["points"] = cv_points;
      j["seed"] = cv_seed;
      j["max_residual"] = rep.max_residual;
      j["max_closure_residual"] = rep.max_closure_residual;
      j["pass"] = rep.pass;
      emit(cv_common.out, j.dump() + "\n");
      return rep.pass ? 0 : 1;
    }

    if (*sp) {
      const auto rep = polylog::verify_corollary(sp_d, sp_kmax, sp_tol);
      if (sp_common.format == "csv") {
        std::ostringstream cs;
        cs << "d,zeta,k,D_value,li_value,class_residual,pass\n";
        for (const auto& r : rep.rows) {
          polylog::RootOfUnityPoint z{sp_d, {r.exponent}};
          cs << sp_d << "," << polylog::csv_field(show_complex(z.coordinates()[0])) << "," << r.k
             << "," << polylog::format_double(r.d_value) << ","
             << polylog::csv_field(show_complex(r.li_value)) << ","
             << polylog::format_double(r.class_residual) << "," << (r.pass ? "true" : "false")
             << "\n";
        }
        emit(sp_common.out, cs.str());
      } else {
        json rows = json::array();
        for (const auto& r : rep.rows)
          rows.push_back({{"exponent", r.exponent},
                          {"primitive", r.primitive},
                          {"k", r.k},
                          {"D_value", r.d_value},
                          {"li_re", r.li_value.real()},
                          {"li_im", r.li_value.imag()},
                          {"identity_gap", r.identity_gap},
                          {"class_residual", r.class_residual},
                          {"pass", r.pass}});
        json j;
        j["schema"] = kSchema;
        j["command"] = "specialize";
        j["config"] = {{"d", sp_d}, {"kmax", sp_kmax}, {"tol", sp_tol}};
        j["rows"] = rows;
        j["pass"] = rep.pass;
        j["pass_all_nontrivial"] = rep.pass_all_nontrivial;
        emit(sp_common.out, j.dump() + "\n");
      }
      return rep.pass ? 0 : 1;
    }
  } catch (const polylog::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const polylog::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
