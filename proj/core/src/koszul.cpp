#include "polylog/koszul.hpp"

#include <algorithm>
#include <bit>

#include "polylog/errors.hpp"

namespace polylog {

namespace {

// sign of wedging dlog t_mu onto dlog t_I from the left: (-1)^{#{nu in I : nu < mu}}
int wedge_sign(int mu, std::uint32_t mask) {
  const std::uint32_t below = mask & ((1u << mu) - 1u);
  return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

std::vector<std::uint32_t> subsets_of_size(int g, int m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << g); ++mask)
    if (std::popcount(mask) == m) out.push_back(mask);
  return out;
}

MultiIndex unkey_g(std::uint64_t key, int g) {
  std::vector<int> comps(g);
  for (int mu = 0; mu < g; ++mu) comps[mu] = static_cast<int>((key >> (8 * mu)) & 0xff);
  return MultiIndex(std::move(comps));
}

}  // namespace

KoszulSlice build_slice(int g, int N, const MultiDegree& a) {
  if (g < 1) throw domain_error("build_slice: g must be >= 1");
  if (N < 0) throw domain_error("build_slice: N must be >= 0");
  if (a.g() != g) throw domain_error("build_slice: multidegree has wrong g");
  KoszulSlice s;
  s.g = g;
  s.N = N;
  s.a = a;

  const auto indices = enumerate_multi_indices(g, N);
  std::map<std::uint64_t, int> pos_of;
  for (std::size_t i = 0; i < indices.size(); ++i) pos_of[indices[i].key()] = static_cast<int>(i);

  s.basis.resize(g + 1);
  std::vector<std::map<std::uint32_t, int>> mask_rank(g + 1);
  for (int m = 0; m <= g; ++m) {
    const auto masks = subsets_of_size(g, m);
    for (std::size_t r = 0; r < masks.size(); ++r) mask_rank[m][masks[r]] = static_cast<int>(r);
    for (std::size_t ki = 0; ki < indices.size(); ++ki)
      for (std::uint32_t mask : masks)
        s.basis[m].push_back({static_cast<int>(ki), mask});
  }
  auto position = [&](int m, int ki, std::uint32_t mask) {
    const auto n_masks = static_cast<long long>(mask_rank[m].size());
    return static_cast<std::size_t>(ki * n_masks + mask_rank[m][mask]);
  };

  for (int m = 0; m < g; ++m) {
    IntMatrix d(s.basis[m + 1].size(), s.basis[m].size());
    for (std::size_t col = 0; col < s.basis[m].size(); ++col) {
      const auto [ki, mask] = s.basis[m][col];
      const MultiIndex& k = indices[ki];
      for (int mu = 0; mu < g; ++mu) {
        if (mask & (1u << mu)) continue;
        const std::uint32_t up = mask | (1u << mu);
        const int sgn = wedge_sign(mu, mask);
        if (a[mu] != 0) d.at(position(m + 1, ki, up), col) += sgn * a[mu];
        if (k.total() + 1 <= N) {
          const int kj = pos_of.at(k.bumped(mu).key());
          d.at(position(m + 1, kj, up), col) += sgn;
        }
      }
    }
    s.d.push_back(std::move(d));
  }
  return s;
}

bool slice_d_squared_zero(const KoszulSlice& s) {
  for (int m = 0; m + 1 < s.g; ++m) {
    const IntMatrix& A = s.d[m + 1];
    const IntMatrix& B = s.d[m];
    for (std::size_t i = 0; i < A.rows(); ++i)
      for (std::size_t j = 0; j < B.cols(); ++j) {
        long long acc = 0;
        for (std::size_t l = 0; l < B.rows(); ++l) acc += A.at(i, l) * B.at(l, j);
        if (acc != 0) return false;
      }
  }
  return true;
}

std::vector<long long> slice_cohomology_dims(const KoszulSlice& s) {
  std::vector<std::size_t> rank(s.g, 0);
  for (int m = 0; m < s.g; ++m) rank[m] = s.d[m].rank();
  std::vector<long long> h(s.g + 1);
  for (int m = 0; m <= s.g; ++m) {
    long long dim = s.level_dim(m);
    if (m < s.g) dim -= static_cast<long long>(rank[m]);
    if (m > 0) dim -= static_cast<long long>(rank[m - 1]);
    h[m] = dim;
  }
  return h;
}

long long cohomology_dim(int g, int N, int m) {
  if (m < 0 || m > g) throw domain_error("cohomology_dim: m must be in 0..g");
  const KoszulSlice s = build_slice(g, N, MultiIndex::zero(g));
  return slice_cohomology_dims(s)[m];
}

long long dimension_formula(int g, int N, int m) {
  if (m < 0 || m > g) throw domain_error("dimension_formula: m must be in 0..g");
  if (m == g) return 1;
  return binomial(N + g - 1 - m, g - 1 - m) * binomial(N + g, m);
}

DimensionReport verify_dimension_formula(int g, int N) {
  DimensionReport rep{g, N, {}, true};
  const KoszulSlice s = build_slice(g, N, MultiIndex::zero(g));
  const auto dims = slice_cohomology_dims(s);
  for (int m = 0; m <= g; ++m) {
    const long long expect = dimension_formula(g, N, m);
    const bool ok = dims[m] == expect;
    rep.rows.push_back({m, dims[m], expect, ok});
    rep.pass = rep.pass && ok;
  }
  return rep;
}

std::vector<MultiDegree> multidegree_box(int g, int bound) {
  std::vector<MultiDegree> out;
  std::vector<int> cur(g, 0);
  for (;;) {
    out.emplace_back(cur);
    int slot = g - 1;
    while (slot >= 0 && cur[slot] == bound) cur[slot--] = 0;
    if (slot < 0) break;
    ++cur[slot];
  }
  return out;
}

void LogFormSymbolic::add(const MultiIndex& k, std::uint32_t mask, const MultiDegree& a,
                          const Rational& c) {
  if (c == 0) return;
  auto& poly = terms[{k.key(), mask}];
  poly[a.key()] += c;
  if (poly[a.key()] == 0) poly.erase(a.key());
  if (poly.empty()) terms.erase({k.key(), mask});
}

bool LogFormSymbolic::is_zero() const {
  for (const auto& [key, poly] : terms)
    for (const auto& [a, c] : poly)
      if (c != 0) return false;
  return true;
}

LogFormSymbolic nabla_symbolic(const LogFormSymbolic& xi) {
  LogFormSymbolic out;
  out.g = xi.g;
  out.N = xi.N;
  out.degree = xi.degree + 1;
  for (const auto& [tk, poly] : xi.terms) {
    const MultiIndex k = unkey_g(tk.first, xi.g);
    const std::uint32_t mask = tk.second;
    for (const auto& [ak, c] : poly) {
      const MultiDegree a = unkey_g(ak, xi.g);
      for (int mu = 0; mu < xi.g; ++mu) {
        if (mask & (1u << mu)) continue;
        const std::uint32_t up = mask | (1u << mu);
        const int sgn = wedge_sign(mu, mask);
        // (1 (x) d): t^a picks up a_mu dlog t_mu
        if (a[mu] != 0) out.add(k, up, a, Rational(sgn * a[mu]) * c);
        // connection shift, truncated
        if (k.total() + 1 <= xi.N) out.add(k.bumped(mu), up, a, Rational(sgn) * c);
      }
    }
  }
  return out;
}

LogFormSymbolic form_sub(const LogFormSymbolic& x, const LogFormSymbolic& y) {
  LogFormSymbolic out = x;
  for (const auto& [tk, poly] : y.terms)
    for (const auto& [ak, c] : poly)
      out.add(unkey_g(tk.first, x.g), tk.second, unkey_g(ak, x.g), -c);
  return out;
}

LogFormSymbolic reduce_cocycle(const LogFormSymbolic& xi_in, int m) {
  const int g = xi_in.g, N = xi_in.N;
  if (m != xi_in.degree) throw domain_error("reduce_cocycle: degree mismatch");
  if (m >= g) throw domain_error("reduce_cocycle: requires m < g");
  if (!nabla_symbolic(xi_in).is_zero()) throw not_a_cocycle();

  LogFormSymbolic xi = xi_in;
  const std::uint64_t zero_key = MultiIndex::zero(g).key();

  for (int level = 0; level < N; ++level) {
    // --- constant-coefficient (a = 0) part of Sym-level `level` -------------
    // Removed by a Koszul-strand primitive with constant coefficients:
    // solve  lambda ^ b = c  for b in Sym^{level-1} (x) Lambda^{m-1}.
    std::map<std::pair<std::uint64_t, std::uint32_t>, Rational> c0;
    for (const auto& [tk, poly] : xi.terms) {
      if (unkey_g(tk.first, g).total() != level) continue;
      auto it = poly.find(zero_key);
      if (it != poly.end() && it->second != 0) c0[tk] = it->second;
    }
    if (!c0.empty()) {
      if (m == 0 || level == 0)
        throw solve_failed("constant term survives where no primitive exists");
      const auto rows_k = enumerate_of_total(g, level);
      const auto rows_I = subsets_of_size(g, m);
      const auto cols_j = enumerate_of_total(g, level - 1);
      const auto cols_J = subsets_of_size(g, m - 1);
      std::map<std::pair<std::uint64_t, std::uint32_t>, std::size_t> row_of, col_of;
      for (const auto& k : rows_k)
        for (auto I : rows_I) row_of[{k.key(), I}] = row_of.size();
      for (const auto& j : cols_j)
        for (auto J : cols_J) col_of[{j.key(), J}] = col_of.size();
      RationalMatrix A(row_of.size(), col_of.size());
      for (const auto& j : cols_j) {
        for (auto J : cols_J) {
          const std::size_t col = col_of[{j.key(), J}];
          for (int mu = 0; mu < g; ++mu) {
            if (J & (1u << mu)) continue;
            A.at(row_of.at({j.bumped(mu).key(), J | (1u << mu)}), col) += wedge_sign(mu, J);
          }
        }
      }
      std::vector<Rational> rhs(row_of.size(), Rational(0));
      for (const auto& [tk, c] : c0) rhs[row_of.at(tk)] = c;
      const auto sol = A.solve(rhs);
      if (!sol) throw solve_failed("constant Koszul strand has no primitive");
      LogFormSymbolic b;
      b.g = g;
      b.N = N;
      b.degree = m - 1;
      const MultiDegree a0 = MultiIndex::zero(g);
      for (const auto& [cj, col] : col_of)
        b.add(unkey_g(cj.first, g), cj.second, a0, (*sol)[col]);
      xi = form_sub(xi, nabla_symbolic(b));
    }

    // --- nonconstant multidegrees: scalar Koszul primitive per (a, k) -------
    // collect a-support of the level
    std::map<std::uint64_t, std::map<std::pair<std::uint64_t, std::uint32_t>, Rational>> slices;
    for (const auto& [tk, poly] : xi.terms) {
      if (unkey_g(tk.first, g).total() != level) continue;
      for (const auto& [ak, c] : poly)
        if (ak != zero_key && c != 0) slices[ak][tk] = c;
    }
    if (!slices.empty()) {
      LogFormSymbolic eta;
      eta.g = g;
      eta.N = N;
      eta.degree = m - 1;
      if (m == 0) throw solve_failed("0-form cocycle with nonconstant low-level part");
      const auto masks_m = subsets_of_size(g, m);
      const auto masks_low = subsets_of_size(g, m - 1);
      for (const auto& [ak, entries] : slices) {
        const MultiDegree a = unkey_g(ak, g);
        // group by k-index; solve the scalar Koszul system on the Lambda part
        std::map<std::uint64_t, std::vector<Rational>> by_k;
        for (const auto& [tk, c] : entries) {
          auto& vec = by_k[tk.first];
          if (vec.empty()) vec.assign(masks_m.size(), Rational(0));
          const auto pos = std::find(masks_m.begin(), masks_m.end(), tk.second);
          vec[static_cast<std::size_t>(pos - masks_m.begin())] = c;
        }
        RationalMatrix A(masks_m.size(), masks_low.size());
        for (std::size_t col = 0; col < masks_low.size(); ++col) {
          const std::uint32_t J = masks_low[col];
          for (int mu = 0; mu < g; ++mu) {
            if (J & (1u << mu)) continue;
            if (a[mu] == 0) continue;
            const std::uint32_t up = J | (1u << mu);
            const auto row = std::find(masks_m.begin(), masks_m.end(), up) - masks_m.begin();
            A.at(static_cast<std::size_t>(row), col) += Rational(wedge_sign(mu, J)) * a[mu];
          }
        }
        for (const auto& [kk, rhs] : by_k) {
          const auto sol = A.solve(rhs);
          if (!sol) throw solve_failed("nonzero-multidegree Koszul slice has no primitive");
          const MultiIndex k = unkey_g(kk, g);
          for (std::size_t col = 0; col < masks_low.size(); ++col)
            eta.add(k, masks_low[col], a, (*sol)[col]);
        }
      }
      xi = form_sub(xi, nabla_symbolic(eta));
    }
  }

  for (const auto& [tk, poly] : xi.terms)
    if (!poly.empty() && unkey_g(tk.first, g).total() != N)
      throw solve_failed("reduction left support below Sym^N");
  return xi;
}

BoxBasis box_basis(int g, int N, const std::vector<MultiDegree>& box, int degree) {
  BoxBasis b;
  b.g = g;
  b.N = N;
  b.degree = degree;
  const auto indices = enumerate_multi_indices(g, N);
  const auto masks = subsets_of_size(g, degree);
  for (const auto& a : box)
    for (const auto& k : indices)
      for (auto I : masks) {
        b.index[{a.key(), k.key(), I}] = b.items.size();
        b.items.push_back({a.key(), k.key(), I});
      }
  return b;
}

RationalMatrix box_differential(const BoxBasis& from, const BoxBasis& to) {
  RationalMatrix A(to.items.size(), from.items.size());
  for (std::size_t col = 0; col < from.items.size(); ++col) {
    const auto [ak, kk, mask] = from.items[col];
    const MultiDegree a = unkey_g(ak, from.g);
    const MultiIndex k = unkey_g(kk, from.g);
    for (int mu = 0; mu < from.g; ++mu) {
      if (mask & (1u << mu)) continue;
      const std::uint32_t up = mask | (1u << mu);
      const int sgn = wedge_sign(mu, mask);
      if (a[mu] != 0) A.at(to.index.at({ak, kk, up}), col) += Rational(sgn) * a[mu];
      if (k.total() + 1 <= from.N)
        A.at(to.index.at({ak, k.bumped(mu).key(), up}), col) += sgn;
    }
  }
  return A;
}

std::vector<Rational> form_to_vector(const LogFormSymbolic& f, const BoxBasis& basis) {
  std::vector<Rational> v(basis.items.size(), Rational(0));
  for (const auto& [tk, poly] : f.terms)
    for (const auto& [ak, c] : poly) {
      auto it = basis.index.find({ak, tk.first, tk.second});
      if (it == basis.index.end()) throw domain_error("form leaves the multidegree box");
      v[it->second] = c;
    }
  return v;
}

LogFormSymbolic vector_to_form(const std::vector<Rational>& v, const BoxBasis& basis) {
  LogFormSymbolic f;
  f.g = basis.g;
  f.N = basis.N;
  f.degree = basis.degree;
  for (std::size_t i = 0; i < basis.items.size(); ++i) {
    if (v[i] == 0) continue;
    const auto [ak, kk, mask] = basis.items[i];
    f.add(unkey_g(kk, basis.g), mask, unkey_g(ak, basis.g), v[i]);
  }
  return f;
}

ResidueForm xi_residue_form(int g, int N) {
  ResidueForm f;
  f.g = g;
  f.N = N;
  f.twist = g;
  f.coeffs[MultiIndex::zero(g).key()][MultiIndex::zero(g).key()] = 1;
  return f;
}

LogVector residue(const ResidueForm& form) {
  if (form.twist != form.g) throw not_residue_presentable();
  LogVector out(form.g, form.N, form.twist - form.g, Basis::omega);
  for (const auto& [kk, poly] : form.coeffs) {
    Rational val = 0;
    for (const auto& [ak, c] : poly) val += c;  // evaluate t^a at (1,...,1)
    if (val != 0) out.set_coeff(unkey_g(kk, form.g), cplx(val.convert_to<double>(), 0.0));
  }
  return out;
}

}  // namespace polylog
