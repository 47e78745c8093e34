#pragma once

// Independent reference computations used only by the tests. None of these
// call into KLBasis or ProjectiveBasis.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "heckelab/hecke.hpp"

namespace heckelab::oracle {

using Rational = boost::multiprecision::cpp_rational;

/// d(H_y) as the product of d(H_s) = H_s + v - v^-1 along a reduced word,
/// using only the general product (not the inverse_h memo).
inline HeckeElement dual_of_basis(const HeckeAlgebra& alg, ElementId y) {
  const GroupContext& ctx = alg.context();
  HeckeElement out = alg.unit();
  for (Generator s : ctx.word(y)) {
    HeckeElement ds = alg.h_basis(ctx.generator(s));
    ds.add_term(kIdentity, v() - v_inv());
    out = alg.mul(out, ds);
  }
  return out;
}

/// Solves the linear system "d(C) = C, C in H_x + sum_{y<x} vZ[v] H_y" for
/// the integer coefficients of every h_{y,x} with 1 <= deg <= l(x)-l(y), by
/// Gaussian elimination over Q. Throws if the system is not uniquely
/// solvable in integers.
inline HeckeElement brute_force_kl(const HeckeAlgebra& alg, ElementId x) {
  const GroupContext& ctx = alg.context();
  struct Unknown {
    ElementId y;
    int k;
  };
  std::vector<Unknown> unknowns;
  for (ElementId y : ctx.enumerate())
    if (y != x && ctx.bruhat_leq(y, x))
      for (int k = 1; k <= ctx.length(x) - ctx.length(y); ++k) unknowns.push_back({y, k});
  const std::size_t n = unknowns.size();

  // Equation rows are keyed by (element, exponent); the last column is the
  // right-hand side.
  std::map<std::pair<ElementId, int>, std::vector<Rational>> rows;
  auto accumulate = [&](const HeckeElement& e, std::size_t column, int sign) {
    for (const auto& [z, p] : e.terms())
      for (const auto& [k, c] : p.terms()) {
        auto& row = rows[{z, k}];
        if (row.empty()) row.assign(n + 1, Rational(0));
        row[column] += sign * Rational(c);
      }
  };
  // residual d(C) - C = (d(H_x) - H_x) + sum a_{y,k} (v^-k d(H_y) - v^k H_y)
  accumulate(dual_of_basis(alg, x) - alg.h_basis(x), n, -1);
  for (std::size_t u = 0; u < n; ++u) {
    const auto& [y, k] = unknowns[u];
    HeckeElement col = LaurentPoly::v_pow(-k) * dual_of_basis(alg, y);
    col -= HeckeElement::basis(y, LaurentPoly::v_pow(k));
    accumulate(col, u, +1);
  }

  std::vector<std::vector<Rational>> m;
  for (auto& [key, row] : rows) m.push_back(std::move(row));
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank != n) throw std::runtime_error("KL system is not uniquely solvable");
  for (std::size_t r = rank; r < m.size(); ++r)
    if (m[r][n] != 0) throw std::runtime_error("KL system is inconsistent");

  HeckeElement out = alg.h_basis(x);
  for (std::size_t r = 0; r < rank; ++r) {
    Rational a = m[r][n] / m[r][pivot_col[r]];
    if (denominator(a) != 1) throw std::runtime_error("non-integral KL coefficient");
    const auto& [y, k] = unknowns[pivot_col[r]];
    out.add_term(y, LaurentPoly::monomial(numerator(a), k));
  }
  return out;
}

/// Projective basis as the rows of the inverse of the unitriangular matrix
/// (h_{y,z}), computed by back substitution over Z[v, v^-1]. `kl_columns[z]`
/// must be C_z in the H-basis.
inline std::vector<HeckeElement> dual_basis_by_inversion(const GroupContext& ctx,
                                                         const std::vector<HeckeElement>& kl_columns) {
  const std::size_t n = ctx.size();
  // Row x of M^-1 satisfies sum_y q_y h_{y,z} = delta_{x,z}, with h_{z,z} = 1
  // and h_{y,z} = 0 unless y <= z.
  std::vector<HeckeElement> out(n);
  for (std::size_t xi = 0; xi < n; ++xi) {
    std::vector<LaurentPoly> q(n);
    // Ids are length-ordered, so y < z in Bruhat order implies id(y) < id(z):
    // q_z = delta_{x,z} - sum_{y < z} q_y h_{y,z}.
    for (std::size_t zi = 0; zi < n; ++zi) {
      LaurentPoly acc = LaurentPoly(xi == zi ? 1 : 0);
      for (const auto& [y, h] : kl_columns[zi].terms())
        if (y.index() != zi) acc -= q[y.index()] * h;
      q[zi] = acc;
    }
    for (std::size_t yi = 0; yi < n; ++yi) out[xi].add_term(ElementId(static_cast<std::uint32_t>(yi)), q[yi]);
  }
  return out;
}

}  // namespace heckelab::oracle
