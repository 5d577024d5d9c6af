#pragma once

// Independent reference computations, deliberately naive.

#include <algorithm>
#include <vector>

#include "vps/formspace.hpp"
#include "vps/ideal.hpp"
#include "vps/matrix.hpp"

namespace vps::oracle {

/// (I : m^∞)_d as {f in S_d : f * S_k ⊆ I_{d+k}} by dense linear algebra.
inline FormSpace saturation_piece(const GradedIdeal& i, int d, int k) {
  const int n = i.nvars();
  const auto& src = monomials_of_degree(n, d);
  const auto& mult = monomials_of_degree(n, k);
  const FormSpace& target = i.piece(d + k);
  const auto std_monos = target.standard_monomials();
  // f -> (m * f mod I_{d+k}) for each m, stacked
  ExactMatrix m(src.size(), mult.size() * std_monos.size());
  for (std::size_t r = 0; r < src.size(); ++r)
    for (std::size_t j = 0; j < mult.size(); ++j) {
      Form red = target.reduce(Form::monomial(i.ring(), n, src[r] * mult[j]));
      auto c = red.coordinates(std_monos);
      for (std::size_t s = 0; s < c.size(); ++s) m(r, j * std_monos.size() + s) = c[s];
    }
  ExactMatrix ker = left_kernel(m);
  FormSpace out(i.ring(), n, d);
  for (std::size_t r = 0; r < ker.rows(); ++r) out.insert(form_from_coordinates(i.ring(), n, d, ker.row(r)));
  return out;
}

/// Dense nullspace dimension of (a_i) in S_{e-d_i} -> sum a_i g_i in S_e.
inline std::size_t syzygy_dimension(const std::vector<Form>& gens, int e) {
  const int n = gens.front().nvars();
  std::vector<std::vector<Scalar>> cols;
  const auto& target = monomials_of_degree(n, e);
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : gens) {
    if (g.degree() > e) continue;
    for (const auto& m : monomials_of_degree(n, e - g.degree())) rows.push_back(g.times(m).coordinates(target));
  }
  if (rows.empty()) return 0;
  ExactMatrix a = ExactMatrix::from_rows(rows);
  return a.rows() - rank(a);
}

/// Rank of a matrix by full fraction-free Gaussian elimination over Z (Bareiss) after clearing denominators.
inline std::size_t bareiss_rank(ExactMatrix m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) l = lcm(l, mpz_class(m(r, c).get_den()));
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= l;
  }
  std::size_t rk = 0;
  Scalar prev = 1;
  std::vector<bool> used(m.rows(), false);
  for (std::size_t c = 0; c < m.cols() && rk < m.rows(); ++c) {
    std::size_t p = rk;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(rk, k));
    for (std::size_t r = rk + 1; r < m.rows(); ++r) {
      for (std::size_t k = c + 1; k < m.cols(); ++k) m(r, k) = (m(rk, c) * m(r, k) - m(r, c) * m(rk, k)) / prev;
      m(r, c) = 0;
    }
    prev = m(rk, c);
    ++rk;
  }
  return rk;
}

/// H(d+1) of the lex-segment ideal with H(d) = h in n variables.
inline long lex_segment_growth(int n, int d, long h) {
  auto monos = monomials_of_degree(n, d);
  std::sort(monos.begin(), monos.end(), [](const Mono& a, const Mono& b) { return a.e > b.e; });
  const std::size_t take = monos.size() - static_cast<std::size_t>(h);
  std::vector<Mono> next;
  for (std::size_t k = 0; k < take; ++k)
    for (int i = 0; i < n; ++i) next.push_back(monos[k] * Mono::var(i));
  std::sort(next.begin(), next.end(), [](const Mono& a, const Mono& b) { return a.e < b.e; });
  next.erase(std::unique(next.begin(), next.end(), [](const Mono& a, const Mono& b) { return a.e == b.e; }), next.end());
  return num_monomials(n, d + 1) - static_cast<long>(next.size());
}

}  // namespace vps::oracle

namespace vps::oracle {

/// dim of the degree-2 Plücker quadrics: C(N+1, 2) minus the number of
/// standard monomials p_S p_T (S <= T entrywise), i.e. two-column tableaux.
inline std::size_t plucker_quadric_count(int k, int m) {
  std::vector<std::vector<int>> subs;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    subs.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == m - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  const std::size_t n = subs.size();
  std::size_t standard = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool le = true;
      for (int r = 0; r < k && le; ++r) le = subs[a][r] <= subs[b][r];
      if (le) ++standard;
    }
  return n * (n + 1) / 2 - standard;
}

}  // namespace vps::oracle
