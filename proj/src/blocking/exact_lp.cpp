#include "omegaforge/blocking/exact_lp.hpp"

namespace omegaforge {

std::optional<std::vector<Rational>> exact_feasible(const Matrix<Rational>& a_eq, const std::vector<Rational>& b_eq,
                                                    const Matrix<Rational>& a_ge, const std::vector<Rational>& b_ge,
                                                    std::size_t nvars) {
  const std::size_t m_eq = a_eq.size(), m_ge = a_ge.size(), m = m_eq + m_ge;
  // Columns: x+ (nvars), x- (nvars), surplus (m_ge), artificial (m), rhs.
  const std::size_t surplus0 = 2 * nvars, art0 = surplus0 + m_ge, rhs = art0 + m;
  Matrix<Rational> tab(m, std::vector<Rational>(rhs + 1));
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = i < m_eq ? a_eq[i] : a_ge[i - m_eq];
    Rational b = i < m_eq ? b_eq[i] : b_ge[i - m_eq];
    for (std::size_t j = 0; j < nvars; ++j) {
      tab[i][j] = row[j];
      tab[i][nvars + j] = -row[j];
    }
    if (i >= m_eq) tab[i][surplus0 + (i - m_eq)] = -1;
    tab[i][rhs] = b;
    if (sgn(b) < 0)
      for (auto& v : tab[i]) v = -v;
    tab[i][art0 + i] = 1;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = art0 + i;

  // Reduced costs of the phase-one objective Σ artificials.
  std::vector<Rational> cost(rhs + 1);
  for (std::size_t j = 0; j <= rhs; ++j) {
    if (j >= art0 && j < rhs) continue;
    for (std::size_t i = 0; i < m; ++i) cost[j] -= tab[i][j];
  }

  for (;;) {
    std::size_t enter = rhs;
    for (std::size_t j = 0; j < rhs; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == rhs) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(tab[i][enter]) <= 0) continue;
      Rational ratio = tab[i][rhs] / tab[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one
    Rational piv = tab[leave][enter];
    for (auto& v : tab[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(tab[i][enter]) == 0) continue;
      Rational f = tab[i][enter];
      for (std::size_t j = 0; j <= rhs; ++j)
        if (sgn(tab[leave][j]) != 0) tab[i][j] -= f * tab[leave][j];
    }
    Rational f = cost[enter];
    for (std::size_t j = 0; j <= rhs; ++j)
      if (sgn(tab[leave][j]) != 0) cost[j] -= f * tab[leave][j];
    basis[leave] = enter;
  }

  if (sgn(cost[rhs]) != 0) return std::nullopt;
  std::vector<Rational> x(nvars);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < nvars)
      x[basis[i]] += tab[i][rhs];
    else if (basis[i] < 2 * nvars)
      x[basis[i] - nvars] -= tab[i][rhs];
  }
  return x;
}

}  // namespace omegaforge
