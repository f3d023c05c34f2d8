#include "pqx/lp.hpp"

#include <stdexcept>

namespace pqx {

CoveringLPResult solve_fractional_cover(const std::vector<Bitset>& sets, int num_vertices) {
  const int m = static_cast<int>(sets.size());  // constraints of the dual
  const int nv = num_vertices;                  // dual variables

  for (int v = 0; v < nv; ++v) {
    bool covered = false;
    for (const auto& s : sets)
      if (s.test(v)) {
        covered = true;
        break;
      }
    if (!covered) throw std::domain_error("vertex " + std::to_string(v + 1) + " lies in no set: cover infeasible");
  }

  // tableau: m constraint rows + objective row; columns = nv vars, m slacks, rhs
  const int cols = nv + m + 1;
  std::vector<std::vector<Rational>> tab(m + 1, std::vector<Rational>(cols, Rational(0)));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int v = 0; v < nv; ++v)
      if (sets[i].test(v)) tab[i][v] = Rational(1);
    tab[i][nv + i] = Rational(1);
    tab[i][cols - 1] = Rational(1);
    basis[i] = nv + i;
  }
  for (int v = 0; v < nv; ++v) tab[m][v] = Rational(-1);  // maximize sum y_v

  CoveringLPResult out;
  for (;;) {
    // Bland: entering = smallest column with negative reduced cost
    int enter = -1;
    for (int j = 0; j < nv + m; ++j)
      if (tab[m][j].sign() < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;

    // ratio test, ties by smallest basis index
    int leave = -1;
    Rational best_ratio(0);
    for (int i = 0; i < m; ++i) {
      if (tab[i][enter].sign() <= 0) continue;
      Rational ratio = tab[i][cols - 1] / tab[i][enter];
      if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("dual packing program unbounded");

    // pivot on (leave, enter)
    Rational piv = tab[leave][enter];
    for (int j = 0; j < cols; ++j) tab[leave][j] /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave || tab[i][enter].sign() == 0) continue;
      Rational factor = tab[i][enter];
      for (int j = 0; j < cols; ++j) tab[i][j] -= factor * tab[leave][j];
    }
    basis[leave] = enter;
    ++out.pivots;
  }

  out.value = tab[m][cols - 1];
  for (int i = 0; i < m; ++i) {
    Rational w = tab[m][nv + i];  // reduced cost of slack i = covering weight of set i
    if (w.sign() < 0) throw std::logic_error("negative covering weight at optimum");
    if (w.sign() > 0) out.weights.push_back({i, w});
  }
  return out;
}

}  // namespace pqx
