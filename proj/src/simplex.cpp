#include "greedytk/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace greedytk {

LpResult simplex_max(const std::vector<std::vector<double>>& a,
                     const std::vector<double>& b, const std::vector<double>& c) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("simplex: b size mismatch");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("simplex: row size mismatch");
  for (double bi : b)
    if (bi < 0.0) throw std::invalid_argument("simplex: requires b >= 0");

  constexpr double eps = 1e-11;

  // Tableau: m rows of [A | I | b], objective row below.
  const int cols = n + m + 1;
  std::vector<std::vector<double>> t(static_cast<std::size_t>(m + 1),
                                     std::vector<double>(static_cast<std::size_t>(cols), 0.0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1.0;
    t[i][cols - 1] = b[i];
  }
  for (int j = 0; j < n; ++j) t[m][j] = -c[j];

  std::vector<int> basis(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  const long max_iters = 4000L * static_cast<long>(m + n + 1);
  for (long iter = 0; iter < max_iters; ++iter) {
    // Bland: entering = smallest index with negative reduced cost.
    int enter = -1;
    for (int j = 0; j < cols - 1; ++j) {
      if (t[m][j] < -eps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) {
      LpResult r;
      r.optimal = true;
      r.value = t[m][cols - 1];
      r.x.assign(static_cast<std::size_t>(n), 0.0);
      for (int i = 0; i < m; ++i)
        if (basis[i] < n) r.x[static_cast<std::size_t>(basis[i])] = t[i][cols - 1];
      return r;
    }
    // Ratio test; Bland ties broken by smallest basis index.
    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] > eps) {
        const double ratio = t[i][cols - 1] / t[i][enter];
        if (ratio < best - eps || (ratio < best + eps && (leave < 0 || basis[i] < basis[leave]))) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) return LpResult{};  // unbounded

    const double piv = t[leave][enter];
    for (int j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double f = t[i][enter];
      if (std::abs(f) <= eps) continue;
      for (int j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  throw std::runtime_error("simplex: iteration limit exceeded");
}

}  // namespace greedytk
