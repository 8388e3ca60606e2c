#include "lp.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace spinrep::detail {

std::optional<std::vector<std::int64_t>> strictly_feasible(
    const std::vector<std::vector<std::int64_t>>& rows) {
  const int m = static_cast<int>(rows.size());
  if (m == 0) return std::vector<std::int64_t>{};
  const int d = static_cast<int>(rows[0].size());
  // Columns: x+ (d), x- (d), surplus (m), artificial (m). Constraint: A x - s + a = 1.
  const int n = 2 * d + 2 * m;
  std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(n + 1));
  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < d; ++j) {
      t[r][j] = rows[r][j];
      t[r][d + j] = -rows[r][j];
    }
    t[r][2 * d + r] = -1;
    t[r][2 * d + m + r] = 1;
    t[r][n] = 1;
    basis[r] = 2 * d + m + r;
  }
  // Reduced costs for minimizing the sum of artificials.
  std::vector<mpq_class> cost(n + 1);
  for (int j = 0; j < n + 1; ++j) {
    if (j >= 2 * d + m && j < n) continue;
    mpq_class s = 0;
    for (int r = 0; r < m; ++r) s += t[r][j];
    cost[j] = -s;
  }
  while (true) {
    int enter = -1;
    for (int j = 0; j < n; ++j)
      if (cost[j] < 0) { enter = j; break; }
    if (enter < 0) break;
    int leave = -1;
    mpq_class best;
    for (int r = 0; r < m; ++r) {
      if (t[r][enter] <= 0) continue;
      mpq_class ratio = t[r][n] / t[r][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("phase-one simplex unbounded");
    mpq_class piv = t[leave][enter];
    for (int j = 0; j <= n; ++j) t[leave][j] /= piv;
    for (int r = 0; r < m; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      mpq_class f = t[r][enter];
      for (int j = 0; j <= n; ++j)
        if (t[leave][j] != 0) t[r][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      mpq_class f = cost[enter];
      for (int j = 0; j <= n; ++j)
        if (t[leave][j] != 0) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  // Objective value is -cost[n]; feasible iff it is zero.
  if (cost[n] != 0) return std::nullopt;
  std::vector<mpq_class> x(d, 0);
  for (int r = 0; r < m; ++r) {
    if (basis[r] < d) x[basis[r]] += t[r][n];
    else if (basis[r] < 2 * d) x[basis[r] - d] -= t[r][n];
  }
  mpz_class l = 1;
  for (const auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> xi(d);
  mpz_class g = 0;
  for (int j = 0; j < d; ++j) {
    mpq_class s = x[j] * l;
    xi[j] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), xi[j].get_mpz_t());
  }
  std::vector<std::int64_t> out(d);
  for (int j = 0; j < d; ++j) {
    if (g > 1) xi[j] /= g;
    if (!xi[j].fits_slong_p()) throw std::overflow_error("chamber witness does not fit in 64 bits");
    out[j] = xi[j].get_si();
  }
  // Certify.
  for (const auto& row : rows) {
    mpz_class s = 0;
    for (int j = 0; j < d; ++j) s += mpz_class(row[j]) * mpz_class(out[j]);
    if (s <= 0) throw std::logic_error("simplex witness failed certification");
  }
  return out;
}

}  // namespace spinrep::detail
