#include "ordkit/exact_lp.hpp"

#include "ordkit/error.hpp"

namespace ordkit {

LpResult maximize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw InputError("LP: row count mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw InputError("LP: column count mismatch");
  for (const auto& bi : b)
    if (bi < 0) throw InputError("LP: right-hand side must be nonnegative");

  // t[i][j] for i < m are constraint rows, t[m] is the objective row;
  // column n holds the right-hand side.
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n] = b[i];
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];

  // Variable labels: 0..n-1 structural, n..n+m-1 slacks.
  std::vector<std::size_t> column_var(n);
  std::vector<std::size_t> row_var(m);
  for (std::size_t j = 0; j < n; ++j) column_var[j] = j;
  for (std::size_t i = 0; i < m; ++i) row_var[i] = n + i;

  LpResult result;
  for (;;) {
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(t[m][j]) < 0 && (enter == n || column_var[j] < column_var[enter])) enter = j;
    if (enter == n) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][n] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && row_var[i] < row_var[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) {
      result.status = LpStatus::unbounded;
      return result;
    }

    const Rational p = t[leave][enter];
    for (std::size_t j = 0; j <= n; ++j)
      if (j != enter) t[leave][j] /= p;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= n; ++j)
        if (j != enter) t[i][j] -= f * t[leave][j];
      t[i][enter] = -f / p;
    }
    t[leave][enter] = 1 / p;
    std::swap(row_var[leave], column_var[enter]);
    ++result.pivots;
  }

  result.value = t[m][n];
  result.x.assign(n, 0);
  result.y.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (row_var[i] < n) result.x[row_var[i]] = t[i][n];
  for (std::size_t j = 0; j < n; ++j)
    if (column_var[j] >= n) result.y[column_var[j] - n] = t[m][j];
  return result;
}

}  // namespace ordkit
