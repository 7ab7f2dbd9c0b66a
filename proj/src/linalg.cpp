#include "mpp/linalg.hpp"

#include <cassert>

namespace mpp {

int rankOf(std::vector<RatVec> rows) {
  if (rows.empty()) return 0;
  size_t ncols = rows[0].size();
  int r = 0;
  for (size_t c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (size_t i = r; i < rows.size(); ++i)
      if (rows[i][c] != 0) { piv = static_cast<int>(i); break; }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c] / rows[r][c];
      for (size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

std::optional<RatVec> solveSquare(const std::vector<RatVec>& a, const RatVec& b) {
  size_t n = a.size();
  std::vector<RatVec> m(n);
  for (size_t i = 0; i < n; ++i) {
    m[i] = a[i];
    m[i].push_back(b[i]);
  }
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[c], m[piv]);
    Rat p = m[c][c];
    for (size_t j = c; j <= n; ++j) m[c][j] /= p;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  RatVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

std::vector<RatVec> nullspaceBasis(const std::vector<RatVec>& rowsIn, int ncols) {
  std::vector<RatVec> m = rowsIn;
  std::vector<int> pivCols;
  int r = 0;
  for (int c = 0; c < ncols && r < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (size_t i = r; i < m.size(); ++i)
      if (m[i][c] != 0) { piv = static_cast<int>(i); break; }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Rat p = m[r][c];
    for (int j = 0; j < ncols; ++j) m[r][j] /= p;
    for (size_t i = 0; i < m.size(); ++i) {
      if (static_cast<int>(i) == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = 0; j < ncols; ++j) m[i][j] -= f * m[r][j];
    }
    pivCols.push_back(c);
    ++r;
  }
  std::vector<bool> isPiv(ncols, false);
  for (int c : pivCols) isPiv[c] = true;
  std::vector<RatVec> basis;
  for (int fc = 0; fc < ncols; ++fc) {
    if (isPiv[fc]) continue;
    RatVec v(ncols, Rat(0));
    v[fc] = 1;
    for (int ri = 0; ri < static_cast<int>(pivCols.size()); ++ri)
      v[pivCols[ri]] = -m[ri][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatVec SpanTracker::reduce(RatVec v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    int p = pivots_[i];
    if (v[p] == 0) continue;
    Rat f = v[p]; // rows are normalized to pivot 1
    for (int j = 0; j < ncols_; ++j) v[j] -= f * rows_[i][j];
  }
  return v;
}

bool SpanTracker::add(const RatVec& v) {
  RatVec r = reduce(v);
  int p = -1;
  for (int j = 0; j < ncols_; ++j)
    if (r[j] != 0) { p = j; break; }
  if (p < 0) return false;
  Rat f = r[p];
  for (int j = 0; j < ncols_; ++j) r[j] /= f;
  // back-substitute into existing rows to keep reduce() one-pass correct
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i][p] == 0) continue;
    Rat g = rows_[i][p];
    for (int j = 0; j < ncols_; ++j) rows_[i][j] -= g * r[j];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

void SpanTracker::pop() {
  assert(!rows_.empty());
  rows_.pop_back();
  pivots_.pop_back();
}

bool inConvexHull(const RatVec& p, const std::vector<RatVec>& points) {
  if (points.empty()) return false;
  const int d = static_cast<int>(p.size());
  const int rows = d + 1;
  const int k = static_cast<int>(points.size());

  // Phase-one tableau: columns 0..k-1 are the lambda variables, columns
  // k..k+rows-1 the artificials, last column the RHS.
  const int cols = k + rows + 1;
  std::vector<RatVec> t(rows, RatVec(cols, Rat(0)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < k; ++j) t[i][j] = (i < d) ? points[j][i] : Rat(1);
    Rat rhs = (i < d) ? p[i] : Rat(1);
    if (rhs < 0) {
      for (int j = 0; j < k; ++j) t[i][j] = -t[i][j];
      rhs = -rhs;
    }
    t[i][k + i] = 1;
    t[i][cols - 1] = rhs;
  }
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = k + i;

  // objective row: minimize sum of artificials -> reduced costs
  RatVec obj(cols, Rat(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) obj[j] -= t[i][j];
  for (int i = 0; i < rows; ++i) obj[k + i] = 0;

  while (true) {
    int enter = -1;
    for (int j = 0; j < k; ++j) // Bland: smallest index, artificials never re-enter
      if (obj[j] < 0) { enter = j; break; }
    if (enter < 0) break;
    int leave = -1;
    Rat bestRatio;
    for (int i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][cols - 1] / t[i][enter];
      if (leave < 0 || ratio < bestRatio ||
          (ratio == bestRatio && basis[i] < basis[leave])) {
        leave = i;
        bestRatio = ratio;
      }
    }
    if (leave < 0) break; // unbounded cannot happen here, but be safe
    Rat piv = t[leave][enter];
    for (int j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (int j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (obj[enter] != 0) {
      Rat f = obj[enter];
      for (int j = 0; j < cols; ++j) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  Rat total = 0;
  for (int i = 0; i < rows; ++i)
    if (basis[i] >= k) total += t[i][cols - 1];
  return total == 0;
}

} // namespace mpp
