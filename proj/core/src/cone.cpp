#include "xsigma/cone.hpp"

#include <algorithm>
#include <numeric>

#include "xsigma/errors.hpp"

namespace xsigma::cone {

IVec primitive(const IVec& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) throw InternalError("primitive of the zero vector");
  IVec out = v;
  for (auto& x : out) x /= g;
  return out;
}

namespace {

/// Phase-1 simplex on the tableau [A | I | b] with b >= 0, minimizing the sum
/// of the artificial variables. Feasible iff the optimum is zero. Bland's rule
/// keeps the exact-arithmetic pivoting finite.
bool phase1_feasible(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const size_t rows = a.size();
  const size_t n = rows ? a[0].size() : 0;  // structural variables
  for (size_t i = 0; i < rows; ++i) {
    if (b[i] < Rat(0)) {
      b[i] = -b[i];
      for (auto& x : a[i]) x = -x;
    }
  }
  const size_t total = n + rows;  // structural + artificial
  // tableau[i] = row of length total + 1 (rhs last)
  std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(total + 1, Rat(0)));
  std::vector<size_t> basis(rows);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = Rat(1);
    t[i][total] = b[i];
    basis[i] = n + i;
  }
  // reduced cost row for minimizing the artificial sum
  std::vector<Rat> cost(total + 1, Rat(0));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j <= total; ++j) cost[j] -= t[i][j];
  for (size_t i = 0; i < rows; ++i) cost[n + i] = Rat(0);

  const size_t max_iters = 8000;
  for (size_t iter = 0; iter < max_iters; ++iter) {
    size_t enter = total;
    for (size_t j = 0; j < total; ++j)
      if (cost[j] < Rat(0)) {
        enter = j;
        break;
      }
    if (enter == total) break;  // optimal
    size_t leave = rows;
    Rat best(0);
    for (size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= Rat(0)) continue;
      Rat ratio = t[i][total] / t[i][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) throw InternalError("phase-1 objective unbounded");
    Rat piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      Rat f = t[i][enter];
      for (size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
    }
    if (!cost[enter].is_zero()) {
      Rat f = cost[enter];
      for (size_t j = 0; j <= total; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
    if (iter + 1 == max_iters) throw InternalError("simplex iteration cap hit");
  }
  return (-cost[total]).is_zero();
}

}  // namespace

bool in_cone(const std::vector<IVec>& generators, const QVec& target) {
  if (generators.empty())
    return std::all_of(target.begin(), target.end(), [](const Rat& r) { return r.is_zero(); });
  const size_t dim = target.size();
  std::vector<std::vector<Rat>> a(dim, std::vector<Rat>(generators.size(), Rat(0)));
  for (size_t j = 0; j < generators.size(); ++j) {
    XSIGMA_CHECK(generators[j].size() == dim);
    for (size_t i = 0; i < dim; ++i) a[i][j] = Rat(generators[j][i]);
  }
  return phase1_feasible(std::move(a), QVec(target));
}

bool in_cone(const std::vector<IVec>& generators, const IVec& target) {
  QVec t(target.begin(), target.end());
  return in_cone(generators, t);
}

bool is_pointed(const std::vector<IVec>& generators) {
  for (const auto& g : generators) {
    IVec neg = g;
    for (auto& x : neg) x = -x;
    if (in_cone(generators, neg)) return false;
  }
  return true;
}

long long abs_determinant(const std::vector<IVec>& rows) {
  using i128 = __int128;
  const size_t n = rows.size();
  std::vector<std::vector<i128>> m(n, std::vector<i128>(n));
  for (size_t i = 0; i < n; ++i) {
    XSIGMA_CHECK(rows[i].size() == n);
    for (size_t j = 0; j < n; ++j) m[i][j] = rows[i][j];
  }
  i128 prev = 1;
  for (size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      for (auto& x : m[k]) x = -x;  // keep the determinant sign coherent
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    prev = m[k][k];
  }
  i128 det = m[n - 1][n - 1];
  if (det < 0) det = -det;
  XSIGMA_CHECK(det <= i128(INT64_MAX));
  return static_cast<long long>(det);
}

std::optional<QMat> invert(const QMat& m) {
  const size_t n = m.size();
  QMat t(n, QVec(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    XSIGMA_CHECK(m[i].size() == n);
    for (size_t j = 0; j < n; ++j) t[i][j] = m[i][j];
    t[i][n + i] = Rat(1);
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && t[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(t[col], t[piv]);
    Rat d = t[col][col];
    for (auto& x : t[col]) x /= d;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || t[i][col].is_zero()) continue;
      Rat f = t[i][col];
      for (size_t j = 0; j < 2 * n; ++j) t[i][j] -= f * t[col][j];
    }
  }
  QMat out(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = t[i][n + j];
  return out;
}

}  // namespace xsigma::cone
