#pragma once

// Small dense linear algebra over F_p used by the character-table kernel.

#include "equicat/common.hpp"

#include <vector>

namespace equicat::modp {

using ll = long long;

inline ll mul(ll a, ll b, ll p) { return static_cast<ll>(static_cast<__int128>(a) * b % p); }
inline ll add(ll a, ll b, ll p) { return (a + b) % p; }
inline ll sub(ll a, ll b, ll p) { return ((a - b) % p + p) % p; }
inline ll pow(ll a, ll e, ll p) {
  ll r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}
inline ll inv(ll a, ll p) { return pow(((a % p) + p) % p, p - 2, p); }

struct Mat {
  int rows = 0, cols = 0;
  std::vector<ll> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  ll& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  ll at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

inline Mat matmul(const Mat& x, const Mat& y, ll p) {
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      ll v = x.at(i, k);
      if (!v) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) = add(r.at(i, j), mul(v, y.at(k, j), p), p);
    }
  return r;
}

// Row-reduce in place; returns pivot column per row.
inline std::vector<int> row_reduce(Mat& m, ll p) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    ll f = inv(m.at(row, col), p);
    for (int j = 0; j < m.cols; ++j) m.at(row, j) = mul(m.at(row, j), f, p);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row) continue;
      ll g = m.at(i, col);
      if (!g) continue;
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = sub(m.at(i, j), mul(g, m.at(row, j), p), p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Kernel basis of m (as column vectors).
inline std::vector<std::vector<ll>> kernel_basis(Mat m, ll p) {
  int n = m.cols;
  std::vector<int> pivots = row_reduce(m, p);
  std::vector<char> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<ll>> basis;
  for (int freec = 0; freec < n; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<ll> v(n, 0);
    v[freec] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = sub(0, m.at(static_cast<int>(r), freec), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve B * R = W for R, where B has full column rank.
inline Mat solve_in_span(const Mat& b, const Mat& w, ll p) {
  Mat aug(b.rows, b.cols + w.cols);
  for (int i = 0; i < b.rows; ++i) {
    for (int j = 0; j < b.cols; ++j) aug.at(i, j) = b.at(i, j);
    for (int j = 0; j < w.cols; ++j) aug.at(i, b.cols + j) = w.at(i, j);
  }
  std::vector<int> pivots = row_reduce(aug, p);
  Mat r(b.cols, w.cols);
  for (size_t row = 0; row < pivots.size(); ++row) {
    int col = pivots[row];
    if (col >= b.cols) throw internal_error("solve_in_span: vector outside span");
    for (int j = 0; j < w.cols; ++j) r.at(col, j) = aug.at(static_cast<int>(row), b.cols + j);
  }
  if (static_cast<int>(pivots.size()) != b.cols) throw internal_error("solve_in_span: basis not full rank");
  return r;
}

// Characteristic polynomial det(xI - A), coefficients low-to-high.
inline std::vector<ll> char_poly(Mat a, ll p) {
  int n = a.rows;
  // Hessenberg reduction by similarity transforms.
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (a.at(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int k = 0; k < n; ++k) std::swap(a.at(piv, k), a.at(j + 1, k));
      for (int k = 0; k < n; ++k) std::swap(a.at(k, piv), a.at(k, j + 1));
    }
    ll d = inv(a.at(j + 1, j), p);
    for (int i = j + 2; i < n; ++i) {
      ll f = mul(a.at(i, j), d, p);
      if (!f) continue;
      for (int k = 0; k < n; ++k) a.at(i, k) = sub(a.at(i, k), mul(f, a.at(j + 1, k), p), p);
      for (int k = 0; k < n; ++k) a.at(k, j + 1) = add(a.at(k, j + 1), mul(f, a.at(k, i), p), p);
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_m h_{k-m,k} (prod subdiag) p_{k-m-1}, 1-based.
  std::vector<std::vector<ll>> polys(n + 1);
  polys[0] = {1};
  for (int k = 1; k <= n; ++k) {
    const auto& prev = polys[k - 1];
    std::vector<ll> cur(k + 1, 0);
    ll hkk = a.at(k - 1, k - 1);
    for (size_t t = 0; t < prev.size(); ++t) {
      cur[t + 1] = add(cur[t + 1], prev[t], p);
      cur[t] = sub(cur[t], mul(hkk, prev[t], p), p);
    }
    ll prod = 1;
    for (int m = 1; m <= k - 1; ++m) {
      prod = mul(prod, a.at(k - m, k - m - 1), p);  // h_{k-m+1, k-m}
      if (!prod) break;
      ll coef = mul(a.at(k - m - 1, k - 1), prod, p);  // h_{k-m, k}
      if (!coef) continue;
      const auto& q = polys[k - m - 1];
      for (size_t t = 0; t < q.size(); ++t) cur[t] = sub(cur[t], mul(coef, q[t], p), p);
    }
    polys[k] = std::move(cur);
  }
  return polys[n];
}

inline ll poly_eval(const std::vector<ll>& poly, ll x, ll p) {
  ll r = 0;
  for (size_t i = poly.size(); i-- > 0;) r = add(mul(r, x, p), poly[i], p);
  return r;
}

inline bool is_prime(ll n) {
  if (n < 2) return false;
  for (ll d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Generator of F_p^*.
inline ll primitive_root(ll p) {
  std::vector<ll> qs;
  ll m = p - 1;
  for (ll d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      qs.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) qs.push_back(m);
  for (ll g = 2; g < p; ++g) {
    bool ok = true;
    for (ll q : qs)
      if (pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw internal_error("no primitive root found");
}

}  // namespace equicat::modp
