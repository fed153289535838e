#pragma once

// Exact arithmetic in Q(zeta_N), plus roots of unity represented by their
// exponent mod N. Every scalar in the engine lives in one of these two types.

#include "equicat/common.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>

namespace equicat {

// zeta_N^exp with 0 <= exp < N.
struct Root {
  int order = 1;
  int exp = 0;

  Root() = default;
  Root(int order_, long long exp_) : order(order_), exp(mod_norm(exp_, order_)) {
    if (order_ <= 0) throw validation_error("root order must be positive");
  }

  static Root one(int order_) { return Root(order_, 0); }
  bool is_one() const { return exp == 0; }
  Root inv() const { return Root(order, -exp); }
  Root pow(long long k) const { return Root(order, static_cast<long long>(exp) * (k % order)); }

  friend Root operator*(const Root& a, const Root& b) {
    if (a.order != b.order)
      throw validation_error("root order mismatch: " + std::to_string(a.order) + " vs " +
                             std::to_string(b.order));
    return Root(a.order, static_cast<long long>(a.exp) + b.exp);
  }
  friend Root operator/(const Root& a, const Root& b) { return a * b.inv(); }
  friend bool operator==(const Root& a, const Root& b) = default;

  // Same root viewed in mu_M, N | M.
  Root lift(int m) const {
    if (m % order != 0) throw validation_error("root lift: target order not a multiple");
    return Root(m, static_cast<long long>(exp) * (m / order));
  }

  std::string str() const { return std::to_string(exp) + "/" + std::to_string(order); }
};

namespace detail {

// Integer polynomials, dense, index = power.
using IPoly = std::vector<BigInt>;

inline IPoly ipoly_trim(IPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// Exact division of integer polynomials; b must be monic. Remainder must vanish.
inline IPoly ipoly_div_exact(IPoly a, const IPoly& b) {
  if (b.empty() || b.back() != 1) throw internal_error("ipoly_div_exact: divisor not monic");
  IPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigInt(0));
  while (a.size() >= b.size()) {
    BigInt c = a.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a = ipoly_trim(std::move(a));
    if (!a.empty() && a.size() >= b.size() && a.back() == 0) a = ipoly_trim(std::move(a));
  }
  if (!ipoly_trim(a).empty()) throw internal_error("ipoly_div_exact: nonzero remainder");
  return ipoly_trim(std::move(q));
}

// Phi_N via x^N - 1 = prod_{d | N} Phi_d.
inline IPoly cyclotomic_poly(int n, std::map<int, IPoly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  IPoly num(n + 1, BigInt(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) num = ipoly_div_exact(std::move(num), cyclotomic_poly(d, memo));
  }
  memo[n] = num;
  return num;
}

// Per-order context: Phi_N and the power basis reduction of zeta^k for k < N.
struct CycContext {
  int order;
  int deg;                                   // phi(N)
  std::vector<Rational> phi;                 // Phi_N coefficients, monic, size deg+1
  std::vector<std::vector<Rational>> power;  // power[k] = zeta^k in the basis, k in [0, N)

  explicit CycContext(int n) : order(n) {
    std::map<int, IPoly> memo;
    IPoly p = cyclotomic_poly(n, memo);
    deg = static_cast<int>(p.size()) - 1;
    phi.resize(p.size());
    for (size_t i = 0; i < p.size(); ++i) phi[i] = Rational(p[i]);
    power.assign(n, std::vector<Rational>(deg, Rational(0)));
    // zeta^k for k < deg is a basis vector; beyond that use
    // zeta^k = zeta^{k-1} * zeta reduced by Phi_N.
    std::vector<Rational> cur(deg, Rational(0));
    cur[0] = 1;
    power[0] = cur;
    for (int k = 1; k < n; ++k) {
      std::vector<Rational> next(deg, Rational(0));
      for (int i = 0; i + 1 < deg; ++i) next[i + 1] = cur[i];
      Rational top = cur[deg - 1];  // coefficient of zeta^deg after shift
      if (top != 0) {
        for (int i = 0; i < deg; ++i) next[i] -= top * phi[i];
      }
      power[k] = next;
      cur = std::move(next);
    }
  }
};

inline std::shared_ptr<const CycContext> cyc_context(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CycContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<const CycContext>(n);
  cache[n] = ctx;
  return ctx;
}

}  // namespace detail

// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1};
// canonical form, so equality is coefficient-wise.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int order) : ctx_(detail::cyc_context(order)), c_(ctx_->deg, Rational(0)) {}

  static Cyclotomic from_rational(int order, const Rational& q) {
    Cyclotomic z(order);
    z.c_[0] = q;
    return z;
  }
  static Cyclotomic from_int(int order, long long v) { return from_rational(order, Rational(v)); }
  static Cyclotomic from_root(const Root& r, int order) {
    if (order % r.order != 0) throw validation_error("cyclotomic: root order does not divide field order");
    Cyclotomic z(order);
    z.c_ = z.ctx_->power[static_cast<size_t>(r.exp) * (order / r.order) % order];
    return z;
  }
  static Cyclotomic zeta(int order, long long exp) { return from_root(Root(order, exp), order); }

  int order() const { return ctx_->order; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
  }
  bool is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
  }
  Rational rational_part() const { return c_[0]; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order() == b.order() && a.c_ == b.c_;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    Cyclotomic r = a;
    for (int i = 0; i < r.deg(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    Cyclotomic r = a;
    for (int i = 0; i < r.deg(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }
  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    int d = a.deg();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (int i = 0; i < d; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (b.c_[j] == 0) continue;
        prod[i + j] += a.c_[i] * b.c_[j];
      }
    }
    // Reduce degrees >= d by Phi_N, top down.
    for (int k = 2 * d - 2; k >= d; --k) {
      Rational top = prod[k];
      if (top == 0) continue;
      prod[k] = 0;
      for (int i = 0; i < d; ++i) prod[k - d + i] -= top * a.ctx_->phi[i];
    }
    Cyclotomic r(a.order());
    for (int i = 0; i < d; ++i) r.c_[i] = prod[i];
    return r;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Rational& q) {
    Cyclotomic r = a;
    for (auto& c : r.c_) c *= q;
    return r;
  }

  // Complex conjugation: zeta -> zeta^{-1}.
  Cyclotomic conj() const {
    Cyclotomic r(order());
    int n = order();
    for (int i = 0; i < deg(); ++i) {
      if (c_[i] == 0) continue;
      const auto& pw = ctx_->power[(n - i) % n];
      for (int j = 0; j < deg(); ++j) r.c_[j] += c_[i] * pw[j];
    }
    return r;
  }

  // Multiplicative inverse of a nonzero element, by solving z*w = 1
  // in the deg-dimensional Q-algebra.
  Cyclotomic inverse() const {
    if (is_zero()) throw validation_error("cyclotomic division by zero");
    int d = deg();
    // Column j of M is z * zeta^j.
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, Rational(0)));
    for (int j = 0; j < d; ++j) {
      Cyclotomic col = *this * basis_elt(j);
      for (int i = 0; i < d; ++i) m[i][j] = col.c_[i];
    }
    m[0][d] = 1;
    // Gaussian elimination over Q.
    for (int col = 0, row = 0; col < d && row < d; ++col) {
      int piv = -1;
      for (int i = row; i < d; ++i)
        if (m[i][col] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) throw internal_error("cyclotomic inverse: singular multiplication map");
      std::swap(m[piv], m[row]);
      Rational p = m[row][col];
      for (int j = col; j <= d; ++j) m[row][j] /= p;
      for (int i = 0; i < d; ++i) {
        if (i == row || m[i][col] == 0) continue;
        Rational f = m[i][col];
        for (int j = col; j <= d; ++j) m[i][j] -= f * m[row][j];
      }
      ++row;
    }
    Cyclotomic r(order());
    for (int i = 0; i < d; ++i) r.c_[i] = m[i][d];
    return r;
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  // The exponent k with *this == zeta^k, if any.
  std::optional<Root> as_root() const {
    int n = order();
    for (int k = 0; k < n; ++k) {
      if (c_ == ctx_->power[k]) return Root(n, k);
    }
    return std::nullopt;
  }

  // Same element viewed in Q(zeta_M), N | M.
  Cyclotomic lift(int m) const {
    int n = order();
    if (m % n != 0) throw validation_error("cyclotomic lift: target order not a multiple");
    if (m == n) return *this;
    Cyclotomic r(m);
    int scale = m / n;
    for (int i = 0; i < deg(); ++i) {
      if (c_[i] == 0) continue;
      const auto& pw = r.ctx_->power[static_cast<size_t>(i) * scale];
      for (int j = 0; j < r.deg(); ++j) r.c_[j] += c_[i] * pw[j];
    }
    return r;
  }

  // |z|^2 = z * conj(z); real, rational iff z is an algebraic integer combo... (not
  // generally rational, callers compare exactly as cyclotomics).
  Cyclotomic norm_sq() const { return *this * conj(); }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < deg(); ++i) {
      if (c_[i] == 0) continue;
      if (!first) os << " + ";
      os << c_[i];
      if (i > 0) os << "*z^" << i;
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

  // Total order for canonical sorting (order, then coefficients).
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    for (int i = 0; i < a.deg(); ++i) {
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
  }

 private:
  int deg() const { return ctx_->deg; }
  Cyclotomic basis_elt(int j) const {
    Cyclotomic z(order());
    z.c_[j] = 1;
    return z;
  }
  void check_same(const Cyclotomic& b) const {
    if (order() != b.order())
      throw validation_error("cyclotomic order mismatch: " + std::to_string(order()) + " vs " +
                             std::to_string(b.order()));
  }

  std::shared_ptr<const detail::CycContext> ctx_;
  std::vector<Rational> c_;
};

}  // namespace equicat
