#pragma once

// Character theory of twisted group algebras k_alpha[G]: 2-cocycles, the
// Burnside-Dixon table kernel, projective characters via central extensions,
// multiplicity, induction/restriction, tensor/dual, scalar actions, kernels.
//
// Convention: pi(gh) = alpha(g,h) pi(g) pi(h), alpha normalized and
// root-of-unity valued.

#include "equicat/cyclotomic.hpp"
#include "equicat/group.hpp"
#include "equicat/modp.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>

namespace equicat {

struct Cocycle2 {
  const FiniteGroup* group = nullptr;
  int order = 1;              // N
  std::vector<int> exp;       // n*n exponents mod N

  int at(int g, int h) const { return exp[static_cast<size_t>(g) * group->n + h]; }
  Root root_at(int g, int h) const { return Root(order, at(g, h)); }
  bool is_trivial() const {
    return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
  }
  friend bool operator==(const Cocycle2& a, const Cocycle2& b) {
    return a.order == b.order && a.exp == b.exp;
  }
};

inline Cocycle2 trivial_cocycle(const FiniteGroup& g, int order = 1) {
  Cocycle2 c;
  c.group = &g;
  c.order = order;
  c.exp.assign(static_cast<size_t>(g.n) * g.n, 0);
  return c;
}

inline Cocycle2 validate_cocycle(const FiniteGroup& g, int order, std::vector<int> exp_table) {
  if (order <= 0) throw validation_error("cocycle order must be positive");
  if (exp_table.size() != static_cast<size_t>(g.n) * g.n)
    throw validation_error("cocycle table size mismatch");
  for (auto& e : exp_table) e = mod_norm(e, order);
  Cocycle2 c;
  c.group = &g;
  c.order = order;
  c.exp = std::move(exp_table);
  for (int x = 0; x < g.n; ++x) {
    if (c.at(x, g.id) != 0 || c.at(g.id, x) != 0)
      throw validation_error("cocycle not normalized at element " + std::to_string(x));
  }
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int t = 0; t < g.n; ++t) {
        int lhs = (c.at(a, b) + c.at(g.op(a, b), t)) % order;
        int rhs = (c.at(a, g.op(b, t)) + c.at(b, t)) % order;
        if (lhs != rhs)
          throw validation_error("cocycle identity fails at (" + std::to_string(a) + "," +
                                 std::to_string(b) + "," + std::to_string(t) + ")");
      }
  return c;
}

// alpha-projective character: per-element exact values.
struct ProjChar {
  const FiniteGroup* group = nullptr;
  Cocycle2 alpha;
  std::vector<Cyclotomic> values;

  const Cyclotomic& at(int g) const { return values[g]; }
  long long degree() const {
    const Cyclotomic& d = values[group->id];
    if (!d.is_rational()) throw internal_error("character degree not rational");
    Rational q = d.rational_part();
    if (denominator(q) != 1 || q <= 0) throw internal_error("character degree not a positive integer");
    return static_cast<long long>(numerator(q));
  }
  friend bool operator==(const ProjChar& a, const ProjChar& b) {
    return a.alpha == b.alpha && a.values == b.values;
  }
};

// (k, g) pairs with product twisted by the reduced cocycle; realizes k_alpha[G]
// inside an ordinary group algebra.
struct CentralExtension {
  const FiniteGroup* base = nullptr;
  int m = 1;  // order of the subgroup of mu_N generated by the cocycle values
  FiniteGroup ext;
  int central = 0;  // index of (1, id); identity of ext when m == 1

  int elt(int k, int g) const { return k * base->n + g; }
  int lift0(int g) const { return g; }  // (0, g)
  int proj(int e) const { return e % base->n; }
  int level(int e) const { return e / base->n; }
};

namespace detail {

// Builds the extension group without the exhaustive validator; associativity
// follows from the (already validated) cocycle identity.
inline CentralExtension central_extension(const FiniteGroup& g, const Cocycle2& alpha) {
  int d = alpha.order;
  for (int e : alpha.exp) d = std::gcd(d, e);
  int m = alpha.order / d;
  CentralExtension ce;
  ce.base = &g;
  ce.m = m;
  int n = m * g.n;
  FiniteGroup ext;
  ext.n = n;
  ext.mul.resize(static_cast<size_t>(n) * n);
  for (int k1 = 0; k1 < m; ++k1)
    for (int g1 = 0; g1 < g.n; ++g1)
      for (int k2 = 0; k2 < m; ++k2)
        for (int g2 = 0; g2 < g.n; ++g2) {
          int k = (k1 + k2 + alpha.at(g1, g2) / d) % m;
          ext.mul[static_cast<size_t>(k1 * g.n + g1) * n + (k2 * g.n + g2)] =
              k * g.n + g.op(g1, g2);
        }
  ext.id = g.id;  // (0, id)
  ext.inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (ext.mul[static_cast<size_t>(a) * n + b] == ext.id &&
          ext.mul[static_cast<size_t>(b) * n + a] == ext.id) {
        ext.inv[a] = b;
        break;
      }
    if (ext.inv[a] < 0) throw internal_error("central extension: missing inverse");
  }
  ce.ext = std::move(ext);
  ce.central = (m > 1) ? ce.elt(1, g.id) : ce.ext.id;
  return ce;
}

struct ConjClasses {
  std::vector<std::vector<int>> classes;  // class 0 = {identity}
  std::vector<int> class_of;
  std::vector<int> reps;
  std::vector<int> inv_class;
};

inline ConjClasses conj_classes(const FiniteGroup& g) {
  ConjClasses cc;
  cc.class_of.assign(g.n, -1);
  std::vector<std::vector<int>> raw;
  for (int x = 0; x < g.n; ++x) {
    if (cc.class_of[x] >= 0) continue;
    std::vector<int> cls = conjugacy_class(g, x);
    for (int c : cls) cc.class_of[c] = static_cast<int>(raw.size());
    raw.push_back(std::move(cls));
  }
  // identity class first, the rest ordered by minimal element
  std::vector<int> order_idx(raw.size());
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::stable_sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    bool ia = raw[a][0] == g.id && raw[a].size() == 1;
    // identity's class is {id}; compare by (not-identity-class, min element)
    bool ib = raw[b][0] == g.id && raw[b].size() == 1;
    if ((cc.class_of[g.id] == a) != (cc.class_of[g.id] == b)) return cc.class_of[g.id] == a;
    (void)ia;
    (void)ib;
    return raw[a][0] < raw[b][0];
  });
  std::vector<int> newpos(raw.size());
  for (size_t i = 0; i < order_idx.size(); ++i) newpos[order_idx[i]] = static_cast<int>(i);
  cc.classes.resize(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) cc.classes[newpos[i]] = std::move(raw[i]);
  for (int x = 0; x < g.n; ++x) cc.class_of[x] = newpos[cc.class_of[x]];
  cc.reps.resize(cc.classes.size());
  cc.inv_class.resize(cc.classes.size());
  for (size_t i = 0; i < cc.classes.size(); ++i) {
    cc.reps[i] = cc.classes[i][0];
    cc.inv_class[i] = cc.class_of[g.inv[cc.reps[i]]];
  }
  return cc;
}

// Burnside-Dixon: exact irreducible character values, lifted into
// Q(zeta_target). target must be a multiple of exponent(g).
inline std::vector<std::vector<Cyclotomic>> dixon_table(const FiniteGroup& g, int target) {
  using modp::ll;
  const ConjClasses cc = conj_classes(g);
  const int r = static_cast<int>(cc.classes.size());
  const int e = exponent(g);
  if (target % e != 0) throw internal_error("dixon: target order not divisible by exponent");

  // prime p = 1 mod e exceeding 2 |G| sqrt(|G|), so degrees and multiplicities
  // lift uniquely from F_p
  ll bound = 2LL * g.n * isqrt_ll(g.n) + 2;
  ll p = e + 1;
  while (p <= bound || (p - 1) % e != 0 || !modp::is_prime(p)) ++p;

  // class multiplication coefficients a[i][j][k]: #\{(x,y) in C_i x C_j : xy = rep_k\}
  std::vector<modp::Mat> mats(r, modp::Mat(r, r));  // mats[i].at(j,k) = a_{ijk}
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      int zk = cc.reps[k];
      for (int x : cc.classes[i]) {
        int y = g.op(g.inv[x], zk);
        mats[i].at(cc.class_of[y], k) += 1;
      }
    }
  // transpose roles: we need (M_i u)_j = sum_k a_{ijk} u_k, i.e. row j, column k
  for (int i = 0; i < r; ++i) {
    modp::Mat t(r, r);
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) t.at(j, k) = mats[i].at(j, k);
    mats[i] = std::move(t);
  }

  // split common eigenspaces
  std::vector<modp::Mat> blocks;
  {
    modp::Mat full(r, r);
    for (int i = 0; i < r; ++i) full.at(i, i) = 1;
    blocks.push_back(std::move(full));
  }
  for (int i = 1; i < r; ++i) {
    std::vector<modp::Mat> next;
    bool all_one = true;
    for (auto& b : blocks) {
      if (b.cols == 1) {
        next.push_back(std::move(b));
        continue;
      }
      all_one = false;
      modp::Mat w = modp::matmul(mats[i], b, p);
      modp::Mat restr = modp::solve_in_span(b, w, p);
      std::vector<ll> poly = modp::char_poly(restr, p);
      for (ll lam = 0; lam < p; ++lam) {
        if (modp::poly_eval(poly, lam, p) != 0) continue;
        modp::Mat shifted = restr;
        for (int d2 = 0; d2 < shifted.rows; ++d2)
          shifted.at(d2, d2) = modp::sub(shifted.at(d2, d2), lam, p);
        auto ker = modp::kernel_basis(shifted, p);
        if (ker.empty()) continue;
        modp::Mat nb(r, static_cast<int>(ker.size()));
        for (size_t c = 0; c < ker.size(); ++c)
          for (int row = 0; row < r; ++row) {
            ll v = 0;
            for (int t2 = 0; t2 < b.cols; ++t2)
              v = modp::add(v, modp::mul(b.at(row, t2), ker[c][t2], p), p);
            nb.at(row, static_cast<int>(c)) = v;
          }
        next.push_back(std::move(nb));
      }
    }
    blocks = std::move(next);
    if (all_one) break;
  }
  if (static_cast<int>(blocks.size()) != r) throw internal_error("dixon: eigenspace split incomplete");

  // recover characters from eigenvectors
  std::vector<std::vector<Cyclotomic>> out;
  ll zgen = modp::primitive_root(p);
  ll ze = modp::pow(zgen, (p - 1) / e, p);
  for (auto& b : blocks) {
    std::vector<ll> u(r);
    for (int i = 0; i < r; ++i) u[i] = b.at(i, 0);
    if (u[0] == 0) throw internal_error("dixon: eigenvector vanishes at identity class");
    ll scale = modp::inv(u[0], p);
    for (auto& v : u) v = modp::mul(v, scale, p);
    ll s = 0;
    for (int i = 0; i < r; ++i) {
      ll term = modp::mul(u[i], u[cc.inv_class[i]], p);
      s = modp::add(s, modp::mul(term, modp::inv(static_cast<ll>(cc.classes[i].size()), p), p), p);
    }
    ll dsq = modp::mul(g.n % p, modp::inv(s, p), p);
    ll deg = isqrt_ll(dsq);
    if (deg * deg != dsq || deg <= 0)
      throw internal_error("dixon: degree recovery failed (d^2 = " + std::to_string(dsq) + ")");
    std::vector<ll> chi_p(r);
    for (int i = 0; i < r; ++i)
      chi_p[i] = modp::mul(modp::mul(deg % p, u[i], p),
                           modp::inv(static_cast<ll>(cc.classes[i].size()), p), p);

    std::vector<Cyclotomic> chi(g.n, Cyclotomic(target));
    std::vector<Cyclotomic> class_val(r, Cyclotomic(target));
    for (int i = 0; i < r; ++i) {
      int gi = cc.reps[i];
      int m = g.order_of(gi);
      ll zm = modp::pow(ze, e / m, p);
      ll minv = modp::inv(m, p);
      Cyclotomic val(target);
      int cur = g.id;
      std::vector<int> cls_pow(m);
      for (int j = 0; j < m; ++j) {
        cls_pow[j] = cc.class_of[cur];
        cur = g.op(cur, gi);
      }
      for (int k = 0; k < m; ++k) {
        ll mk = 0;
        for (int j = 0; j < m; ++j) {
          ll w = modp::pow(zm, static_cast<ll>(mod_norm(-static_cast<long long>(j) * k, m)), p);
          mk = modp::add(mk, modp::mul(chi_p[cls_pow[j]], w, p), p);
        }
        mk = modp::mul(mk, minv, p);
        if (mk > deg)
          throw internal_error("dixon: eigenvalue multiplicity lift out of range");
        if (mk != 0)
          val = val + Cyclotomic::zeta(target, static_cast<long long>(k) * (target / m)) *
                          Rational(mk);
      }
      class_val[i] = std::move(val);
    }
    for (int x = 0; x < g.n; ++x) chi[x] = class_val[cc.class_of[x]];
    out.push_back(std::move(chi));
  }

  // canonical order: degree ascending, then value table descending, which
  // puts the trivial character first in the ordinary case
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const Cyclotomic &da = a[g.id], &db = b[g.id];
    if (!(da == db)) return da < db;
    for (int x = 0; x < g.n; ++x)
      if (!(a[x] == b[x])) return b[x] < a[x];
    return false;
  });

  long long degsum = 0;
  for (const auto& chi : out) {
    Rational d = chi[g.id].rational_part();
    degsum += static_cast<long long>(numerator(d)) * static_cast<long long>(numerator(d));
  }
  if (degsum != g.n) throw internal_error("dixon: sum of squared degrees != |G|");
  return out;
}

// synchronized cache keyed by the full defining data
inline std::shared_ptr<const std::vector<std::vector<Cyclotomic>>> proj_table_cached(
    const FiniteGroup& g, const Cocycle2& alpha, int target);

}  // namespace detail

inline int char_table_order(const FiniteGroup& g, const Cocycle2& alpha) {
  auto ce = detail::central_extension(g, alpha);
  return ce.m == 1 ? exponent(g) : exponent(ce.ext);
}

// All irreducible alpha-projective characters of g, values in Q(zeta_target).
// target must be divisible by the extension exponent and by alpha.order.
inline std::vector<ProjChar> irr_projective(const FiniteGroup& g, const Cocycle2& alpha,
                                            int target) {
  auto values = detail::proj_table_cached(g, alpha, target);
  std::vector<ProjChar> out;
  for (const auto& v : *values) {
    ProjChar pc;
    pc.group = &g;
    pc.alpha = alpha;
    pc.values = v;
    out.push_back(std::move(pc));
  }
  return out;
}

inline std::vector<ProjChar> irr_projective(const FiniteGroup& g, const Cocycle2& alpha) {
  int t = static_cast<int>(lcm_ll(char_table_order(g, alpha), alpha.order));
  return irr_projective(g, alpha, t);
}

inline std::vector<ProjChar> ordinary_char_table(const FiniteGroup& g, int target) {
  return irr_projective(g, trivial_cocycle(g), target);
}
inline std::vector<ProjChar> ordinary_char_table(const FiniteGroup& g) {
  return irr_projective(g, trivial_cocycle(g), exponent(g));
}

namespace detail {

inline std::vector<std::vector<Cyclotomic>> proj_table_impl(const FiniteGroup& g,
                                                            const Cocycle2& alpha, int target) {
  CentralExtension ce = central_extension(g, alpha);
  if (ce.m == 1) return dixon_table(g, target);
  auto ext_table = dixon_table(ce.ext, target);
  // keep characters where the canonical central generator (1, id) acts by
  // zeta_m^{-1}; deflate to G via pi(x) := chi((0, x))
  std::vector<std::vector<Cyclotomic>> out;
  Cyclotomic want = Cyclotomic::zeta(target, -(target / ce.m));
  for (const auto& chi : ext_table) {
    if (!(chi[ce.central] == chi[ce.ext.id] * want)) continue;
    std::vector<Cyclotomic> v(g.n, Cyclotomic(target));
    for (int x = 0; x < g.n; ++x) v[x] = chi[ce.lift0(x)];
    out.push_back(std::move(v));
  }
  if (out.empty()) throw internal_error("irr_projective: no characters over the faithful central character");
  return out;
}

inline std::shared_ptr<const std::vector<std::vector<Cyclotomic>>> proj_table_cached(
    const FiniteGroup& g, const Cocycle2& alpha, int target) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const std::vector<std::vector<Cyclotomic>>>> cache;
  std::ostringstream key;
  key << g.n << "|" << target << "|" << alpha.order << ";";
  for (int v : g.mul) key << v << ",";
  key << ";";
  for (int v : alpha.exp) key << v << ",";
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key.str());
    if (it != cache.end()) return it->second;
  }
  auto result =
      std::make_shared<const std::vector<std::vector<Cyclotomic>>>(proj_table_impl(g, alpha, target));
  std::lock_guard<std::mutex> lock(mu);
  cache[key.str()] = result;
  return result;
}

}  // namespace detail

// m_G(chi1, chi2) = (1/|G|) sum_g alpha(g^{-1}, g) chi1(g) chi2(g^{-1}).
// Exact; throws if the result is not a nonnegative integer.
inline long long multiplicity(const ProjChar& chi1, const ProjChar& chi2) {
  if (chi1.group != chi2.group) throw validation_error("multiplicity: different groups");
  if (!(chi1.alpha == chi2.alpha)) throw validation_error("multiplicity: cocycle mismatch");
  const FiniteGroup& g = *chi1.group;
  int order = chi1.values[g.id].order();
  Cyclotomic sum(order);
  for (int x = 0; x < g.n; ++x) {
    Cyclotomic term = chi1.at(x) * chi2.at(g.inv[x]);
    int aexp = chi1.alpha.at(g.inv[x], x);
    if (aexp != 0)
      term = term * Cyclotomic::from_root(Root(chi1.alpha.order, aexp), order);
    sum = sum + term;
  }
  if (!sum.is_rational()) throw validation_error("multiplicity: non-rational inner product");
  Rational q = sum.rational_part() / g.n;
  if (denominator(q) != 1 || q < 0)
    throw validation_error("multiplicity: not a nonnegative integer (cocycle mismatch?)");
  return static_cast<long long>(numerator(q));
}

// Restriction to a subgroup, as a character of the standalone subgroup group.
inline ProjChar restrict_char(const ProjChar& chi, const SubgroupGroup& h) {
  ProjChar r;
  r.group = &h.grp;
  r.alpha.group = &h.grp;
  r.alpha.order = chi.alpha.order;
  r.alpha.exp.resize(static_cast<size_t>(h.grp.n) * h.grp.n);
  for (int a = 0; a < h.grp.n; ++a)
    for (int b = 0; b < h.grp.n; ++b)
      r.alpha.exp[static_cast<size_t>(a) * h.grp.n + b] =
          chi.alpha.at(h.to_parent[a], h.to_parent[b]);
  r.values.reserve(h.grp.n);
  for (int a = 0; a < h.grp.n; ++a) r.values.push_back(chi.at(h.to_parent[a]));
  return r;
}

// Induction of an alpha|_H-projective character of H <= G to an alpha-projective
// character of G, computed by ordinary induction inside the central extension.
inline ProjChar induce(const ProjChar& chi_h, const SubgroupGroup& h, const FiniteGroup& g,
                       const Cocycle2& alpha_g) {
  int target = chi_h.values[h.grp.id].order();
  CentralExtension ce = detail::central_extension(g, alpha_g);
  const FiniteGroup& eg = ce.ext;
  // inflate to the preimage of H: chi~((k, x)) = zeta_m^{-k} chi(x)
  auto value_on_ext = [&](int u) -> Cyclotomic {
    int x = ce.proj(u);
    int k = ce.level(u);
    int hl = h.from_parent[x];
    if (hl < 0) return Cyclotomic(target);
    Cyclotomic v = chi_h.at(hl);
    if (ce.m > 1 && k != 0)
      v = v * Cyclotomic::zeta(target, -static_cast<long long>(k) * (target / ce.m));
    return v;
  };
  long long eh_order = static_cast<long long>(ce.m) * h.grp.n;
  ProjChar out;
  out.group = &g;
  out.alpha = alpha_g;
  out.values.assign(g.n, Cyclotomic(target));
  for (int x = 0; x < g.n; ++x) {
    int u = ce.lift0(x);
    Cyclotomic sum(target);
    for (int v = 0; v < eg.n; ++v) {
      int conj = eg.op(eg.op(eg.inv[v], u), v);
      sum = sum + value_on_ext(conj);
    }
    out.values[x] = sum * Rational(1, eh_order);
  }
  return out;
}

inline ProjChar tensor(const ProjChar& a, const ProjChar& b) {
  if (a.group != b.group) throw validation_error("tensor: different groups");
  if (a.alpha.order != b.alpha.order) throw validation_error("tensor: cocycle order mismatch");
  ProjChar r = a;
  for (int x = 0; x < a.group->n; ++x) r.values[x] = a.at(x) * b.at(x);
  for (size_t i = 0; i < r.alpha.exp.size(); ++i)
    r.alpha.exp[i] = (a.alpha.exp[i] + b.alpha.exp[i]) % a.alpha.order;
  return r;
}

inline ProjChar dual(const ProjChar& a) {
  ProjChar r = a;
  for (int x = 0; x < a.group->n; ++x) r.values[x] = a.at(x).conj();
  for (auto& e : r.alpha.exp) e = mod_norm(-e, a.alpha.order);
  return r;
}

// Multiplies a character by a root-of-unity valued function f (as a 1-dim
// twist); the cocycle picks up the coboundary of f.
inline ProjChar twist(const ProjChar& a, const std::vector<Root>& f) {
  const FiniteGroup& g = *a.group;
  ProjChar r = a;
  int target = a.values[g.id].order();
  for (int x = 0; x < g.n; ++x)
    r.values[x] = a.at(x) * Cyclotomic::from_root(f[x], target);
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) {
      // alpha'(x,y) = alpha(x,y) f(xy) / (f(x) f(y))
      int d = f[g.op(x, y)].exp - f[x].exp - f[y].exp;
      int scaled = mod_norm(static_cast<long long>(d) * (a.alpha.order / f[x].order), a.alpha.order);
      auto& e = r.alpha.exp[static_cast<size_t>(x) * g.n + y];
      e = (e + scaled) % a.alpha.order;
    }
  return r;
}

// psi(h) with chi(h) = psi(h) chi(1), when h acts as a scalar (Lemma 7.2
// equality case); nullopt otherwise.
inline std::optional<Root> scalar_action(const ProjChar& chi, int h) {
  Cyclotomic ratio = chi.at(h) * Cyclotomic::from_rational(chi.at(h).order(),
                                                           Rational(1, chi.degree()));
  return ratio.as_root();
}

// {g : chi(g) = chi(1)} for an ordinary character.
inline Subgroup kernel_of_char(const ProjChar& chi) {
  if (!chi.alpha.is_trivial())
    throw validation_error("kernel_of_char: character has a nontrivial cocycle");
  const FiniteGroup& g = *chi.group;
  std::vector<int> members;
  for (int x = 0; x < g.n; ++x)
    if (chi.at(x) == chi.at(g.id)) members.push_back(x);
  return make_subgroup(g, std::move(members));
}

}  // namespace equicat
