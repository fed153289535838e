#pragma once

// The input data model: a finite crossed module (G, X, bd) with a
// quasi-abelian 3-cocycle (w, gam, mu, c), validated exhaustively, plus the
// derived scalar accessors everything downstream consumes.

#include "equicat/chartable.hpp"
#include "equicat/cyclotomic.hpp"
#include "equicat/group.hpp"

#include <memory>
#include <mutex>
#include <sstream>

namespace equicat {

struct Limits {
  int group_order = 48;
  int product_order = 576;  // |G| * |X|
  int subcats = 4096;
};

// Unvalidated instance data, exactly what the file format carries.
struct RawInstance {
  int scalar_order = 1;
  std::string g_name = "G", x_name = "X";
  int g_order = 0, x_order = 0;
  std::vector<int> g_table, x_table;
  std::vector<int> act;  // |G| rows of |X| images
  std::vector<int> bd;   // |X| entries into G
  std::vector<int> w;    // |X|^3
  std::vector<int> gam;  // |G|^2 * |X|
  std::vector<int> mu;   // |G| * |X|^2
  std::vector<int> c;    // |X|^2
};

class PointedCrossedCategory {
 public:
  struct Orbit {
    int rep = 0;
    std::vector<int> elements;
    std::vector<int> transversal;  // per X element: minimal g with g.rep = x, -1 outside
    SubgroupGroup stab;            // stabilizer of rep
    Cocycle2 alpha;                // gamma(.,.;rep) restricted to the stabilizer
  };

  PointedCrossedCategory(const PointedCrossedCategory&) = delete;
  PointedCrossedCategory& operator=(const PointedCrossedCategory&) = delete;

  const FiniteGroup& g() const { return g_; }
  const FiniteGroup& x() const { return x_; }
  const GroupAction& action() const { return act_; }
  const GroupHom& boundary() const { return bd_; }
  int declared_order() const { return declared_n_; }
  int scalar_order() const { return n_; }
  const RawInstance& raw() const { return raw_; }

  int act_on(int gg, int xx) const { return act_.apply(gg, xx); }
  int degree(int xx) const { return bd_.image_of[xx]; }
  const Subgroup& grading_image() const { return g1_; }

  // cocycle exponents, already rescaled to scalar_order()
  int w_exp(int a, int b, int c) const {
    return w_[(static_cast<size_t>(a) * x_.n + b) * x_.n + c];
  }
  int gam_exp(int gg, int hh, int xx) const {
    return gam_[(static_cast<size_t>(gg) * g_.n + hh) * x_.n + xx];
  }
  int mu_exp(int gg, int yy, int zz) const {
    return mu_[(static_cast<size_t>(gg) * x_.n + yy) * x_.n + zz];
  }
  int c_exp(int xx, int yy) const { return c_[static_cast<size_t>(xx) * x_.n + yy]; }

  Root braid_scalar(int xx, int yy) const { return Root(n_, c_exp(xx, yy)); }
  Root tau_scalar(int gg, int yy, int zz) const { return Root(n_, mu_exp(gg, yy, zz)); }

  // D_{g,y}(h) = gamma_{ghg^-1,g}(y) / gamma_{g,h}(y), defined for h in G_y
  Root d_gamma(int gg, int yy, int hh) const {
    if (act_on(hh, yy) != yy) throw validation_error("d_gamma: h does not stabilize y");
    int num = gam_exp(g_.conj(gg, hh), gg, yy);
    int den = gam_exp(gg, hh, yy);
    return Root(n_, num - den);
  }

  const std::vector<Orbit>& orbits() const { return orbits_; }
  int orbit_of(int xx) const { return orbit_of_[xx]; }
  const Orbit& orbit_of_elt(int xx) const { return orbits_[orbit_of_[xx]]; }
  int canonical_rep(int xx) const { return orbits_[orbit_of_[xx]].rep; }

  // gamma(.,.;x) restricted to the stabilizer of x, as a validated cocycle
  Cocycle2 alpha_at(int xx) const;

  // memoized irreducible alpha_x-projective characters of the stabilizer of
  // the orbit representative
  const std::vector<ProjChar>& irr_chars(int orbit_index) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = char_tables_[orbit_index];
    if (!slot) {
      const Orbit& o = orbits_[orbit_index];
      slot = std::make_unique<std::vector<ProjChar>>(irr_projective(o.stab.grp, o.alpha, n_));
    }
    return *slot;
  }

  const Limits& limits() const { return limits_; }

 private:
  PointedCrossedCategory() = default;
  friend std::unique_ptr<PointedCrossedCategory> validate_instance(const RawInstance&,
                                                                   const Limits&);

  RawInstance raw_;
  FiniteGroup g_, x_;
  GroupAction act_;
  GroupHom bd_;
  Subgroup g1_;
  int declared_n_ = 1;
  int n_ = 1;
  std::vector<int> w_, gam_, mu_, c_;
  std::vector<Orbit> orbits_;
  std::vector<int> orbit_of_;
  Limits limits_;

  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<std::vector<ProjChar>>> char_tables_;
};

namespace detail {

class ViolationLog {
 public:
  explicit ViolationLog(size_t cap = 12) : cap_(cap) {}
  void add(const std::string& what) {
    ++count_;
    if (lines_.size() < cap_) lines_.push_back(what);
  }
  bool empty() const { return count_ == 0; }
  std::string render() const {
    std::ostringstream os;
    os << count_ << " violation(s):";
    for (const auto& l : lines_) os << "\n  " << l;
    if (count_ > lines_.size()) os << "\n  ... and " << (count_ - lines_.size()) << " more";
    return os.str();
  }

 private:
  size_t cap_;
  size_t count_ = 0;
  std::vector<std::string> lines_;
};

inline std::string tup(std::initializer_list<int> v) {
  std::string s = "(";
  bool first = true;
  for (int x : v) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace detail

inline std::unique_ptr<PointedCrossedCategory> validate_instance(const RawInstance& raw,
                                                                 const Limits& limits = {}) {
  if (raw.g_order > limits.group_order || raw.x_order > limits.group_order)
    throw limit_error("group order exceeds limit " + std::to_string(limits.group_order));
  if (raw.g_order * raw.x_order > limits.product_order)
    throw limit_error("|G|*|X| exceeds limit " + std::to_string(limits.product_order));
  if (raw.scalar_order <= 0) throw validation_error("scalar order must be positive");

  std::unique_ptr<PointedCrossedCategory> cat(new PointedCrossedCategory);
  cat->raw_ = raw;
  cat->limits_ = limits;
  cat->g_ = validate_group(raw.g_table, raw.g_order);
  cat->x_ = validate_group(raw.x_table, raw.x_order);
  cat->act_ = validate_action(cat->g_, cat->x_, raw.act);
  cat->bd_ = validate_hom(cat->x_, cat->g_, raw.bd);
  cat->g1_ = image(cat->bd_);
  const FiniteGroup& g = cat->g_;
  const FiniteGroup& x = cat->x_;
  const int nx = x.n, ng = g.n;
  const int n0 = raw.scalar_order;

  detail::ViolationLog log;

  // crossed module axioms
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < nx; ++b)
      if (cat->act_.apply(cat->bd_.image_of[a], b) != x.op(x.op(a, b), x.inv[a]))
        log.add("Peiffer identity bd(x).y != xyx^-1 at " + detail::tup({a, b}));
  for (int gg = 0; gg < ng; ++gg)
    for (int a = 0; a < nx; ++a)
      if (cat->bd_.image_of[cat->act_.apply(gg, a)] != g.conj(gg, cat->bd_.image_of[a]))
        log.add("equivariance bd(g.x) != g bd(x) g^-1 at " + detail::tup({gg, a}));
  if (!log.empty()) throw validation_error("crossed module axioms failed, " + log.render());

  auto expect_size = [&](const std::vector<int>& t, size_t want, const char* name) {
    if (t.size() != want)
      throw validation_error(std::string("table ") + name + " has size " +
                             std::to_string(t.size()) + ", expected " + std::to_string(want));
  };
  expect_size(raw.w, static_cast<size_t>(nx) * nx * nx, "w");
  expect_size(raw.gam, static_cast<size_t>(ng) * ng * nx, "gam");
  expect_size(raw.mu, static_cast<size_t>(ng) * nx * nx, "mu");
  expect_size(raw.c, static_cast<size_t>(nx) * nx, "c");

  // local copies at declared order
  auto wv = raw.w;
  auto gv = raw.gam;
  auto mv = raw.mu;
  auto cv = raw.c;
  for (auto* t : {&wv, &gv, &mv, &cv})
    for (auto& e : *t) e = mod_norm(e, n0);
  auto W = [&](int a, int b, int c2) { return wv[(static_cast<size_t>(a) * nx + b) * nx + c2]; };
  auto GM = [&](int a, int b, int c2) { return gv[(static_cast<size_t>(a) * ng + b) * nx + c2]; };
  auto MU = [&](int a, int b, int c2) { return mv[(static_cast<size_t>(a) * nx + b) * nx + c2]; };
  auto C = [&](int a, int b) { return cv[static_cast<size_t>(a) * nx + b]; };
  auto md = [&](long long v) { return mod_norm(v, n0); };

  // normalization: every scalar is 1 when any argument is an identity
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < nx; ++b) {
      for (int c2 = 0; c2 < nx; ++c2)
        if ((a == x.id || b == x.id || c2 == x.id) && W(a, b, c2) != 0)
          log.add("w not normalized at " + detail::tup({a, b, c2}));
      if ((a == x.id || b == x.id) && C(a, b) != 0)
        log.add("c not normalized at " + detail::tup({a, b}));
    }
  for (int gg = 0; gg < ng; ++gg)
    for (int a = 0; a < nx; ++a)
      for (int b = 0; b < nx; ++b)
        if ((gg == g.id || a == x.id || b == x.id) && MU(gg, a, b) != 0)
          log.add("mu not normalized at " + detail::tup({gg, a, b}));
  for (int gg = 0; gg < ng; ++gg)
    for (int hh = 0; hh < ng; ++hh)
      for (int a = 0; a < nx; ++a)
        if ((gg == g.id || hh == g.id || a == x.id) && GM(gg, hh, a) != 0)
          log.add("gam not normalized at " + detail::tup({gg, hh, a}));

  // w is a 3-cocycle on X
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < nx; ++b)
      for (int c2 = 0; c2 < nx; ++c2)
        for (int d = 0; d < nx; ++d) {
          long long lhs = W(b, c2, d) + W(a, x.op(b, c2), d) + W(a, b, c2);
          long long rhs = W(x.op(a, b), c2, d) + W(a, b, x.op(c2, d));
          if (md(lhs) != md(rhs)) log.add("w 3-cocycle identity fails at " + detail::tup({a, b, c2, d}));
        }

  // action-coherence identities
  for (int gg = 0; gg < ng; ++gg)
    for (int a = 0; a < nx; ++a)
      for (int b = 0; b < nx; ++b)
        for (int c2 = 0; c2 < nx; ++c2) {
          long long lhs = W(a, b, c2) - W(cat->act_.apply(gg, a), cat->act_.apply(gg, b),
                                          cat->act_.apply(gg, c2));
          long long rhs = MU(gg, b, c2) + MU(gg, a, x.op(b, c2)) - MU(gg, x.op(a, b), c2) -
                          MU(gg, a, b);
          if (md(lhs) != md(rhs))
            log.add("action/associator identity fails at (g,x,y,z)=" + detail::tup({gg, a, b, c2}));
        }
  for (int gg = 0; gg < ng; ++gg)
    for (int hh = 0; hh < ng; ++hh)
      for (int ll = 0; ll < ng; ++ll)
        for (int a = 0; a < nx; ++a) {
          long long lhs = GM(g.op(gg, hh), ll, a) + GM(gg, hh, cat->act_.apply(ll, a));
          long long rhs = GM(hh, ll, a) + GM(gg, g.op(hh, ll), a);
          if (md(lhs) != md(rhs))
            log.add("gamma cocycle identity fails at (g,h,l,x)=" + detail::tup({gg, hh, ll, a}));
        }
  for (int gg = 0; gg < ng; ++gg)
    for (int hh = 0; hh < ng; ++hh)
      for (int a = 0; a < nx; ++a)
        for (int b = 0; b < nx; ++b) {
          long long lhs = -MU(g.op(gg, hh), a, b) +
                          MU(gg, cat->act_.apply(hh, a), cat->act_.apply(hh, b)) + MU(hh, a, b);
          long long rhs = -GM(gg, hh, a) - GM(gg, hh, b) + GM(gg, hh, x.op(a, b));
          if (md(lhs) != md(rhs))
            log.add("mu/gamma compatibility fails at (g,h,x,y)=" + detail::tup({gg, hh, a, b}));
        }

  // G-braiding consistency, evaluated as scalars on invertible objects
  for (int gg = 0; gg < ng; ++gg)
    for (int a = 0; a < nx; ++a)
      for (int b = 0; b < nx; ++b) {
        int h = cat->bd_.image_of[a];
        int ga = cat->act_.apply(gg, a), gb = cat->act_.apply(gg, b);
        long long lhs = MU(gg, a, b) + C(ga, gb) + GM(g.conj(gg, h), gg, b) - GM(gg, h, b);
        long long rhs = C(a, b) + MU(gg, cat->act_.apply(h, b), a);
        if (md(lhs) != md(rhs))
          log.add("braiding naturality (crossed axiom 1) fails at (g,x,y)=" + detail::tup({gg, a, b}));
      }
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < nx; ++b)
      for (int c2 = 0; c2 < nx; ++c2) {
        int da = cat->bd_.image_of[a], db = cat->bd_.image_of[b];
        int bz = cat->act_.apply(db, c2);
        int abz = cat->act_.apply(g.op(da, db), c2);
        long long lhs = -W(a, b, c2) + C(x.op(a, b), c2) - GM(da, db, c2) - W(abz, a, b);
        long long rhs = C(b, c2) - W(a, bz, b) + C(a, bz);
        if (md(lhs) != md(rhs))
          log.add("braiding hexagon (tensor on the left) fails at (x,y,z)=" + detail::tup({a, b, c2}));
      }
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < nx; ++b)
      for (int c2 = 0; c2 < nx; ++c2) {
        int da = cat->bd_.image_of[a];
        int ab2 = cat->act_.apply(da, b), ac2 = cat->act_.apply(da, c2);
        long long lhs = W(a, b, c2) + C(a, x.op(b, c2)) + MU(da, b, c2) + W(ab2, ac2, a);
        long long rhs = C(a, b) + W(ab2, a, c2) + C(a, c2);
        if (md(lhs) != md(rhs))
          log.add("braiding hexagon (tensor on the right) fails at (x,y,z)=" + detail::tup({a, b, c2}));
      }

  if (!log.empty()) throw validation_error("instance validation failed, " + log.render());

  // orbit structure
  cat->orbit_of_.assign(nx, -1);
  for (const auto& orb : orbits(cat->act_)) {
    PointedCrossedCategory::Orbit o;
    o.elements = orb;
    o.rep = orb[0];
    o.transversal.assign(nx, -1);
    o.transversal[o.rep] = g.id;
    for (int gg = 0; gg < ng; ++gg) {
      int y = cat->act_.apply(gg, o.rep);
      if (o.transversal[y] < 0) o.transversal[y] = gg;
    }
    o.stab = subgroup_as_group(stabilizer(cat->act_, o.rep));
    for (int y : orb) cat->orbit_of_[y] = static_cast<int>(cat->orbits_.size());
    cat->orbits_.push_back(std::move(o));
  }

  // global scalar order: declared order, group exponents, and the exponent of
  // every stabilizer central extension the character theory will use
  long long n = lcm_ll(n0, lcm_ll(exponent(g), exponent(x)));
  for (auto& o : cat->orbits_) {
    std::vector<int> exps(static_cast<size_t>(o.stab.grp.n) * o.stab.grp.n);
    for (int i = 0; i < o.stab.grp.n; ++i)
      for (int j = 0; j < o.stab.grp.n; ++j)
        exps[static_cast<size_t>(i) * o.stab.grp.n + j] =
            GM(o.stab.to_parent[i], o.stab.to_parent[j], o.rep);
    Cocycle2 a0 = validate_cocycle(o.stab.grp, n0, exps);
    n = lcm_ll(n, char_table_order(o.stab.grp, a0));
  }
  cat->declared_n_ = n0;
  cat->n_ = static_cast<int>(n);

  // rescale all tables to the global order
  int scale = cat->n_ / n0;
  cat->w_ = wv;
  cat->gam_ = gv;
  cat->mu_ = mv;
  cat->c_ = cv;
  for (auto* t : {&cat->w_, &cat->gam_, &cat->mu_, &cat->c_})
    for (auto& e : *t) e *= scale;

  for (auto& o : cat->orbits_) {
    std::vector<int> exps(static_cast<size_t>(o.stab.grp.n) * o.stab.grp.n);
    for (int i = 0; i < o.stab.grp.n; ++i)
      for (int j = 0; j < o.stab.grp.n; ++j)
        exps[static_cast<size_t>(i) * o.stab.grp.n + j] =
            cat->gam_exp(o.stab.to_parent[i], o.stab.to_parent[j], o.rep);
    o.alpha = validate_cocycle(o.stab.grp, cat->n_, exps);
  }
  cat->char_tables_.resize(cat->orbits_.size());
  return cat;
}

inline Cocycle2 PointedCrossedCategory::alpha_at(int xx) const {
  if (xx == canonical_rep(xx)) return orbit_of_elt(xx).alpha;
  SubgroupGroup st = subgroup_as_group(stabilizer(act_, xx));
  std::vector<int> exps(static_cast<size_t>(st.grp.n) * st.grp.n);
  for (int i = 0; i < st.grp.n; ++i)
    for (int j = 0; j < st.grp.n; ++j)
      exps[static_cast<size_t>(i) * st.grp.n + j] =
          gam_exp(st.to_parent[i], st.to_parent[j], xx);
  return validate_cocycle(st.grp, n_, exps);
}

inline RawInstance untwisted_double_raw(const FiniteGroup& g, const std::string& name = "G") {
  RawInstance raw;
  raw.scalar_order = std::max(1, exponent(g));
  raw.g_name = name;
  raw.x_name = name;
  raw.g_order = raw.x_order = g.n;
  raw.g_table = raw.x_table = g.mul;
  raw.act.resize(static_cast<size_t>(g.n) * g.n);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) raw.act[static_cast<size_t>(a) * g.n + b] = g.conj(a, b);
  raw.bd.resize(g.n);
  std::iota(raw.bd.begin(), raw.bd.end(), 0);
  raw.w.assign(static_cast<size_t>(g.n) * g.n * g.n, 0);
  raw.gam.assign(static_cast<size_t>(g.n) * g.n * g.n, 0);
  raw.mu.assign(static_cast<size_t>(g.n) * g.n * g.n, 0);
  raw.c.assign(static_cast<size_t>(g.n) * g.n, 0);
  return raw;
}

inline std::unique_ptr<PointedCrossedCategory> untwisted_double(const FiniteGroup& g,
                                                                const Limits& limits = {}) {
  return validate_instance(untwisted_double_raw(g), limits);
}

}  // namespace equicat
