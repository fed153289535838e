#pragma once

// The named property suite behind `check`: every invariant the engine relies
// on, run against one instance. `full` adds the exhaustive scans; `fast`
// keeps the structural identities.

#include "equicat/centralizer.hpp"
#include "equicat/fusion_lattice.hpp"

namespace equicat {

enum class CheckLevel { fast, full };

namespace detail {

// Pre-expanded fusion constituents for lock-free closure scans.
struct FusionClosure {
  int n;
  std::vector<std::vector<int>> parts;  // parts[i*n+j] = constituent indices
  std::vector<int> duals;

  explicit FusionClosure(const IrrSet& irr) : n(irr.size()) {
    parts.resize(static_cast<size_t>(n) * n);
    duals.resize(n);
    for (int i = 0; i < n; ++i) {
      duals[i] = irr.dual(i);
      for (int j = 0; j < n; ++j)
        for (const auto& [k, m] : irr.fusion(i, j))
          parts[static_cast<size_t>(i) * n + j].push_back(k);
    }
  }
  MemberSet close(MemberSet m, int unit) const {
    m[unit] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < n; ++i) {
        if (!m[i]) continue;
        if (!m[duals[i]]) {
          m[duals[i]] = 1;
          changed = true;
        }
        for (int j = 0; j < n; ++j) {
          if (!m[j]) continue;
          for (int k : parts[static_cast<size_t>(i) * n + j])
            if (!m[k]) {
              m[k] = 1;
              changed = true;
            }
        }
      }
    }
    return m;
  }
};

}  // namespace detail

class CheckRunner {
 public:
  CheckRunner(const PointedCrossedCategory& cat, const IrrSet& irr) : cat_(cat), irr_(irr) {}

  std::vector<CheckItem> run(CheckLevel level) {
    items_.clear();
    named("group and action structure", [&] { return group_structure(); });
    named("global dimension sum", [&] { return global_dimension(); });
    named("duality involution preserving fpdim", [&] { return duality(); });
    named("fusion unit and duality axioms", [&] { return fusion_axioms(); });
    named("fusion dimension identity", [&] { return fusion_dims(); });
    named("conjugation transport round trip", [&] { return transport_round_trip(); });
    named("cocycle transport coboundary identity", [&] { return cocycle_transport(); });
    named("datum/subcategory bijection and Prop 3.11", [&] { return lattice_bijection(); });
    named("Remark 3.9: trivial lambda when H = 1", [&] { return remark_39(); });
    named("centralization matrix symmetric", [&] { return matrix_symmetric(); });
    named("centralizers closed under fusion and duality", [&] { return centralizers_closed(); });
    named("Rep(G) kernel criterion matches double braiding", [&] { return kernel_criterion(); });
    named("center support identity H_{Z2} = G_1", [&] { return center_support(); });
    named("Theorem 5.8 support identities", [&] { return thm58(); });
    named("commutation [K_D, H_D] = 1", [&] { return commutation(); });
    named("FPdim(D) FPdim(D') = FPdim(C) FPdim(D ^ Z2)", [&] { return eq45(); });
    named("double centralizer D'' = D v Z2", [&] { return double_centralizer(); });
    named("closed-form centralizer datum (surjective grading, trivial center)",
          [&] { return thm61(); });
    named("H_D = K_{D'} on nondegenerate instances", [&] { return nondeg_support(); });
    if (level == CheckLevel::full) {
      named("fusion associativity", [&] { return associativity(); });
      named("stabilizer character orthogonality", [&] { return orthogonality(); });
      named("scalar criterion |chi(h)| = chi(1) iff scalar action", [&] { return lemma72(); });
      named("meet/join formulas against bitset and closure oracles", [&] { return lattice_laws(); });
      named("centralizer dualities (D v E)' = D' ^ E', (D ^ E)' = D' v E'",
            [&] { return eq46(); });
      named("double d-scalar invariance under (b,c) -> (ab,ac)", [&] { return remark513(); });
      named("double d-scalar invariance under simultaneous conjugation", [&] { return lemma514(); });
      named("displayed omega form agrees with the composed one", [&] { return omega_forms(); });
      named("G-centralizer relation symmetric and G-invariant", [&] { return g_relation(); });
    }
    return items_;
  }

  // shared heavyweight state, built lazily
  const Centralizers& centralizers() {
    if (!cz_) cz_ = std::make_unique<Centralizers>(irr_);
    return *cz_;
  }
  const SubcategoryLattice& lattice() {
    if (!lat_) lat_ = std::make_unique<SubcategoryLattice>(enumerate_subcategories(irr_));
    return *lat_;
  }
  const detail::FusionClosure& closure() {
    if (!fc_) fc_ = std::make_unique<detail::FusionClosure>(irr_);
    return *fc_;
  }

 private:
  template <typename F>
  void named(const std::string& name, F&& f) {
    CheckItem item;
    item.name = name;
    try {
      item.witness = f();
      item.pass = item.witness.empty();
    } catch (const std::exception& e) {
      item.pass = false;
      item.witness = e.what();
    }
    items_.push_back(std::move(item));
  }

  std::string group_structure() {
    const FiniteGroup& g = cat_.g();
    for (const auto& k : all_subgroups(g, cat_.limits().group_order))
      if (g.n % k.order() != 0) return "Lagrange fails";
    for (const auto& o : cat_.orbits())
      if (static_cast<long long>(o.elements.size()) * o.stab.grp.n != g.n)
        return "orbit-stabilizer identity fails at orbit of x" + std::to_string(o.rep);
    return "";
  }

  std::string global_dimension() {
    long long s = 0;
    for (const auto& x : irr_.all()) s += x.fpdim * x.fpdim;
    if (s != static_cast<long long>(cat_.g().n) * cat_.x().n)
      return "sum fpdim^2 = " + std::to_string(s);
    return "";
  }

  std::string duality() {
    for (int i = 0; i < irr_.size(); ++i) {
      if (irr_.dual(irr_.dual(i)) != i) return "dual not involutive at " + irr_[i].label();
      if (irr_[irr_.dual(i)].fpdim != irr_[i].fpdim)
        return "dual changes fpdim at " + irr_[i].label();
    }
    return "";
  }

  std::string fusion_axioms() {
    int unit = irr_.unit();
    for (int i = 0; i < irr_.size(); ++i) {
      if (irr_.fusion_mult(i, unit, i) != 1 || irr_.fusion_mult(unit, i, i) != 1)
        return "unit axiom fails at " + irr_[i].label();
      for (int j = 0; j < irr_.size(); ++j) {
        long long want = (j == irr_.dual(i)) ? 1 : 0;
        if (irr_.fusion_mult(i, j, unit) != want)
          return "duality axiom fails at (" + irr_[i].label() + "," + irr_[j].label() + ")";
      }
    }
    return "";
  }

  std::string fusion_dims() {
    for (int i = 0; i < irr_.size(); ++i)
      for (int j = 0; j < irr_.size(); ++j) {
        long long s = 0;
        for (const auto& [k, m] : irr_.fusion(i, j)) s += m * irr_[k].fpdim;
        if (s != irr_[i].fpdim * irr_[j].fpdim)
          return "dimension identity fails at (" + irr_[i].label() + "," + irr_[j].label() + ")";
      }
    return "";
  }

  std::string transport_round_trip() {
    for (int i = 0; i < irr_.size(); ++i) {
      LocalChar lc = irr_.local_char(i);
      for (int g = 0; g < cat_.g().n; ++g)
        if (irr_.canonical_simple(irr_.conjugate_form(lc, g)) != i)
          return "transport of " + irr_[i].label() + " by g" + std::to_string(g) +
                 " changes the simple";
    }
    return "";
  }

  std::string cocycle_transport() {
    const FiniteGroup& g = cat_.g();
    int n = cat_.scalar_order();
    for (int y = 0; y < cat_.x().n; ++y)
      for (int gg = 0; gg < g.n; ++gg)
        for (int h1 = 0; h1 < g.n; ++h1) {
          if (cat_.act_on(h1, y) != y) continue;
          for (int h2 = 0; h2 < g.n; ++h2) {
            if (cat_.act_on(h2, y) != y) continue;
            Root lhs = Root(n, cat_.gam_exp(h1, h2, y)) * cat_.d_gamma(gg, y, h1) *
                       cat_.d_gamma(gg, y, h2) / cat_.d_gamma(gg, y, g.op(h1, h2));
            Root rhs = Root(n, cat_.gam_exp(g.conj(gg, h1), g.conj(gg, h2), cat_.act_on(gg, y)));
            if (!(lhs == rhs))
              return "coboundary identity fails at (y,g,h,h')=" + detail::tup({y, gg, h1, h2});
          }
        }
    return "";
  }

  std::string lattice_bijection() {
    lattice();  // throws on any bijection/containment failure
    return "";
  }

  std::string remark_39() {
    for (const auto& sc : lattice().subcats)
      if (sc.datum.h.order() == 1)
        for (int e : sc.datum.lam)
          if (e != 0) return "nontrivial lambda with H = 1 at " + sc.datum.label();
    return "";
  }

  std::string matrix_symmetric() {
    const Centralizers& cz = centralizers();
    for (int i = 0; i < irr_.size(); ++i)
      for (int j = 0; j < irr_.size(); ++j)
        if (cz.pair(i, j) != cz.pair(j, i))
          return "asymmetric at (" + irr_[i].label() + "," + irr_[j].label() + ")";
    return "";
  }

  std::string centralizers_closed() {
    const Centralizers& cz = centralizers();
    for (const auto& sc : lattice().subcats)
      if (!is_closed(irr_, cz.centralizer_of(sc.members)))
        return "centralizer of " + sc.datum.label() + " not closed";
    return "";
  }

  std::string kernel_criterion() {
    const Centralizers& cz = centralizers();
    for (int v : irr_.rep_g_simples())
      for (int s = 0; s < irr_.size(); ++s)
        if (rep_centralizer_test(irr_, v, s) != cz.pair(v, s))
          return "mismatch at (" + irr_[v].label() + "," + irr_[s].label() + ")";
    return "";
  }

  std::string center_support() {
    CheckItem item = center_support_identity(centralizers());
    return item.pass ? "" : item.witness;
  }

  std::string thm58() {
    const Centralizers& cz = centralizers();
    for (const auto& sc : lattice().subcats) {
      CentralizerReport rep = centralizer(cz, sc);
      for (const auto& c : rep.checks)
        if (!c.pass && (c.name.find("H_{D'}") != std::string::npos ||
                        c.name.find("K_{D'}") != std::string::npos))
          return sc.datum.label() + ": " + c.name + " " + c.witness;
    }
    return "";
  }

  std::string commutation() {
    for (const auto& sc : lattice().subcats) {
      Subgroup k = support_subgroup(irr_, sc.members);
      for (int a : k.members)
        for (int b : sc.datum.h.members)
          if (!cat_.g().commute(a, b))
            return sc.datum.label() + ": " + std::to_string(a) + " and " + std::to_string(b);
    }
    return "";
  }

  std::string eq45() {
    const Centralizers& cz = centralizers();
    MemberSet z2 = cz.mueger_center();
    long long total = fpdim_of(irr_, MemberSet(irr_.size(), 1));
    for (const auto& sc : lattice().subcats) {
      MemberSet dp = cz.centralizer_of(sc.members);
      if (fpdim_of(irr_, sc.members) * fpdim_of(irr_, dp) !=
          total * fpdim_of(irr_, set_and(sc.members, z2)))
        return "residue nonzero at " + sc.datum.label();
    }
    return "";
  }

  std::string double_centralizer() {
    const Centralizers& cz = centralizers();
    MemberSet z2 = cz.mueger_center();
    int unit = irr_.unit();
    for (const auto& sc : lattice().subcats) {
      MemberSet ddp = cz.centralizer_of(cz.centralizer_of(sc.members));
      if (ddp != closure().close(set_or(sc.members, z2), unit))
        return "D'' != D v Z2 at " + sc.datum.label();
    }
    return "";
  }

  std::string thm61() {
    const Centralizers& cz = centralizers();
    bool applicable =
        cz.nondegenerate() && cat_.grading_image().order() == cat_.g().n;
    if (!applicable) return "";  // hypotheses not met; nothing to assert
    for (const auto& sc : lattice().subcats) {
      CentralizerReport rep = centralizer(cz, sc);
      for (const auto& c : rep.checks)
        if (!c.pass) return sc.datum.label() + ": " + c.name + " " + c.witness;
    }
    return "";
  }

  std::string nondeg_support() {
    const Centralizers& cz = centralizers();
    if (!cz.nondegenerate()) return "";
    for (const auto& sc : lattice().subcats) {
      Subgroup kdp = support_subgroup(irr_, cz.centralizer_of(sc.members));
      if (kdp.members != sc.datum.h.members)
        return "H_D != K_{D'} at " + sc.datum.label();
    }
    return "";
  }

  std::string associativity() {
    int n = irr_.size();
    if (n > 16) return "";  // desk-scale scan only
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          for (int m = 0; m < n; ++m) {
            long long lhs = 0, rhs = 0;
            for (int k = 0; k < n; ++k) {
              lhs += irr_.fusion_mult(i, j, k) * irr_.fusion_mult(k, l, m);
              rhs += irr_.fusion_mult(j, l, k) * irr_.fusion_mult(i, k, m);
            }
            if (lhs != rhs)
              return "associativity fails at (" + std::to_string(i) + "," + std::to_string(j) +
                     "," + std::to_string(l) + ")";
          }
    return "";
  }

  std::string orthogonality() {
    for (size_t oi = 0; oi < cat_.orbits().size(); ++oi) {
      const auto& chars = cat_.irr_chars(static_cast<int>(oi));
      for (size_t a = 0; a < chars.size(); ++a)
        for (size_t b = 0; b < chars.size(); ++b)
          if (multiplicity(chars[a], chars[b]) != (a == b ? 1 : 0))
            return "orthogonality fails on orbit " + std::to_string(oi);
    }
    return "";
  }

  std::string lemma72() {
    for (size_t oi = 0; oi < cat_.orbits().size(); ++oi) {
      const auto& stab = cat_.orbits()[oi].stab;
      for (const auto& chi : cat_.irr_chars(static_cast<int>(oi))) {
        Cyclotomic degsq = Cyclotomic::from_rational(cat_.scalar_order(),
                                                     Rational(chi.degree() * chi.degree()));
        for (int h = 0; h < stab.grp.n; ++h) {
          bool eq = (chi.at(h) * chi.at(h).conj()) == degsq;
          if (eq != scalar_action(chi, h).has_value())
            return "Lemma 7.2 criterion fails on orbit " + std::to_string(oi);
        }
      }
    }
    return "";
  }

  std::string lattice_laws() {
    const auto& lat = lattice();
    if (lat.subcats.size() > 16) return "";  // bounded all-pairs scan
    for (const auto& a : lat.subcats)
      for (const auto& b : lat.subcats) {
        FusionDatum meet = intersect_data(cat_, a.datum, b.datum);
        if (!(meet == datum_of(irr_, set_and(a.members, b.members))))
          return "meet formula disagrees for " + a.datum.label() + ", " + b.datum.label();
        JoinResult join = join_data(irr_, a.datum, b.datum);
        MemberSet jm = closure().close(set_or(a.members, b.members), irr_.unit());
        if (!(join.datum == datum_of(irr_, jm)))
          return "join formula disagrees for " + a.datum.label() + ", " + b.datum.label();
        Subgroup hh = intersect_subgroups(a.datum.h, b.datum.h);
        for (int m : join.datum.h.members)
          if (!hh.contains(m)) return "H_join outside H1 ^ H2";
      }
    return "";
  }

  std::string eq46() {
    const Centralizers& cz = centralizers();
    if (!cz.nondegenerate()) return "";
    const auto& lat = lattice();
    if (lat.subcats.size() > 16) return "";
    int unit = irr_.unit();
    for (const auto& a : lat.subcats)
      for (const auto& b : lat.subcats) {
        MemberSet joined = closure().close(set_or(a.members, b.members), unit);
        if (cz.centralizer_of(joined) !=
            set_and(cz.centralizer_of(a.members), cz.centralizer_of(b.members)))
          return "(D v E)' != D' ^ E'";
        MemberSet met = set_and(a.members, b.members);
        if (cz.centralizer_of(met) !=
            closure().close(set_or(cz.centralizer_of(a.members), cz.centralizer_of(b.members)),
                            unit))
          return "(D ^ E)' != D' v E'";
      }
    return "";
  }

  std::string remark513() {
    const FiniteGroup& g = cat_.g();
    for (int x = 0; x < cat_.x().n; ++x)
      for (int y = 0; y < cat_.x().n; ++y)
        for (int b = 0; b < g.n; ++b)
          for (int c = 0; c < g.n; ++c) {
            Root dbl = d_scalar(cat_, x, y, b, c) * d_scalar(cat_, y, x, c, b);
            for (int a = 0; a < g.n; ++a) {
              Root moved = d_scalar(cat_, x, y, g.op(a, b), g.op(a, c)) *
                           d_scalar(cat_, y, x, g.op(a, c), g.op(a, b));
              if (!(moved == dbl))
                return "invariance fails at (x,y,a,b,c)=" + detail::tup({x, y, a, b, c});
            }
          }
    return "";
  }

  std::string lemma514() {
    const FiniteGroup& g = cat_.g();
    for (int x = 0; x < cat_.x().n; ++x)
      for (int y = 0; y < cat_.x().n; ++y)
        for (int b = 0; b < g.n; ++b)
          for (int c = 0; c < g.n; ++c) {
            Root dbl = d_scalar(cat_, x, y, b, c) * d_scalar(cat_, y, x, c, b);
            for (int a = 0; a < g.n; ++a) {
              Root moved = d_scalar(cat_, cat_.act_on(a, x), cat_.act_on(a, y), b, c) *
                           d_scalar(cat_, cat_.act_on(a, y), cat_.act_on(a, x), c, b);
              if (!(moved == dbl))
                return "invariance fails at (x,y,a,b,c)=" + detail::tup({x, y, a, b, c});
            }
          }
    return "";
  }

  std::string omega_forms() {
    const FiniteGroup& g = cat_.g();
    for (int x = 0; x < cat_.x().n; ++x)
      for (int y = 0; y < cat_.x().n; ++y)
        for (int p = 0; p < g.n; ++p) {
          auto w = omega_p(cat_, x, y, p);
          if (w && !(omega_display(cat_, x, y, p) == *w))
            return "forms disagree at (x,y,p)=" + detail::tup({x, y, p});
        }
    return "";
  }

  std::string g_relation() {
    const Centralizers& cz = centralizers();
    const FiniteGroup& g = cat_.g();
    for (int x = 0; x < cat_.x().n; ++x)
      for (int y = 0; y < cat_.x().n; ++y) {
        bool rel = g_centralize(cz, x, y);
        if (rel != g_centralize(cz, y, x)) return "not symmetric";
        for (int m = 0; m < g.n; ++m)
          for (int n = 0; n < g.n; ++n)
            if (rel != g_centralize(cz, cat_.act_on(m, x), cat_.act_on(n, y)))
              return "not G-invariant at (x,y,m,n)=" + detail::tup({x, y, m, n});
      }
    return "";
  }

  const PointedCrossedCategory& cat_;
  const IrrSet& irr_;
  std::vector<CheckItem> items_;
  std::unique_ptr<Centralizers> cz_;
  std::unique_ptr<SubcategoryLattice> lat_;
  std::unique_ptr<detail::FusionClosure> fc_;
};

inline std::vector<CheckItem> run_checks(const PointedCrossedCategory& cat, const IrrSet& irr,
                                         CheckLevel level) {
  CheckRunner runner(cat, irr);
  return runner.run(level);
}

}  // namespace equicat
