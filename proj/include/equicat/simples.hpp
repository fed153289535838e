#pragma once

// Simple objects of the equivariantization: (orbit representative, irreducible
// projective character of the stabilizer) pairs, with duals, conjugation
// transport along orbits, and character-theoretic fusion.

#include "equicat/crossed_module.hpp"

#include <map>
#include <mutex>

namespace equicat {

struct Simple {
  int orbit = 0;
  int orbit_rep = 0;
  int char_index = 0;
  long long fpdim = 1;       // [G : G_x] * deg(chi)
  std::vector<int> support;  // conjugacy class of degree(orbit_rep)

  std::string label() const {
    return "S{x" + std::to_string(orbit_rep) + "," + std::to_string(char_index) + "}";
  }
};

// A projective character of the stabilizer of an arbitrary point y, with
// values indexed by parent group elements (meaningful on the stabilizer only).
struct LocalChar {
  int point = 0;
  std::vector<Cyclotomic> values;  // size |G|
};

class IrrSet {
 public:
  explicit IrrSet(const PointedCrossedCategory& cat) : cat_(&cat) {
    const auto& orbs = cat.orbits();
    index_.resize(orbs.size());
    long long global_dim = 0;
    for (size_t oi = 0; oi < orbs.size(); ++oi) {
      const auto& chars = cat.irr_chars(static_cast<int>(oi));
      long long cosets = cat.g().n / orbs[oi].stab.grp.n;
      index_[oi].resize(chars.size());
      for (size_t ci = 0; ci < chars.size(); ++ci) {
        Simple s;
        s.orbit = static_cast<int>(oi);
        s.orbit_rep = orbs[oi].rep;
        s.char_index = static_cast<int>(ci);
        s.fpdim = cosets * chars[ci].degree();
        s.support = conjugacy_class(cat.g(), cat.degree(orbs[oi].rep));
        index_[oi][ci] = static_cast<int>(simples_.size());
        global_dim += s.fpdim * s.fpdim;
        simples_.push_back(std::move(s));
      }
    }
    if (global_dim != static_cast<long long>(cat.g().n) * cat.x().n)
      throw internal_error("global dimension " + std::to_string(global_dim) + " != |G||X| = " +
                           std::to_string(static_cast<long long>(cat.g().n) * cat.x().n));
  }

  IrrSet(const IrrSet&) = delete;
  IrrSet& operator=(const IrrSet&) = delete;

  const PointedCrossedCategory& cat() const { return *cat_; }
  int size() const { return static_cast<int>(simples_.size()); }
  const Simple& operator[](int i) const { return simples_[i]; }
  const std::vector<Simple>& all() const { return simples_; }
  int at(int orbit, int char_index) const { return index_[orbit][char_index]; }

  const ProjChar& char_of(int i) const {
    const Simple& s = simples_[i];
    return cat_->irr_chars(s.orbit)[s.char_index];
  }

  // scalar_action of the character of simple i at a parent-group element of
  // its stabilizer, memoized (the lattice and centralizer scans hit this hard)
  std::optional<Root> scalar_of(int i, int parent_elt) const {
    {
      std::lock_guard<std::mutex> lock(scalar_mutex_);
      if (scalar_cache_.empty()) scalar_cache_.resize(simples_.size());
      auto& slot = scalar_cache_[i];
      if (!slot) {
        const auto& stab = cat_->orbits()[simples_[i].orbit].stab;
        const ProjChar& chi = char_of(i);
        auto table = std::make_unique<std::vector<std::optional<Root>>>(cat_->g().n);
        for (int loc = 0; loc < stab.grp.n; ++loc)
          (*table)[stab.to_parent[loc]] = scalar_action(chi, loc);
        slot = std::move(table);
      }
      return (*slot)[parent_elt];
    }
  }

  int unit() const {
    int oe = cat_->orbit_of(cat_->x().id);
    const auto& chars = cat_->irr_chars(oe);
    for (size_t ci = 0; ci < chars.size(); ++ci) {
      bool triv = true;
      for (const auto& v : chars[ci].values)
        if (!(v == Cyclotomic::from_int(cat_->scalar_order(), 1))) {
          triv = false;
          break;
        }
      if (triv) return index_[oe][ci];
    }
    throw internal_error("unit simple not found");
  }

  // The simples over the identity orbit, in bijection with Irr(G).
  std::vector<int> rep_g_simples() const {
    std::vector<int> out;
    int oe = cat_->orbit_of(cat_->x().id);
    for (int i = 0; i < size(); ++i)
      if (simples_[i].orbit == oe) out.push_back(i);
    return out;
  }

  // --- conjugation transport (Lemma 2.3 with the gamma-ratio D-scalars) ----

  // values of the character of simples_[i] as a LocalChar at its orbit rep
  LocalChar local_char(int i) const {
    const Simple& s = simples_[i];
    const auto& o = cat_->orbits()[s.orbit];
    const ProjChar& chi = char_of(i);
    LocalChar lc;
    lc.point = s.orbit_rep;
    lc.values.assign(cat_->g().n, Cyclotomic(cat_->scalar_order()));
    for (int loc = 0; loc < o.stab.grp.n; ++loc) lc.values[o.stab.to_parent[loc]] = chi.at(loc);
    return lc;
  }

  // (y, psi) -> character of the isomorphic simple at g.y:
  // psi'(g h g^-1) = D_{g,y}(h) psi(h)
  LocalChar conjugate_form(const LocalChar& lc, int g) const {
    const FiniteGroup& gg = cat_->g();
    int y = lc.point;
    LocalChar out;
    out.point = cat_->act_on(g, y);
    out.values.assign(gg.n, Cyclotomic(cat_->scalar_order()));
    for (int h = 0; h < gg.n; ++h) {
      if (cat_->act_on(h, y) != y) continue;
      Root d = cat_->d_gamma(g, y, h);
      out.values[gg.conj(g, h)] = lc.values[h] * Cyclotomic::from_root(d, cat_->scalar_order());
    }
    return out;
  }

  // canonical Simple matching a character at an arbitrary orbit point
  int canonical_simple(const LocalChar& lc) const {
    const auto& o = cat_->orbit_of_elt(lc.point);
    int t = o.transversal[lc.point];
    LocalChar at_rep = (lc.point == o.rep) ? lc : conjugate_form(lc, cat_->g().inv[t]);
    const auto& chars = cat_->irr_chars(cat_->orbit_of(lc.point));
    for (size_t ci = 0; ci < chars.size(); ++ci) {
      bool match = true;
      for (int loc = 0; loc < o.stab.grp.n && match; ++loc)
        match = chars[ci].at(loc) == at_rep.values[o.stab.to_parent[loc]];
      if (match) return index_[cat_->orbit_of(lc.point)][ci];
    }
    throw internal_error("canonical_simple: transported character matches no irreducible");
  }

  // --- duality (Eq 3.3: dual char conjugated, twisted by the tau character) -

  int dual(int i) const {
    const Simple& s = simples_[i];
    const FiniteGroup& gg = cat_->g();
    const FiniteGroup& xx = cat_->x();
    int xrep = s.orbit_rep;
    int xinv = xx.inv[xrep];
    LocalChar lc = local_char(i);
    LocalChar dualc;
    dualc.point = xinv;
    dualc.values.assign(gg.n, Cyclotomic(cat_->scalar_order()));
    for (int h = 0; h < gg.n; ++h) {
      if (cat_->act_on(h, xrep) != xrep) continue;
      // G_{x} = G_{x^-1}; value conj(chi(h)) / tau_x(h), tau_x(h) = mu(h; x, x^-1)
      Root tau = cat_->tau_scalar(h, xrep, xinv);
      dualc.values[h] =
          lc.values[h].conj() * Cyclotomic::from_root(tau.inv(), cat_->scalar_order());
    }
    return canonical_simple(dualc);
  }

  // --- fusion --------------------------------------------------------------

  // multiset of (simple index, multiplicity) for S_i (x) S_j
  const std::vector<std::pair<int, long long>>& fusion(int i, int j) const {
    std::lock_guard<std::mutex> lock(fusion_mutex_);
    auto key = std::make_pair(i, j);
    auto it = fusion_cache_.find(key);
    if (it != fusion_cache_.end()) return it->second;
    return fusion_cache_.emplace(key, compute_fusion(i, j)).first->second;
  }

  long long fusion_mult(int i, int j, int k) const {
    for (const auto& [idx, m] : fusion(i, j))
      if (idx == k) return m;
    return 0;
  }

 private:
  std::vector<std::pair<int, long long>> compute_fusion(int i, int j) const {
    const FiniteGroup& gg = cat_->g();
    const FiniteGroup& xx = cat_->x();
    const int n = cat_->scalar_order();
    const Simple &s1 = simples_[i], &s2 = simples_[j];
    const auto& o1 = cat_->orbits()[s1.orbit];
    const auto& o2 = cat_->orbits()[s2.orbit];
    const ProjChar& chi1 = char_of(i);
    const ProjChar& chi2 = char_of(j);

    std::map<int, long long> result;  // simple index -> multiplicity
    long long dim_check = 0;

    for (size_t ou = 0; ou < cat_->orbits().size(); ++ou) {
      const auto& o = cat_->orbits()[ou];
      int u = o.rep;
      // components of the product supported on u
      std::vector<std::pair<int, int>> pairs;
      for (int y1 : o1.elements)
        for (int y2 : o2.elements)
          if (xx.op(y1, y2) == u) pairs.emplace_back(y1, y2);
      if (pairs.empty()) continue;

      // character of the multiplicity space Hom(k_u, S1 (x) S2) as a
      // projective representation of the stabilizer of u
      ProjChar w;
      w.group = &o.stab.grp;
      w.alpha = o.alpha;
      w.values.assign(o.stab.grp.n, Cyclotomic(n));
      for (int loc = 0; loc < o.stab.grp.n; ++loc) {
        int p = o.stab.to_parent[loc];
        Cyclotomic val(n);
        for (auto [y1, y2] : pairs) {
          if (cat_->act_on(p, y1) != y1 || cat_->act_on(p, y2) != y2) continue;
          int t1 = o1.transversal[y1], t2 = o2.transversal[y2];
          int h1 = gg.op(gg.inv[t1], gg.op(p, t1));
          int h2 = gg.op(gg.inv[t2], gg.op(p, t2));
          long long e = cat_->mu_exp(p, y1, y2);
          e += cat_->gam_exp(p, t1, s1.orbit_rep) - cat_->gam_exp(t1, h1, s1.orbit_rep);
          e += cat_->gam_exp(p, t2, s2.orbit_rep) - cat_->gam_exp(t2, h2, s2.orbit_rep);
          Cyclotomic term = Cyclotomic::from_root(Root(n, e), n) *
                            chi1.at(o1.stab.local(h1)) * chi2.at(o2.stab.local(h2));
          val = val + term;
        }
        w.values[loc] = std::move(val);
      }

      const auto& chars = cat_->irr_chars(static_cast<int>(ou));
      long long cosets = gg.n / o.stab.grp.n;
      for (size_t ci = 0; ci < chars.size(); ++ci) {
        long long m = multiplicity(chars[ci], w);
        if (m > 0) {
          int idx = index_[ou][ci];
          result[idx] += m;
          dim_check += m * cosets * chars[ci].degree();
        }
      }
    }

    if (dim_check != s1.fpdim * s2.fpdim)
      throw internal_error("fusion dimension identity fails for " + s1.label() + " (x) " +
                           s2.label() + ": " + std::to_string(dim_check) +
                           " != " + std::to_string(s1.fpdim * s2.fpdim));
    return {result.begin(), result.end()};
  }

  const PointedCrossedCategory* cat_;
  std::vector<Simple> simples_;
  std::vector<std::vector<int>> index_;
  mutable std::mutex fusion_mutex_;
  mutable std::map<std::pair<int, int>, std::vector<std::pair<int, long long>>> fusion_cache_;
  mutable std::mutex scalar_mutex_;
  mutable std::vector<std::unique_ptr<std::vector<std::optional<Root>>>> scalar_cache_;
};

}  // namespace equicat
