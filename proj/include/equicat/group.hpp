#pragma once

// Finite groups as Cayley tables. Elements are dense indices 0..n-1 and all
// structure is table-driven; instances are tiny, so brute force is the idiom.

#include "equicat/common.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace equicat {

struct FiniteGroup {
  int n = 0;
  std::vector<int> mul;  // n*n row-major: mul[a*n+b] = ab
  std::vector<int> inv;
  int id = 0;

  int op(int a, int b) const { return mul[static_cast<size_t>(a) * n + b]; }
  int conj(int g, int x) const { return op(op(g, x), inv[g]); }  // g x g^-1
  int order_of(int g) const {
    int k = 1, cur = g;
    while (cur != id) {
      cur = op(cur, g);
      ++k;
    }
    return k;
  }
  bool commute(int a, int b) const { return op(a, b) == op(b, a); }
};

// Validates a raw Cayley table; reports the first violated axiom.
inline FiniteGroup validate_group(const std::vector<int>& table, int n) {
  if (n <= 0) throw validation_error("group order must be positive");
  if (static_cast<int>(table.size()) != n * n)
    throw validation_error("group table size " + std::to_string(table.size()) + " != n^2");
  for (int v : table)
    if (v < 0 || v >= n) throw validation_error("group table entry out of range: " + std::to_string(v));

  FiniteGroup g;
  g.n = n;
  g.mul = table;

  // identity: two-sided neutral element
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.op(e, a) == a && g.op(a, e) == a;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw validation_error("no identity element");
  g.id = id;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.op(a, g.op(b, c)) != g.op(g.op(a, b), c))
          throw validation_error("associativity fails at (" + std::to_string(a) + "," +
                                 std::to_string(b) + "," + std::to_string(c) + ")");

  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.op(a, b) == id && g.op(b, a) == id) {
        g.inv[a] = b;
        break;
      }
    }
    if (g.inv[a] < 0) throw validation_error("no inverse for element " + std::to_string(a));
  }
  return g;
}

inline int exponent(const FiniteGroup& g) {
  long long e = 1;
  for (int a = 0; a < g.n; ++a) e = lcm_ll(e, g.order_of(a));
  return static_cast<int>(e);
}

struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> members;  // sorted
  std::vector<char> mask;    // size parent->n

  bool contains(int x) const { return mask[x] != 0; }
  int order() const { return static_cast<int>(members.size()); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent == b.parent && a.members == b.members;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  }
};

inline Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> members) {
  Subgroup s;
  s.parent = &g;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  s.members = std::move(members);
  s.mask.assign(g.n, 0);
  for (int m : s.members) s.mask[m] = 1;
  if (!s.contains(g.id)) throw validation_error("subgroup misses identity");
  for (int a : s.members) {
    if (!s.contains(g.inv[a])) throw validation_error("subgroup not closed under inverse");
    for (int b : s.members)
      if (!s.contains(g.op(a, b))) throw validation_error("subgroup not closed under product");
  }
  return s;
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) { return make_subgroup(g, {g.id}); }
inline Subgroup full_subgroup(const FiniteGroup& g) {
  std::vector<int> all(g.n);
  std::iota(all.begin(), all.end(), 0);
  return make_subgroup(g, std::move(all));
}

inline Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack = {g.id}, members = {g.id};
  seen[g.id] = 1;
  for (int x : gens) {
    if (!seen[x]) {
      seen[x] = 1;
      members.push_back(x);
      stack.push_back(x);
    }
  }
  // close under products with generators (inverses come for free in a finite group)
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int x : gens) {
      for (int p : {g.op(a, x), g.op(x, a)}) {
        if (!seen[p]) {
          seen[p] = 1;
          members.push_back(p);
          stack.push_back(p);
        }
      }
    }
  }
  return make_subgroup(g, std::move(members));
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& k) {
  for (int x = 0; x < g.n; ++x)
    for (int m : k.members)
      if (!k.contains(g.conj(x, m))) return false;
  return true;
}

// All subgroups by closure of generated subsets: start from cyclic subgroups and
// repeatedly extend by one generator until nothing new appears.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int order_limit = 48) {
  if (g.n > order_limit)
    throw limit_error("all_subgroups: group order " + std::to_string(g.n) + " exceeds limit " +
                      std::to_string(order_limit));
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  std::vector<std::vector<int>> frontier;
  auto add = [&](Subgroup s) -> bool {
    if (seen.insert(s.members).second) {
      frontier.push_back(s.members);
      out.push_back(std::move(s));
      return true;
    }
    return false;
  };
  add(trivial_subgroup(g));
  for (int a = 0; a < g.n; ++a) add(subgroup_generated(g, {a}));
  while (!frontier.empty()) {
    std::vector<std::vector<int>> cur;
    cur.swap(frontier);
    for (const auto& mem : cur) {
      if (static_cast<int>(mem.size()) == g.n) continue;
      for (int a = 0; a < g.n; ++a) {
        if (std::binary_search(mem.begin(), mem.end(), a)) continue;
        std::vector<int> gens = mem;
        gens.push_back(a);
        add(subgroup_generated(g, gens));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, int order_limit = 48) {
  std::vector<Subgroup> out;
  for (auto& s : all_subgroups(g, order_limit))
    if (is_normal(g, s)) out.push_back(std::move(s));
  return out;
}

inline std::vector<int> conjugacy_class(const FiniteGroup& g, int a) {
  std::vector<char> seen(g.n, 0);
  std::vector<int> cls;
  for (int x = 0; x < g.n; ++x) {
    int c = g.conj(x, a);
    if (!seen[c]) {
      seen[c] = 1;
      cls.push_back(c);
    }
  }
  std::sort(cls.begin(), cls.end());
  return cls;
}

// Largest normal subgroup of g inside k, as the intersection of all conjugates.
inline Subgroup core(const FiniteGroup& g, const Subgroup& k) {
  std::vector<char> keep = k.mask;
  for (int x = 0; x < g.n; ++x) {
    std::vector<char> conjmask(g.n, 0);
    for (int m : k.members) conjmask[g.conj(x, m)] = 1;
    for (int i = 0; i < g.n; ++i) keep[i] = keep[i] && conjmask[i];
  }
  std::vector<int> members;
  for (int i = 0; i < g.n; ++i)
    if (keep[i]) members.push_back(i);
  return make_subgroup(g, std::move(members));
}

inline Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b) {
  std::vector<int> members;
  for (int m : a.members)
    if (b.contains(m)) members.push_back(m);
  return make_subgroup(*a.parent, std::move(members));
}

// Product set HK; a subgroup whenever one factor is normal (callers ensure this).
inline Subgroup product_subgroups(const Subgroup& a, const Subgroup& b) {
  const FiniteGroup& g = *a.parent;
  std::vector<char> seen(g.n, 0);
  std::vector<int> members;
  for (int x : a.members)
    for (int y : b.members) {
      int p = g.op(x, y);
      if (!seen[p]) {
        seen[p] = 1;
        members.push_back(p);
      }
    }
  return make_subgroup(g, std::move(members));
}

struct GroupHom {
  const FiniteGroup* dom = nullptr;
  const FiniteGroup* cod = nullptr;
  std::vector<int> image_of;  // per dom element

  int operator()(int x) const { return image_of[x]; }
};

inline GroupHom validate_hom(const FiniteGroup& dom, const FiniteGroup& cod,
                             std::vector<int> image_of) {
  if (static_cast<int>(image_of.size()) != dom.n) throw validation_error("hom table size mismatch");
  for (int v : image_of)
    if (v < 0 || v >= cod.n) throw validation_error("hom image out of range");
  if (image_of[dom.id] != cod.id) throw validation_error("hom does not preserve identity");
  for (int a = 0; a < dom.n; ++a)
    for (int b = 0; b < dom.n; ++b)
      if (image_of[dom.op(a, b)] != cod.op(image_of[a], image_of[b]))
        throw validation_error("hom not multiplicative at (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
  GroupHom h;
  h.dom = &dom;
  h.cod = &cod;
  h.image_of = std::move(image_of);
  return h;
}

inline Subgroup kernel(const GroupHom& h) {
  std::vector<int> members;
  for (int a = 0; a < h.dom->n; ++a)
    if (h.image_of[a] == h.cod->id) members.push_back(a);
  return make_subgroup(*h.dom, std::move(members));
}

inline Subgroup image(const GroupHom& h) {
  std::vector<int> members(h.image_of.begin(), h.image_of.end());
  return make_subgroup(*h.cod, std::move(members));
}

// Action of `actor` on the group `space` by automorphisms.
struct GroupAction {
  const FiniteGroup* actor = nullptr;
  const FiniteGroup* space = nullptr;
  std::vector<int> perm;  // perm[g*|space| + x] = g.x

  int apply(int g, int x) const { return perm[static_cast<size_t>(g) * space->n + x]; }
};

inline GroupAction validate_action(const FiniteGroup& actor, const FiniteGroup& space,
                                   std::vector<int> perm) {
  if (perm.size() != static_cast<size_t>(actor.n) * space.n)
    throw validation_error("action table size mismatch");
  GroupAction a;
  a.actor = &actor;
  a.space = &space;
  a.perm = std::move(perm);
  for (int x = 0; x < space.n; ++x)
    if (a.apply(actor.id, x) != x) throw validation_error("action: identity does not act trivially");
  for (int g = 0; g < actor.n; ++g) {
    std::vector<char> hit(space.n, 0);
    for (int x = 0; x < space.n; ++x) {
      int y = a.apply(g, x);
      if (y < 0 || y >= space.n) throw validation_error("action image out of range");
      if (hit[y]) throw validation_error("action: element " + std::to_string(g) + " not a bijection");
      hit[y] = 1;
    }
    for (int x = 0; x < space.n; ++x)
      for (int y = 0; y < space.n; ++y)
        if (a.apply(g, space.op(x, y)) != space.op(a.apply(g, x), a.apply(g, y)))
          throw validation_error("action: element " + std::to_string(g) +
                                 " is not an automorphism of the space");
  }
  for (int g = 0; g < actor.n; ++g)
    for (int h = 0; h < actor.n; ++h)
      for (int x = 0; x < space.n; ++x)
        if (a.apply(actor.op(g, h), x) != a.apply(g, a.apply(h, x)))
          throw validation_error("action: perm(gh) != perm(g)perm(h)");
  return a;
}

inline Subgroup stabilizer(const GroupAction& act, int x) {
  std::vector<int> members;
  for (int g = 0; g < act.actor->n; ++g)
    if (act.apply(g, x) == x) members.push_back(g);
  return make_subgroup(*act.actor, std::move(members));
}

inline std::vector<std::vector<int>> orbits(const GroupAction& act) {
  std::vector<char> seen(act.space->n, 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < act.space->n; ++x) {
    if (seen[x]) continue;
    std::vector<int> orb;
    for (int g = 0; g < act.actor->n; ++g) {
      int y = act.apply(g, x);
      if (!seen[y]) {
        seen[y] = 1;
        orb.push_back(y);
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

// A subgroup reindexed as a standalone group, with maps to/from the parent.
struct SubgroupGroup {
  FiniteGroup grp;
  std::vector<int> to_parent;
  std::vector<int> from_parent;  // -1 outside

  int local(int parent_elt) const {
    int v = from_parent[parent_elt];
    if (v < 0) throw internal_error("element not in subgroup");
    return v;
  }
};

inline SubgroupGroup subgroup_as_group(const Subgroup& s) {
  const FiniteGroup& g = *s.parent;
  SubgroupGroup sg;
  sg.to_parent = s.members;
  sg.from_parent.assign(g.n, -1);
  for (size_t i = 0; i < s.members.size(); ++i) sg.from_parent[s.members[i]] = static_cast<int>(i);
  int m = s.order();
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<size_t>(i) * m + j] = sg.from_parent[g.op(s.members[i], s.members[j])];
  sg.grp = validate_group(table, m);
  return sg;
}

// --- builders -------------------------------------------------------------

inline FiniteGroup cyclic_group(int n) {
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return validate_group(t, n);
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.n * b.n;
  std::vector<int> t(static_cast<size_t>(n) * n);
  auto idx = [&](int x, int y) { return x * b.n + y; };
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1)
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2)
          t[static_cast<size_t>(idx(x1, y1)) * n + idx(x2, y2)] = idx(a.op(x1, x2), b.op(y1, y2));
  return validate_group(t, n);
}

inline FiniteGroup klein_four() { return direct_product(cyclic_group(2), cyclic_group(2)); }

namespace detail {
// Group generated by permutations of {0..deg-1}, elements indexed in discovery order
// with the identity first; composition (p*q)(i) = p(q(i)).
inline FiniteGroup perm_group(int deg, const std::vector<std::vector<int>>& gens) {
  std::vector<std::vector<int>> elts;
  std::vector<int> identity(deg);
  std::iota(identity.begin(), identity.end(), 0);
  elts.push_back(identity);
  auto find = [&](const std::vector<int>& p) -> int {
    for (size_t i = 0; i < elts.size(); ++i)
      if (elts[i] == p) return static_cast<int>(i);
    return -1;
  };
  for (size_t i = 0; i < elts.size(); ++i) {
    for (const auto& gp : gens) {
      std::vector<int> comp(deg);
      for (int k = 0; k < deg; ++k) comp[k] = gp[elts[i][k]];
      if (find(comp) < 0) elts.push_back(comp);
    }
  }
  std::sort(elts.begin() + 1, elts.end());
  int n = static_cast<int>(elts.size());
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> comp(deg);
      for (int k = 0; k < deg; ++k) comp[k] = elts[i][elts[j][k]];
      int id2 = find(comp);
      if (id2 < 0) throw internal_error("perm_group: not closed");
      t[static_cast<size_t>(i) * n + j] = id2;
    }
  return validate_group(t, n);
}
}  // namespace detail

inline FiniteGroup symmetric3() { return detail::perm_group(3, {{1, 0, 2}, {1, 2, 0}}); }
inline FiniteGroup dihedral4() { return detail::perm_group(4, {{1, 2, 3, 0}, {1, 0, 3, 2}}); }

inline FiniteGroup quaternion8() {
  // elements 0..7 = 1, -1, i, -i, j, -j, k, -k
  auto enc = [](int sign, int axis) { return (axis << 1) | (sign < 0 ? 1 : 0); };
  std::vector<int> t(64);
  auto mult = [&](int a, int b) {
    int sa = (a & 1) ? -1 : 1, xa = a >> 1;
    int sb = (b & 1) ? -1 : 1, xb = b >> 1;
    // axes: 0=1, 1=i, 2=j, 3=k
    static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    return enc(sa * sb * sg[xa][xb], ax[xa][xb]);
  };
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[a * 8 + b] = mult(a, b);
  return validate_group(t, 8);
}

inline FiniteGroup trivial_group() { return cyclic_group(1); }

}  // namespace equicat
