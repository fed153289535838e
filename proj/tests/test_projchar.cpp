#include "equicat/chartable.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace equicat;

namespace {

// The symplectic 2-cocycle on Klein four: alpha(g, h) = (-1)^{g_y h_x}.
Cocycle2 klein_symplectic(const FiniteGroup& v4) {
  std::vector<int> exps(16, 0);
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) exps[g * 4 + h] = (g & 1) * (h >> 1) % 2;
  return validate_cocycle(v4, 2, exps);
}

std::multiset<long long> degrees(const std::vector<ProjChar>& chars) {
  std::multiset<long long> out;
  for (const auto& c : chars) out.insert(c.degree());
  return out;
}

}  // namespace

TEST_CASE("validate_cocycle") {
  FiniteGroup c2 = cyclic_group(2);
  CHECK(validate_cocycle(c2, 2, {0, 0, 0, 0}).is_trivial());
  // alpha(g,g) = -1, else 1: a valid nontrivial 2-cocycle on Z/2
  Cocycle2 a = validate_cocycle(c2, 2, {0, 0, 0, 1});
  CHECK_FALSE(a.is_trivial());
  // normalization failure
  CHECK_THROWS_AS(validate_cocycle(c2, 2, {1, 0, 0, 0}), validation_error);
  // cocycle identity failure on Z/4
  FiniteGroup c4 = cyclic_group(4);
  std::vector<int> bad(16, 0);
  bad[1 * 4 + 1] = 1;
  CHECK_THROWS_AS(validate_cocycle(c4, 2, bad), validation_error);
}

TEST_CASE("ordinary character tables") {
  CHECK(degrees(ordinary_char_table(trivial_group())) == std::multiset<long long>{1});
  CHECK(degrees(ordinary_char_table(cyclic_group(2))) == std::multiset<long long>{1, 1});
  CHECK(degrees(ordinary_char_table(symmetric3())) == std::multiset<long long>{1, 1, 2});
  CHECK(degrees(ordinary_char_table(dihedral4())) == std::multiset<long long>{1, 1, 1, 1, 2});
  CHECK(degrees(ordinary_char_table(quaternion8())) == std::multiset<long long>{1, 1, 1, 1, 2});
  CHECK(degrees(ordinary_char_table(cyclic_group(12))) ==
        std::multiset<long long>{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("row orthogonality, exact") {
  for (const FiniteGroup& g : {symmetric3(), dihedral4(), quaternion8(), cyclic_group(6)}) {
    auto chars = ordinary_char_table(g);
    for (size_t i = 0; i < chars.size(); ++i)
      for (size_t j = 0; j < chars.size(); ++j)
        CHECK(multiplicity(chars[i], chars[j]) == (i == j ? 1 : 0));
  }
}

TEST_CASE("character values of Z/n are the expected roots") {
  FiniteGroup c3 = cyclic_group(3);
  auto chars = ordinary_char_table(c3, 3);
  std::set<int> seen;
  for (const auto& c : chars) {
    auto r = c.at(1).as_root();
    REQUIRE(r.has_value());
    seen.insert(r->exp);
  }
  CHECK(seen == std::set<int>{0, 1, 2});
}

TEST_CASE("projective characters via central extension") {
  FiniteGroup v4 = klein_four();
  Cocycle2 alpha = klein_symplectic(v4);
  auto chars = irr_projective(v4, alpha);
  REQUIRE(chars.size() == 1);
  CHECK(chars[0].degree() == 2);
  CHECK(multiplicity(chars[0], chars[0]) == 1);
  // off-identity values vanish: only the identity is alpha-regular
  for (int x = 1; x < 4; ++x) CHECK(chars[0].at(x).is_zero());

  // Z/2 with the nontrivial-looking cocycle: two linear characters with
  // pi(u)^2 = alpha(u,u)^{-1} = -1, i.e. values +-i
  FiniteGroup c2 = cyclic_group(2);
  Cocycle2 b = validate_cocycle(c2, 2, {0, 0, 0, 1});
  auto pchars = irr_projective(c2, b);
  REQUIRE(pchars.size() == 2);
  std::set<int> exps;
  for (const auto& c : pchars) {
    CHECK(c.degree() == 1);
    auto r = c.at(1).as_root();
    REQUIRE(r.has_value());
    // explicit trivializing check: chi(u)^2 * alpha(u,u) = chi(u*u) = 1
    Cyclotomic lhs = c.at(1) * c.at(1) * Cyclotomic::from_root(Root(2, 1), c.at(1).order());
    CHECK(lhs == Cyclotomic::from_int(c.at(1).order(), 1));
    exps.insert(r->exp * (4 / r->order));
  }
  CHECK(exps == std::set<int>{1, 3});  // +-i inside mu_4

  // trivial cocycle reproduces the ordinary table
  FiniteGroup s3 = symmetric3();
  auto ord = ordinary_char_table(s3, 6);
  auto proj = irr_projective(s3, trivial_cocycle(s3, 1), 6);
  REQUIRE(ord.size() == proj.size());
  for (size_t i = 0; i < ord.size(); ++i) CHECK(ord[i].values == proj[i].values);
}

TEST_CASE("tensor and dual") {
  FiniteGroup s3 = symmetric3();
  auto chars = ordinary_char_table(s3, 6);
  const ProjChar& triv = chars[0];
  REQUIRE(std::all_of(triv.values.begin(), triv.values.end(),
                      [](const Cyclotomic& v) { return v == Cyclotomic::from_int(6, 1); }));
  for (const auto& c : chars) {
    CHECK(tensor(c, triv) == c);
    CHECK(dual(dual(c)) == c);
  }
  // sgn (x) sgn = trivial
  const ProjChar& sgn = chars[1];
  CHECK(tensor(sgn, sgn) == triv);
  // <2dim, 2dim (x) 2dim> = 1
  const ProjChar& two = chars[2];
  CHECK(multiplicity(two, tensor(two, two)) == 1);
}

TEST_CASE("induction and Frobenius reciprocity on S3 and D4") {
  for (const FiniteGroup& g : {symmetric3(), dihedral4()}) {
    int t = exponent(g);
    auto gchars = ordinary_char_table(g, t);
    Cocycle2 trivg = trivial_cocycle(g, 1);
    for (const auto& sub : all_subgroups(g)) {
      SubgroupGroup h = subgroup_as_group(sub);
      // characters of H at an order that embeds into the parent's
      int th = static_cast<int>(lcm_ll(t, exponent(h.grp)));
      auto hchars = ordinary_char_table(h.grp, th);
      for (const auto& chi : hchars) {
        ProjChar ind = induce(chi, h, g, trivg);
        CHECK(ind.degree() == chi.degree() * (g.n / h.grp.n));
        for (const auto& psi : gchars) {
          ProjChar psi_t = psi;
          for (auto& v : psi_t.values) v = v.lift(th);
          long long lhs = multiplicity(psi_t, ind);
          long long rhs = multiplicity(restrict_char(psi_t, h), chi);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("induce trivial character of trivial subgroup gives regular character") {
  FiniteGroup s3 = symmetric3();
  SubgroupGroup one = subgroup_as_group(trivial_subgroup(s3));
  auto ochars = ordinary_char_table(one.grp, 6);
  ProjChar reg = induce(ochars[0], one, s3, trivial_cocycle(s3, 1));
  CHECK(reg.degree() == 6);
  for (int x = 0; x < 6; ++x)
    if (x != s3.id) CHECK(reg.at(x).is_zero());
}

TEST_CASE("induce nontrivial linear character of A3 gives a degree-2 irreducible") {
  FiniteGroup s3 = symmetric3();
  auto nsubs = normal_subgroups(s3);
  SubgroupGroup a3 = subgroup_as_group(nsubs[1]);
  REQUIRE(a3.grp.n == 3);
  auto a3chars = ordinary_char_table(a3.grp, 6);
  // a nontrivial linear character of A3
  const ProjChar* nt = nullptr;
  for (const auto& c : a3chars)
    if (!(c.at(0) == c.at(1)) || !(c.at(0) == c.at(2))) {
      nt = &c;
      break;
    }
  REQUIRE(nt != nullptr);
  ProjChar ind = induce(*nt, a3, s3, trivial_cocycle(s3, 1));
  CHECK(ind.degree() == 2);
  CHECK(multiplicity(ind, ind) == 1);  // irreducible
}

TEST_CASE("frobenius reciprocity for the projective class on klein four") {
  FiniteGroup v4 = klein_four();
  Cocycle2 alpha = klein_symplectic(v4);
  int t = 4;
  auto gchars = irr_projective(v4, alpha, t);
  for (const auto& sub : all_subgroups(v4)) {
    SubgroupGroup h = subgroup_as_group(sub);
    Cocycle2 ra;
    ra.group = &h.grp;
    ra.order = 2;
    ra.exp.resize(static_cast<size_t>(h.grp.n) * h.grp.n);
    for (int a = 0; a < h.grp.n; ++a)
      for (int b = 0; b < h.grp.n; ++b)
        ra.exp[static_cast<size_t>(a) * h.grp.n + b] = alpha.at(h.to_parent[a], h.to_parent[b]);
    auto hchars = irr_projective(h.grp, ra, t);
    for (const auto& chi : hchars) {
      ProjChar ind = induce(chi, h, v4, alpha);
      for (const auto& psi : gchars)
        CHECK(multiplicity(psi, ind) == multiplicity(restrict_char(psi, h), chi));
    }
  }
}

TEST_CASE("scalar_action") {
  FiniteGroup s3 = symmetric3();
  auto chars = ordinary_char_table(s3, 6);
  for (const auto& c : chars) {
    auto r = scalar_action(c, s3.id);
    REQUIRE(r.has_value());
    CHECK(r->is_one());
  }
  // 2-dim character vanishes on transpositions: not scalar
  const ProjChar& two = chars[2];
  int transposition = -1;
  for (int x = 0; x < 6; ++x)
    if (s3.order_of(x) == 2) {
      transposition = x;
      break;
    }
  CHECK_FALSE(scalar_action(two, transposition).has_value());
  // sign character of Z/2: every element scalar
  FiniteGroup c2 = cyclic_group(2);
  auto c2chars = ordinary_char_table(c2, 2);
  REQUIRE(c2chars[1].at(1) == Cyclotomic::from_int(2, -1));
  auto r = scalar_action(c2chars[1], 1);
  REQUIRE(r.has_value());
  CHECK(*r == Root(2, 1));
}

TEST_CASE("Lemma 7.2: |chi(h)| = chi(1) exactly when h acts as a scalar") {
  for (const FiniteGroup& g : {symmetric3(), dihedral4(), quaternion8()}) {
    auto chars = ordinary_char_table(g, exponent(g));
    for (const auto& c : chars) {
      Cyclotomic degsq =
          Cyclotomic::from_rational(c.at(g.id).order(), Rational(c.degree() * c.degree()));
      for (int h = 0; h < g.n; ++h) {
        bool eq = (c.at(h) * c.at(h).conj()) == degsq;
        CHECK(eq == scalar_action(c, h).has_value());
      }
    }
  }
}

TEST_CASE("Lemma 7.3: scalar action descends from the induced character") {
  FiniteGroup s3 = symmetric3();
  auto nsubs = normal_subgroups(s3);
  SubgroupGroup a3 = subgroup_as_group(nsubs[1]);
  auto a3chars = ordinary_char_table(a3.grp, 6);
  for (const auto& chi : a3chars) {
    ProjChar ind = induce(chi, a3, s3, trivial_cocycle(s3, 1));
    // H = A3 embedded in G; check on all h in A3
    for (int hl = 0; hl < a3.grp.n; ++hl) {
      int h = a3.to_parent[hl];
      if (scalar_action(ind, h).has_value()) CHECK(scalar_action(chi, hl).has_value());
    }
  }
}

TEST_CASE("Lemma 7.4: ker_G(ind) = core_G(ker) for linear characters of subgroups of S3") {
  FiniteGroup s3 = symmetric3();
  for (const auto& sub : all_subgroups(s3)) {
    SubgroupGroup h = subgroup_as_group(sub);
    int th = static_cast<int>(lcm_ll(6, exponent(h.grp)));
    for (const auto& chi : ordinary_char_table(h.grp, th)) {
      if (chi.degree() != 1) continue;
      ProjChar ind = induce(chi, h, s3, trivial_cocycle(s3, 1));
      Subgroup lhs = kernel_of_char(ind);
      // core_G(ker_M(chi)) with ker mapped back into the parent
      Subgroup ker_local = kernel_of_char(chi);
      std::vector<int> parent_members;
      for (int m : ker_local.members) parent_members.push_back(h.to_parent[m]);
      Subgroup rhs = core(s3, make_subgroup(s3, parent_members));
      CHECK(lhs.members == rhs.members);
    }
  }
}
