#include "equicat/group.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace equicat;

TEST_CASE("validate_group accepts Z/2 and S3, rejects broken tables") {
  FiniteGroup c2 = validate_group({0, 1, 1, 0}, 2);
  CHECK(c2.id == 0);
  CHECK(c2.inv[1] == 1);

  FiniteGroup s3 = symmetric3();
  CHECK(s3.n == 6);

  // broken associativity: tweak one entry of the c4 table
  FiniteGroup c4 = cyclic_group(4);
  auto bad = c4.mul;
  bad[1 * 4 + 1] = 3;
  CHECK_THROWS_WITH(validate_group(bad, 4), Catch::Matchers::ContainsSubstring("associativity") ||
                                                Catch::Matchers::ContainsSubstring("identity") ||
                                                Catch::Matchers::ContainsSubstring("inverse"));
  CHECK_THROWS_AS(validate_group({0, 0, 0, 0}, 2), validation_error);
}

TEST_CASE("conjugacy classes") {
  FiniteGroup c2 = cyclic_group(2);
  CHECK(conjugacy_class(c2, 1) == std::vector<int>{1});

  FiniteGroup s3 = symmetric3();
  // transpositions form one class of size 3; 3-cycles one class of size 2
  std::multiset<size_t> sizes;
  std::set<std::vector<int>> classes;
  for (int x = 0; x < 6; ++x) classes.insert(conjugacy_class(s3, x));
  for (auto& c : classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<size_t>{1, 2, 3});
  CHECK(conjugacy_class(s3, s3.id) == std::vector<int>{s3.id});
}

TEST_CASE("subgroup enumeration with closure oracle") {
  FiniteGroup c2 = cyclic_group(2);
  auto subs2 = all_subgroups(c2);
  CHECK(subs2.size() == 2);
  CHECK(normal_subgroups(c2).size() == 2);

  FiniteGroup v4 = klein_four();
  auto subs4 = all_subgroups(v4);
  CHECK(subs4.size() == 5);
  CHECK(normal_subgroups(v4).size() == 5);

  FiniteGroup s3 = symmetric3();
  auto subs = all_subgroups(s3);
  // independent oracle: closure of every subset
  std::set<std::vector<int>> oracle;
  for (int mask = 0; mask < 64; ++mask) {
    std::vector<int> gens;
    for (int i = 0; i < 6; ++i)
      if (mask & (1 << i)) gens.push_back(i);
    oracle.insert(subgroup_generated(s3, gens).members);
  }
  CHECK(subs.size() == oracle.size());
  CHECK(subs.size() == 6);
  auto nsubs = normal_subgroups(s3);
  REQUIRE(nsubs.size() == 3);
  CHECK(nsubs[0].order() == 1);
  CHECK(nsubs[1].order() == 3);
  CHECK(nsubs[2].order() == 6);

  // Lagrange on every subgroup
  for (const auto& k : subs) CHECK(s3.n % k.order() == 0);

  CHECK_THROWS_AS(all_subgroups(s3, 3), limit_error);
}

TEST_CASE("core") {
  FiniteGroup s3 = symmetric3();
  auto subs = all_subgroups(s3);
  for (const auto& k : subs) {
    Subgroup c = core(s3, k);
    CHECK(is_normal(s3, c));
    for (int m : c.members) CHECK(k.contains(m));
    // contains every normal subgroup of G inside K
    for (const auto& nm : normal_subgroups(s3)) {
      bool inside = std::all_of(nm.members.begin(), nm.members.end(),
                                [&](int m) { return k.contains(m); });
      if (inside)
        for (int m : nm.members) CHECK(c.contains(m));
    }
    if (k.order() == 2) CHECK(c.order() == 1);
    if (is_normal(s3, k)) CHECK(c.members == k.members);
  }
  CHECK(core(s3, full_subgroup(s3)).order() == 6);
}

TEST_CASE("actions, orbits, stabilizers") {
  FiniteGroup s3 = symmetric3();
  // conjugation action of s3 on itself
  std::vector<int> perm(36);
  for (int g = 0; g < 6; ++g)
    for (int x = 0; x < 6; ++x) perm[g * 6 + x] = s3.conj(g, x);
  GroupAction act = validate_action(s3, s3, perm);

  auto orbs = orbits(act);
  CHECK(orbs.size() == 3);
  int covered = 0;
  for (const auto& o : orbs) {
    covered += static_cast<int>(o.size());
    // orbit-stabilizer identity at every point
    for (int x : o) CHECK(o.size() * stabilizer(act, x).order() == 6);
  }
  CHECK(covered == 6);

  // trivial action
  FiniteGroup c2 = cyclic_group(2);
  std::vector<int> tperm = {0, 1, 0, 1};
  GroupAction tact = validate_action(c2, c2, tperm);
  CHECK(stabilizer(tact, 1).order() == 2);
  CHECK(orbits(tact).size() == 2);
}

TEST_CASE("exponent, hom, kernel, image") {
  CHECK(exponent(klein_four()) == 2);
  CHECK(exponent(symmetric3()) == 6);
  CHECK(exponent(quaternion8()) == 4);
  CHECK(exponent(dihedral4()) == 4);

  FiniteGroup s3 = symmetric3();
  std::vector<int> idmap(6);
  std::iota(idmap.begin(), idmap.end(), 0);
  GroupHom h = validate_hom(s3, s3, idmap);
  CHECK(kernel(h).order() == 1);
  CHECK(image(h).order() == 6);

  FiniteGroup c1 = trivial_group();
  GroupHom triv = validate_hom(s3, c1, std::vector<int>(6, 0));
  CHECK(kernel(triv).order() == 6);
}

TEST_CASE("subgroup_as_group round trip") {
  FiniteGroup s3 = symmetric3();
  for (const auto& k : all_subgroups(s3)) {
    SubgroupGroup sg = subgroup_as_group(k);
    CHECK(sg.grp.n == k.order());
    for (int i = 0; i < sg.grp.n; ++i)
      for (int j = 0; j < sg.grp.n; ++j)
        CHECK(sg.to_parent[sg.grp.op(i, j)] == s3.op(sg.to_parent[i], sg.to_parent[j]));
  }
}

TEST_CASE("builders sanity") {
  CHECK(quaternion8().n == 8);
  CHECK(dihedral4().n == 8);
  // q8 has a unique element of order 2
  FiniteGroup q8 = quaternion8();
  int order2 = 0;
  for (int a = 0; a < 8; ++a)
    if (a != q8.id && q8.order_of(a) == 2) ++order2;
  CHECK(order2 == 1);
  // d4 has five elements of order 2
  FiniteGroup d4 = dihedral4();
  order2 = 0;
  for (int a = 0; a < 8; ++a)
    if (a != d4.id && d4.order_of(a) == 2) ++order2;
  CHECK(order2 == 5);
}
