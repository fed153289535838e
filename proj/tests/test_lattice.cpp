#include "equicat/fusion_lattice.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "instances.hpp"

using namespace equicat;

namespace {

std::multiset<long long> lattice_fpdims(const SubcategoryLattice& lat) {
  std::multiset<long long> out;
  for (const auto& sc : lat.subcats) out.insert(sc.fpdim);
  return out;
}

}  // namespace

TEST_CASE("validate_datum accepts and rejects") {
  auto cat = untwisted_double(cyclic_group(2));
  const FiniteGroup& g = cat->g();
  const FiniteGroup& x = cat->x();

  // (H = 1, Y = 1, trivial): valid
  CHECK_NOTHROW(validate_datum(*cat, trivial_subgroup(g), trivial_subgroup(x), {0}));
  // (H = Z/2, Y = X, lambda(g, g) = -1): valid since the scalar order is 2
  Subgroup h = full_subgroup(g);
  Subgroup y = full_subgroup(x);
  CHECK_NOTHROW(validate_datum(*cat, h, y, {0, 0, 0, 1}));
  // broken bicharacter: lambda(e, g) != 1
  CHECK_THROWS_AS(validate_datum(*cat, h, y, {0, 1, 0, 0}), validation_error);

  // H not normal: an order-2 subgroup of S3
  auto s3cat = untwisted_double(symmetric3());
  Subgroup h2 = [&] {
    for (const auto& s : all_subgroups(s3cat->g()))
      if (s.order() == 2) return s;
    throw std::logic_error("unreachable");
  }();
  CHECK_THROWS_WITH(
      validate_datum(*s3cat, h2, trivial_subgroup(s3cat->x()), std::vector<int>(2, 0)),
      Catch::Matchers::ContainsSubstring("normal"));
}

TEST_CASE("toric code has exactly five fusion subcategories") {
  auto cat = untwisted_double(cyclic_group(2));
  auto data = enumerate_data(*cat);
  REQUIRE(data.size() == 5);
  IrrSet irr(*cat);
  auto lat = enumerate_subcategories(irr);
  CHECK(lattice_fpdims(lat) == std::multiset<long long>{1, 2, 2, 2, 4});

  // (1, X, trivial lambda) generates the whole category with FPdim |G||X|
  bool found_full = false;
  for (const auto& sc : lat.subcats)
    if (sc.datum.h.order() == 1 && sc.datum.y.order() == 2) {
      found_full = true;
      CHECK(sc.fpdim == 4);
    }
  CHECK(found_full);
  // (1, 1, triv) generates Rep(G) with FPdim |G|
  for (const auto& sc : lat.subcats)
    if (sc.datum.h.order() == 1 && sc.datum.y.order() == 1) {
      CHECK(sc.fpdim == 2);
      MemberSet expect(irr.size(), 0);
      for (int i : irr.rep_g_simples()) expect[i] = 1;
      CHECK(sc.members == expect);
    }
  // (Z/2, 1, triv) is the trivial subcategory: FPdim 2*1/2 = 1
  for (const auto& sc : lat.subcats)
    if (sc.datum.h.order() == 2 && sc.datum.y.order() == 1) CHECK(sc.fpdim == 1);
}

TEST_CASE("trivial instance has one subcategory") {
  auto cat = untwisted_double(trivial_group());
  IrrSet irr(*cat);
  auto lat = enumerate_subcategories(irr);
  CHECK(lat.subcats.size() == 1);
}

TEST_CASE("datum enumeration matches the closed-subset oracle") {
  // On these instances every fusion subcategory arises from a datum and vice
  // versa (Theorem 1.3); the subset scan is the independent side.
  for (auto raw : {untwisted_double_raw(cyclic_group(2)), untwisted_double_raw(cyclic_group(3)),
                   untwisted_double_raw(symmetric3()), testing::semion_double_raw(),
                   testing::braided_c3_raw(), testing::unfaithful_c2_raw()}) {
    auto cat = validate_instance(raw);
    IrrSet irr(*cat);
    auto lat = enumerate_subcategories(irr);
    auto closed = enumerate_closed_subsets(irr);
    CHECK(lat.subcats.size() == closed.size());
    std::set<MemberSet> from_data, from_scan;
    for (const auto& sc : lat.subcats) from_data.insert(sc.members);
    for (const auto& m : closed) from_scan.insert(m);
    CHECK(from_data == from_scan);
  }
}

TEST_CASE("S3 double lattice") {
  auto cat = untwisted_double(symmetric3());
  IrrSet irr(*cat);
  auto lat = enumerate_subcategories(irr);
  // (S3,1), (A3,1), (1,1), three (A3,A3,bichar), (1,A3), (1,S3)
  CHECK(lat.subcats.size() == 8);
  // bottom = trivial subcategory, top = everything
  CHECK(lat.subcats[lat.bottom()].fpdim == 1);
  CHECK(lat.subcats[lat.top()].fpdim == 36);
}

TEST_CASE("klein four double has 67 subcategories (subgroups of Z2^4)") {
  auto cat = untwisted_double(klein_four());
  IrrSet irr(*cat);
  auto lat = enumerate_subcategories(irr);
  CHECK(lat.subcats.size() == 67);
  for (const auto& sc : lat.subcats)
    CHECK(sc.fpdim * sc.datum.h.order() ==
          static_cast<long long>(cat->g().n) * sc.datum.y.order());
}

TEST_CASE("containment, intersection and join against oracles") {
  for (auto raw : {untwisted_double_raw(cyclic_group(2)), untwisted_double_raw(symmetric3()),
                   testing::semion_double_raw(), testing::braided_c3_raw()}) {
    auto cat = validate_instance(raw);
    IrrSet irr(*cat);
    auto lat = enumerate_subcategories(irr);
    size_t n = lat.subcats.size();
    bool commutative = true;
    for (int i = 0; i < irr.size() && commutative; ++i)
      for (int j = 0; j < irr.size() && commutative; ++j)
        commutative = irr.fusion(i, j) == irr.fusion(j, i);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        const auto& d1 = lat.subcats[i].datum;
        const auto& d2 = lat.subcats[j].datum;
        // reflexivity built in: leq computed by both routes in enumerate
        // intersection formula vs bitset oracle
        FusionDatum meet = intersect_data(*cat, d1, d2);
        MemberSet meet_members = set_and(lat.subcats[i].members, lat.subcats[j].members);
        CHECK(meet == datum_of(irr, meet_members));
        // join formula vs fusion-closure oracle (join_data throws on mismatch)
        JoinResult join = join_data(irr, d1, d2);
        MemberSet join_members =
            close_members(irr, set_or(lat.subcats[i].members, lat.subcats[j].members));
        CHECK(join.datum == datum_of(irr, join_members));
        // Remark 3.14: H_join inside H1 ^ H2. (The stronger equality claim for
        // commutative fusion rings fails already on the Z/2 double: joining
        // the two lambda = +-1 middle subcategories gives the full category
        // with trivial H while H1 ^ H2 = Z/2.)
        Subgroup hh = intersect_subgroups(d1.h, d2.h);
        for (int m : join.datum.h.members) CHECK(hh.contains(m));
      }
    CHECK(commutative);  // equivariantizations of braided categories are braided
  }
}

TEST_CASE("toric code meets and joins") {
  auto cat = untwisted_double(cyclic_group(2));
  IrrSet irr(*cat);
  auto lat = enumerate_subcategories(irr);
  // the three order-2 subcategories pairwise meet in the trivial one and join
  // to the full category
  auto count = [](const MemberSet& m) {
    long long c = 0;
    for (char v : m) c += v;
    return c;
  };
  std::vector<int> middles;
  for (size_t i = 0; i < lat.subcats.size(); ++i)
    if (lat.subcats[i].fpdim == 2) middles.push_back(static_cast<int>(i));
  REQUIRE(middles.size() == 3);
  for (int i : middles)
    for (int j : middles) {
      if (i == j) continue;
      MemberSet meet = set_and(lat.subcats[i].members, lat.subcats[j].members);
      CHECK(count(meet) == 1);
      MemberSet join = close_members(
          irr, set_or(lat.subcats[i].members, lat.subcats[j].members));
      CHECK(count(join) == 4);
    }
}

TEST_CASE("Remark 3.9: H = 1 forces trivial lambda") {
  for (auto raw : {untwisted_double_raw(symmetric3()), testing::semion_double_raw()}) {
    auto cat = validate_instance(raw);
    for (const auto& d : enumerate_data(*cat))
      if (d.h.order() == 1)
        CHECK(std::all_of(d.lam.begin(), d.lam.end(), [](int e) { return e == 0; }));
  }
}

TEST_CASE("DOT export has one source and one sink") {
  auto cat = untwisted_double(cyclic_group(2));
  IrrSet irr(*cat);
  auto lat = enumerate_subcategories(irr);
  std::string dot = lattice_dot(lat);
  CHECK(dot.find("digraph") != std::string::npos);
  // count nodes
  size_t nodes = 0;
  for (size_t pos = dot.find("[label"); pos != std::string::npos; pos = dot.find("[label", pos + 1))
    ++nodes;
  CHECK(nodes == 5);
}
