#include <catch_amalgamated.hpp>

#include <algorithm>

#include "intangle/errors.hpp"
#include "intangle/lattice.hpp"
#include "support.hpp"

using namespace intangle;

namespace {

std::vector<ElementSet> member_sets(const SubgroupLattice& lat) {
  std::vector<ElementSet> out;
  for (const auto& s : lat.nodes) out.push_back(s.members());
  return out;
}

}  // namespace

TEST_CASE("lattice sizes of familiar groups") {
  CHECK(enumerate_subgroups(Subgroup::trivial(parse_group_spec("symmetric:3"))).size() == 6);
  CHECK(enumerate_subgroups(Subgroup::trivial(parse_group_spec("cyclic:30"))).size() == 8);
  CHECK(enumerate_subgroups(Subgroup::trivial(parse_group_spec("symmetric:4"))).size() == 30);
  CHECK(enumerate_subgroups(Subgroup::trivial(parse_group_spec("quaternion:2"))).size() == 6);
  CHECK(enumerate_subgroups(Subgroup::trivial(parse_group_spec("elementary_abelian:2,3"))).size() == 16);
  CHECK(enumerate_subgroups(Subgroup::trivial(parse_group_spec("dihedral:4"))).size() == 10);
}

TEST_CASE("oracle: enumeration matches exhaustive subset search for |G| <= 16") {
  for (const auto& spec : testing::small_specs()) {
    const auto g = parse_group_spec(spec);
    if (g->order() > 16) continue;
    auto expected = testing::brute_force_subgroups(*g);
    std::sort(expected.begin(), expected.end());
    const auto lat = enumerate_subgroups(Subgroup::trivial(g));
    CHECK(member_sets(lat) == expected);
  }
}

TEST_CASE("oracle: intermediates over a base are the subgroups containing it") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testing::random_group(rng, 16);
    const auto base = testing::random_subgroup(g, rng, 1);
    std::vector<ElementSet> expected;
    for (auto& s : testing::brute_force_subgroups(*g)) {
      if (base.members().is_subset_of(s)) expected.push_back(std::move(s));
    }
    std::sort(expected.begin(), expected.end());
    const auto lat = enumerate_subgroups(base);
    CHECK(member_sets(lat) == expected);
    CHECK(lat.base() == base);
    CHECK(lat.top().is_whole());
  }
}

TEST_CASE("Hasse edges are exactly the covering pairs") {
  for (const auto& spec : {"symmetric:4", "dihedral:6", "cyclic:2*cyclic:4"}) {
    const auto lat = enumerate_subgroups(Subgroup::trivial(parse_group_spec(spec)));
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t a = 0; a < lat.size(); ++a) {
      for (std::size_t b = 0; b < lat.size(); ++b) {
        if (a == b || !lat.leq(a, b)) continue;
        bool cover = true;
        for (std::size_t c = 0; c < lat.size() && cover; ++c) {
          if (c != a && c != b && lat.leq(a, c) && lat.leq(c, b)) cover = false;
        }
        if (cover) covers.emplace_back(a, b);
      }
    }
    std::sort(covers.begin(), covers.end());
    CHECK(lat.hasse_edges == covers);
  }
}

TEST_CASE("meet and join agree with subgroup intersection and generation") {
  const auto lat = enumerate_subgroups(Subgroup::trivial(parse_group_spec("symmetric:4")));
  for (std::size_t a = 0; a < lat.size(); ++a) {
    for (std::size_t b = 0; b < lat.size(); ++b) {
      CHECK(lat.nodes[lat.meet(a, b)] == intersection(lat.nodes[a], lat.nodes[b]));
      CHECK(lat.nodes[lat.join(a, b)] == join(lat.nodes[a], lat.nodes[b]));
    }
  }
  CHECK(lat.atoms.size() == 13);  // 9 involutions and 4 subgroups of order 3
  CHECK(lat.coatoms.size() == 8);  // A4, three D4 and four S3
}

TEST_CASE("node cap raises CapExceeded") {
  const auto g = parse_group_spec("symmetric:4");
  try {
    (void)enumerate_subgroups(Subgroup::trivial(g), GroupLimits{256, 10});
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("serial and OpenMP enumeration agree") {
  for (const auto& spec : testing::small_specs()) {
    const auto g = parse_group_spec(spec);
    const auto par = enumerate_subgroups(Subgroup::trivial(g));
    const auto ser = enumerate_subgroups_serial(Subgroup::trivial(g));
    CHECK(member_sets(par) == member_sets(ser));
    CHECK(par.hasse_edges == ser.hasse_edges);
    CHECK(par.atoms == ser.atoms);
    CHECK(par.coatoms == ser.coatoms);
  }
}
