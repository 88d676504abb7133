#include <catch_amalgamated.hpp>

#include "intangle/bounds.hpp"
#include "intangle/errors.hpp"
#include "intangle/lattice.hpp"
#include "support.hpp"

using namespace intangle;

namespace {

BoundReport report_for(const Subgroup& base) {
  const auto lat = enumerate_subgroups(base);
  const Rational index(base.group().order(), base.order());
  return bound_report(index, double_coset_count(base),
                      LatticeStats{lat.size(), lat.atoms.size(), commutant_is_abelian(base)});
}

}  // namespace

TEST_CASE("recursion values") {
  CHECK(recursion_bound(3) == 2);
  CHECK(recursion_bound(4) == 162);
  CHECK(recursion_bound(6) == 729 * 2);
  CHECK(recursion_bound(Rational(9, 2)) == ceil_pow(3, Rational(9, 2)) * 2);
  CHECK(abelian_recursion_bound(8) == 64);
  CHECK(abelian_recursion_bound(5) == 10);
  CHECK(kissing_reference(24) == BigInt(196560));
  CHECK_FALSE(kissing_reference(5).has_value());
}

TEST_CASE("index below two is rejected") {
  try {
    (void)bound_report(1, 1);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexTooSmall);
  }
}

TEST_CASE("Z2^3: seven atoms against n = 8") {
  const auto base = Subgroup::trivial(parse_group_spec("elementary_abelian:2,3"));
  const auto r = report_for(base);
  REQUIRE(r.stats.has_value());
  CHECK(r.stats->atoms == 7);
  CHECK(r.n == 8);
  CHECK(r.stats->abelian_commutant);
  CHECK(r.asserted_hold());
  CHECK(r.packing_bound == 6560);
}

TEST_CASE("commutant commutativity") {
  CHECK(commutant_is_abelian(Subgroup::trivial(parse_group_spec("cyclic:12"))));
  CHECK_FALSE(commutant_is_abelian(Subgroup::trivial(parse_group_spec("symmetric:3"))));
  // S3 inside S4 is a Gelfand pair.
  const auto s4 = parse_group_spec("symmetric:4");
  std::vector<Element> stab;
  for (Element x = 0; x < s4->order(); ++x) {
    if (s4->permutations()[x][3] == 3) stab.push_back(x);
  }
  CHECK(commutant_is_abelian(Subgroup::from_elements(s4, stab)));
}

TEST_CASE("property: asserted bounds hold for random groups and bases") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testing::random_group(rng);
    const auto base = testing::random_subgroup(g, rng, 1);
    if (base.is_whole()) continue;
    const auto r = report_for(base);
    for (const auto& c : r.checks) {
      if (c.asserted) CHECK(c.holds);
    }
  }
}
