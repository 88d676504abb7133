#include <catch_amalgamated.hpp>

#include <set>

#include "intangle/errors.hpp"
#include "intangle/group.hpp"
#include "intangle/lattice.hpp"
#include "support.hpp"

using namespace intangle;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no Error thrown");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("named groups have the right orders and satisfy the axioms") {
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"cyclic:30", 30},   {"dihedral:15", 30},           {"symmetric:4", 24},
      {"quaternion:2", 8}, {"elementary_abelian:2,3", 8}, {"cyclic:2*symmetric:3", 12}};
  for (const auto& [spec, order] : cases) {
    const auto g = parse_group_spec(spec);
    CHECK(g->order() == order);
    CHECK_FALSE(find_axiom_violation(*g).has_value());
  }
}

TEST_CASE("Q8 has a unique involution and D4 has five") {
  auto involutions = [](const FiniteGroup& g) {
    std::size_t n = 0;
    for (Element x = 1; x < g.order(); ++x) n += g.element_order(x) == 2;
    return n;
  };
  CHECK(involutions(*parse_group_spec("quaternion:2")) == 1);
  CHECK(involutions(*parse_group_spec("dihedral:4")) == 5);
}

TEST_CASE("table validation names the violated axiom") {
  CHECK(kind_of([] { (void)group_from_table({{0, 1}, {1, 1}}); }) == ErrorKind::NoInverse);
  CHECK(kind_of([] { (void)group_from_table({{1, 0}, {0, 1}}); }) == ErrorKind::BadIdentity);
  CHECK(kind_of([] { (void)group_from_table({{0, 1}, {1}}); }) == ErrorKind::BadTable);
  // A loop that is not associative: the order-5 Latin square below has an
  // identity and inverses but fails associativity.
  const std::vector<std::vector<Element>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(kind_of([&] { (void)group_from_table(loop); }) == ErrorKind::NotAssociative);
  CHECK(kind_of([] { (void)parse_group_spec("cyclic:300"); }) == ErrorKind::CapExceeded);
  CHECK(kind_of([] { (void)parse_group_spec("symmetric:9"); }) == ErrorKind::UnsupportedParams);
  CHECK(kind_of([] { (void)parse_group_spec("elementary_abelian:4,2"); }) == ErrorKind::UnsupportedParams);
}

TEST_CASE("permutation groups from cycle notation") {
  const std::vector<std::string> gens{"(1 2)", "(1 2 3)"};
  const auto s3 = group_from_permutations(gens, 3);
  CHECK(s3->order() == 6);
  CHECK(parse_cycles("(1,3)(2 4)", 4) == std::vector<std::uint32_t>{2, 3, 0, 1});
  CHECK(format_cycles(parse_cycles("(1 3)(2 4)", 4)) == "(1 3)(2 4)");
  CHECK(kind_of([] { (void)parse_cycles("(1 5)", 4); }) == ErrorKind::BadCycleSyntax);
  CHECK(kind_of([] { (void)parse_cycles("(1 2 1)", 4); }) == ErrorKind::BadCycleSyntax);
  CHECK(kind_of([] { (void)parse_cycles("1 2", 4); }) == ErrorKind::BadCycleSyntax);
  const std::vector<std::string> big{"(1 2 3 4 5 6)", "(1 2)"};
  CHECK(kind_of([&] { (void)group_from_permutations(big, 6, GroupLimits{100, 1000}); }) == ErrorKind::DegreeExceeded);
}

TEST_CASE("subgroups: closure, intersection, join and membership errors") {
  const auto z30 = parse_group_spec("cyclic:30");
  const std::vector<Element> g6{6}, g10{10};
  const auto a = closure(z30, g6);   // order 5
  const auto b = closure(z30, g10);  // order 3
  CHECK(a.order() == 5);
  CHECK(b.order() == 3);
  CHECK(intersection(a, b).is_trivial());
  CHECK(join(a, b).order() == 15);
  const std::vector<Element> not_closed{0, 1};
  CHECK(kind_of([&] { (void)Subgroup::from_elements(z30, not_closed); }) == ErrorKind::NotASubgroup);
  const auto other = parse_group_spec("cyclic:30");
  CHECK(kind_of([&] { require_same_parent(a, Subgroup::trivial(other)); }) == ErrorKind::ParentMismatch);
}

TEST_CASE("product sets count |H||K|/|H∩K| elements") {
  const auto s3 = parse_group_spec("symmetric:3");
  const auto subs = enumerate_subgroups(Subgroup::trivial(s3)).nodes;
  for (const auto& h : subs) {
    for (const auto& k : subs) {
      const auto ps = product_set(h, k);
      CHECK(ps.elements.size() * testing::count_common(h, k) == h.order() * k.order());
    }
  }
}

TEST_CASE("double coset counts agree with the character formula") {
  for (const auto& spec : testing::small_specs()) {
    const auto g = parse_group_spec(spec);
    for (const auto& base : enumerate_subgroups(Subgroup::trivial(g)).nodes) {
      CHECK(double_coset_count(base) == double_coset_count_by_characters(base));
    }
  }
  const auto s4 = parse_group_spec("symmetric:4");
  // S3 inside S4: the permutation character is 1 + standard, so 2 double cosets.
  std::vector<Element> stab;
  for (Element x = 0; x < s4->order(); ++x) {
    if (s4->permutations()[x][3] == 3) stab.push_back(x);
  }
  CHECK(double_coset_count(Subgroup::from_elements(s4, stab)) == 2);
  CHECK(double_coset_count(Subgroup::trivial(s4)) == 24);
}

TEST_CASE("element sets order by size then content") {
  ElementSet a(70), b(70);
  a.insert(3);
  b.insert(65);
  b.insert(1);
  CHECK(a < b);
  CHECK(b.elements() == std::vector<Element>{1, 65});
  CHECK(a.unite(b).size() == 3);
  CHECK(a.intersect(b).empty());
  CHECK(a.is_subset_of(a.unite(b)));
}

TEST_CASE("property: random closures are subgroups found by the brute-force oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = testing::random_group(rng, 16);
    const auto s = testing::random_subgroup(g, rng, 3);
    const auto all = testing::brute_force_subgroups(*g);
    CHECK(std::find(all.begin(), all.end(), s.members()) != all.end());
    CHECK(g->order() % s.order() == 0);
  }
}
