#include <catch_amalgamated.hpp>

#include "intangle/coset_function.hpp"
#include "intangle/errors.hpp"
#include "intangle/lattice.hpp"
#include "support.hpp"

using namespace intangle;

TEST_CASE("coset model of a base") {
  const auto s3 = parse_group_spec("symmetric:3");
  const auto lat = enumerate_subgroups(Subgroup::trivial(s3));
  const auto& h = lat.atoms.front();
  const auto model = make_coset_model(lat.nodes[h]);
  CHECK(model->coset_count() == 3);
  CHECK(model->representative(0) == 0);
  CHECK(model->tau() == Rational(1, 3));
  for (Element x = 0; x < s3->order(); ++x) {
    const Element r = model->representative(model->coset_of(x));
    CHECK(r <= x);
  }
}

TEST_CASE("biprojections have trace |K|/|G| and sit between e1 and 1") {
  const auto g = parse_group_spec("dihedral:6");
  const auto lat = enumerate_subgroups(Subgroup::trivial(g));
  for (const auto& base : lat.nodes) {
    const auto model = make_coset_model(base);
    const auto e1 = jones_projection(model);
    const auto one = CosetFunction::constant(model, 1);
    for (const auto& k : enumerate_subgroups(base).nodes) {
      const auto e = biprojection_of(model, k);
      CHECK(e.trace() == Rational(k.order(), g->order()));
      CHECK(e.is_projection());
      CHECK(e1.leq(e));
      CHECK(e.leq(one));
      CHECK(e.support() == k.members());
      CHECK(CosetFunction::indicator(model, k.members()) == e);
    }
  }
}

TEST_CASE("biprojection_of rejects subgroups not over the base") {
  const auto z6 = parse_group_spec("cyclic:6");
  const std::vector<Element> g2{3}, g3{2};
  const auto model = make_coset_model(closure(z6, g2));
  try {
    (void)biprojection_of(model, closure(z6, g3));
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BaseNotContained);
  }
  ElementSet half(6);
  half.insert(0);
  CHECK_THROWS_AS(CosetFunction::indicator(model, half), Error);
}

TEST_CASE("v_P is a unit vector with squared distance tau_P - tau") {
  const auto g = parse_group_spec("cyclic:30");
  const auto model = make_coset_model(Subgroup::trivial(g));
  const std::vector<Element> g15{15}, g3{3};
  const auto v_p = v_vector(biprojection_of(model, closure(g, g15)));
  const auto v_q = v_vector(biprojection_of(model, closure(g, g3)));
  CHECK(v_p.inner(v_p) == Surd(1));
  CHECK(v_p.inner(v_q) == Surd(Rational(1, 3)));
  try {
    (void)v_vector(jones_projection(model));
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AngleUndefined);
  }
}

TEST_CASE("translation permutes coset projections") {
  const auto g = parse_group_spec("symmetric:4");
  const auto lat = enumerate_subgroups(Subgroup::trivial(g));
  const auto model = make_coset_model(lat.nodes[lat.atoms.back()]);
  for (Element x = 0; x < g->order(); ++x) {
    for (Element y = 0; y < g->order(); y += 5) {
      CHECK(coset_projection(model, y).translate(x) == coset_projection(model, g->compose(x, y)));
    }
  }
}

TEST_CASE("p and q for Z30 with P of order 2 and Q of order 10") {
  const auto g = parse_group_spec("cyclic:30");
  const auto model = make_coset_model(Subgroup::trivial(g));
  const std::vector<Element> g15{15}, g3{3};
  const auto k1 = closure(g, g15), k2 = closure(g, g3);
  const auto p = p_element(model, k1, k2);
  const auto q = q_element(model, k1, k2);
  // K1 ≤ K2, so every product lands in K2, each element twice.
  for (Element x = 0; x < 30; ++x) CHECK(p.value_at(x) == (k2.contains(x) ? 2 : 0));
  CHECK(p == q);
  CHECK(p.trace() == trq_value(model, k1, k2));
  CHECK(trq_value(model, k1, k2) == Rational(2 * 10, 30));
  CHECK(inversion_relation_holds(p, q));
}

TEST_CASE("property: translation preserves trace and spectrum") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_group(rng);
    const auto base = testing::random_subgroup(g, rng, 1);
    const auto model = make_coset_model(base);
    std::vector<Rational> values;
    for (std::size_t c = 0; c < model->coset_count(); ++c) values.push_back(testing::random_rational(rng));
    const CosetFunction f(model, values);
    const Element x = testing::random_element(*g, rng);
    CHECK(f.translate(x).trace() == f.trace());
    CHECK(f.translate(x).spectrum() == f.spectrum());
    CHECK(f.translate(x).translate(g->inverse(x)) == f);
  }
}
