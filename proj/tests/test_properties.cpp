// Cross-module properties on randomly drawn groups, bases and pairs.

#include <catch_amalgamated.hpp>

#include "intangle/census.hpp"
#include "intangle/io.hpp"
#include "intangle/kernels.hpp"
#include "intangle/lattice.hpp"
#include "intangle/pp_basis.hpp"
#include "intangle/two_box.hpp"
#include "support.hpp"

using namespace intangle;

namespace {

struct RandomQuad {
  GroupPtr g;
  Quadruple quad;
};

RandomQuad random_quad(std::mt19937_64& rng) {
  const auto g = testing::random_group(rng);
  const auto h0 = testing::random_subgroup(g, rng, 1);
  const auto k1 = join(h0, testing::random_subgroup(g, rng, 1));
  const auto k2 = join(h0, testing::random_subgroup(g, rng, 2));
  return {g, Quadruple::make(h0, k1, k2)};
}

}  // namespace

TEST_CASE("property: parallel kernels match their serial references") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = testing::random_group(rng);
    const auto base = testing::random_subgroup(g, rng, 1);
    const auto a = enumerate_subgroups(base);
    const auto b = enumerate_subgroups_serial(base);
    CHECK(a.nodes == b.nodes);
    CHECK(a.hasse_edges == b.hasse_edges);
    const auto x = testing::random_quad_vector(rng, g->order(), g->order());
    const auto y = testing::random_quad_vector(rng, g->order(), g->order());
    CHECK(convolve(*g, x, y) == convolve_serial(*g, x, y));
    const TwoBoxElement ex(g, Side::Pointwise, x), ey(g, Side::Pointwise, y);
    CHECK(coproduct(ex, ey) == coproduct_serial(ex, ey));
  }
}

TEST_CASE("property: commuting iff zero cosine iff e_P e_Q = e1") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    const auto [g, quad] = random_quad(rng);
    if (quad.k1 == quad.h0 || quad.k2 == quad.h0) continue;
    const auto model = make_coset_model(quad.h0);
    const bool e1 = biprojection_of(model, quad.k1) * biprojection_of(model, quad.k2) == jones_projection(model);
    const bool zero = cos_alpha(trace_data(quad)).is_zero();
    const bool meet = testing::count_common(quad.k1, quad.k2) == quad.h0.order();
    CHECK(zero == e1);
    CHECK(zero == meet);
    CHECK(classify(quad).commuting == zero);
  }
}

TEST_CASE("property: Landau projection on random pairs") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = testing::random_group(rng);
    const auto h = testing::random_subgroup(g, rng);
    const auto k = testing::random_subgroup(g, rng);
    const auto l = landau_projection(pointwise_biprojection(h), pointwise_biprojection(k));
    CHECK(l.is_projection());
    // Oracle: HK by listing all products.
    ElementSet hk(g->order());
    for (Element a : h.elements()) {
      for (Element b : k.elements()) hk.insert(g->compose(a, b));
    }
    CHECK(l.support() == hk);
    CHECK(hk.size() * testing::count_common(h, k) == h.order() * k.order());
  }
}

TEST_CASE("property: report JSON round-trips and angles are symmetric") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [g, quad] = random_quad(rng);
    const auto r = classify(quad);
    const auto text = report_to_json(r).dump();
    CHECK(report_to_json(report_from_json(parse_json_text(text))).dump() == text);
    const auto s = classify(Quadruple::make(quad.h0, quad.k2, quad.k1));
    CHECK(s.cos_alpha == r.cos_alpha);
    CHECK(s.cos_beta == r.cos_beta);
  }
}

TEST_CASE("property: cosines lie in [0, 1] and the basis path agrees") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [g, quad] = random_quad(rng);
    if (quad.k1 == quad.h0 || quad.k2 == quad.h0) continue;
    const auto c = cos_alpha(trace_data(quad));
    CHECK(c >= Surd());
    CHECK(c <= Surd(Rational(1)));
    CHECK(cos_alpha_by_basis(quad, rng()) == c);
    CHECK(cos_alpha_dual(quad) == c);
  }
}

TEST_CASE("property: p and q traces and spectra on random quadruples") {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 80; ++trial) {
    const auto [g, quad] = random_quad(rng);
    const auto model = make_coset_model(quad.h0);
    const auto p = p_element(model, quad.k1, quad.k2);
    const auto q = q_element(model, quad.k1, quad.k2);
    const auto trq = trq_value(model, quad.k1, quad.k2);
    CHECK(p.trace() == trq);
    CHECK(q.trace() == trq);
    CHECK(p.spectrum() == q.spectrum());
    CHECK(inversion_relation_holds(p, q));
    const auto l = coset_basis(quad.k1, quad.h0, rng());
    const auto m = coset_basis(quad.k2, quad.h0, rng());
    CHECK(p_from_bases(model, l.reps, m.reps) == p);
  }
}

TEST_CASE("property: census output does not depend on the thread schedule") {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = testing::random_group(rng);
    const auto base = testing::random_subgroup(g, rng, 1);
    CHECK(census_to_json(census(base)).dump() == census_to_json(census_serial(base)).dump());
  }
}
