#include <catch_amalgamated.hpp>

#include "intangle/errors.hpp"
#include "intangle/kernels.hpp"
#include "intangle/lattice.hpp"
#include "intangle/two_box.hpp"
#include "support.hpp"

using namespace intangle;

namespace {

TwoBoxElement random_element(const GroupPtr& g, Side side, std::mt19937_64& rng) {
  const auto d = delta_of(*g).radicand();
  return TwoBoxElement(g, side, testing::random_quad_vector(rng, g->order(), d));
}

}  // namespace

TEST_CASE("traces and units on both sides") {
  const auto g = parse_group_spec("dihedral:4");
  const auto one_pw = TwoBoxElement::identity(g, Side::Pointwise);
  const auto one_cv = TwoBoxElement::identity(g, Side::Convolution);
  CHECK(one_pw.trace() == QuadNumber(Rational(1)));
  CHECK(one_cv.trace() == QuadNumber(Rational(1)));
  CHECK(delta_of(*g) * delta_of(*g) == QuadNumber(Rational(8)));
  std::mt19937_64 rng(1);
  const auto x = random_element(g, Side::Convolution, rng);
  CHECK(product(one_cv, x) == x);
  CHECK(product(x, one_cv) == x);
}

TEST_CASE("fourier is an isometry exchanging product and coproduct") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = testing::random_group(rng, 12);
    const auto x = random_element(g, Side::Pointwise, rng);
    const auto y = random_element(g, Side::Pointwise, rng);
    CHECK(fourier(x).inner(fourier(y)) == x.inner(y));
    CHECK(fourier(product(x, y)) == coproduct(fourier(x), fourier(y)));
    CHECK(fourier(coproduct(x, y)) == product(fourier(x), fourier(y)));
    CHECK(fourier(fourier(x)).side() == Side::Pointwise);
  }
}

TEST_CASE("pointwise biprojections are exactly subgroup indicators") {
  const auto g = parse_group_spec("symmetric:3");
  const auto subs = testing::brute_force_subgroups(*g);
  for (std::uint32_t mask = 1; mask < 64; ++mask) {
    ElementSet s(6);
    for (Element a = 0; a < 6; ++a) {
      if ((mask >> a) & 1U) s.insert(a);
    }
    const bool is_subgroup = std::find(subs.begin(), subs.end(), s) != subs.end();
    CHECK(is_biprojection(TwoBoxElement::indicator(g, Side::Pointwise, s)) == is_subgroup);
  }
}

TEST_CASE("Landau projection is the indicator of HK for all subgroup pairs") {
  for (const auto& spec : {"symmetric:3", "dihedral:4", "quaternion:2", "cyclic:2*symmetric:3"}) {
    const auto g = parse_group_spec(spec);
    const auto lat = enumerate_subgroups(Subgroup::trivial(g));
    for (const auto& h : lat.nodes) {
      for (const auto& k : lat.nodes) {
        const auto e_h = pointwise_biprojection(h);
        const auto e_k = pointwise_biprojection(k);
        const auto landau = landau_projection(e_h, e_k);
        CHECK(landau.is_projection());
        CHECK(landau.support() == product_set(h, k).elements);
        CHECK(join_projection(e_h, e_k).support().is_subset_of(landau.support()));
        CHECK(meet_projection(e_h, e_k) == pointwise_biprojection(intersection(h, k)));
      }
    }
  }
}

TEST_CASE("Landau projection rejects non-biprojections") {
  const auto g = parse_group_spec("cyclic:4");
  ElementSet s(4);
  s.insert(0);
  s.insert(1);
  const auto bad = TwoBoxElement::indicator(g, Side::Pointwise, s);
  try {
    (void)landau_projection(bad, bad);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBiprojection);
  }
}

TEST_CASE("dual biprojections over a base") {
  const auto g = parse_group_spec("symmetric:4");
  const auto lat = enumerate_subgroups(Subgroup::trivial(g));
  const auto& base = lat.nodes[lat.atoms.front()];
  for (const auto& k : enumerate_subgroups(base).nodes) {
    const auto f = dual_biprojection(k, base);
    CHECK(f.is_projection());
    CHECK(f.trace() == QuadNumber(Rational(base.order(), k.order())));
  }
  CHECK(dual_biprojection(base, base) == TwoBoxElement::identity(g, Side::Convolution, base));
}

TEST_CASE("correlation needs variance") {
  const auto g = parse_group_spec("cyclic:6");
  const auto one = TwoBoxElement::identity(g, Side::Pointwise);
  try {
    (void)corr(one, one);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroVariance);
  }
}

TEST_CASE("property: serial and OpenMP convolution agree") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testing::random_group(rng);
    const auto d = delta_of(*g).radicand();
    const auto x = testing::random_quad_vector(rng, g->order(), d);
    const auto y = testing::random_quad_vector(rng, g->order(), d);
    CHECK(convolve(*g, x, y) == convolve_serial(*g, x, y));
    std::vector<Rational> a, b;
    for (std::size_t i = 0; i < g->order(); ++i) {
      a.push_back(testing::random_rational(rng));
      b.push_back(testing::random_rational(rng));
    }
    CHECK(convolve(*g, a, b) == convolve_serial(*g, a, b));
    const TwoBoxElement ex(g, Side::Pointwise, x), ey(g, Side::Pointwise, y);
    CHECK(coproduct(ex, ey) == coproduct_serial(ex, ey));
  }
}

TEST_CASE("property: convolution is associative and the adjoint reverses it") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = testing::random_group(rng, 12);
    const auto x = random_element(g, Side::Convolution, rng);
    const auto y = random_element(g, Side::Convolution, rng);
    const auto z = random_element(g, Side::Convolution, rng);
    CHECK(product(product(x, y), z) == product(x, product(y, z)));
    CHECK(product(x, y).adjoint() == product(y.adjoint(), x.adjoint()));
  }
}
