#include <catch_amalgamated.hpp>

#include "intangle/errors.hpp"
#include "intangle/lattice.hpp"
#include "intangle/pp_basis.hpp"
#include "intangle/quadruple.hpp"
#include "intangle/verify.hpp"
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

Quadruple z30_chain() {
  const auto g = parse_group_spec("cyclic:30");
  const std::vector<Element> g15{15}, g3{3};
  return Quadruple::make(Subgroup::trivial(g), closure(g, g15), closure(g, g3));
}

}  // namespace

TEST_CASE("Z30 chain: cos alpha = 1/3 and cos beta = 1/sqrt 7 by every route") {
  const auto quad = z30_chain();
  const auto td = trace_data(quad);
  CHECK(td.tau == Rational(1, 30));
  CHECK(td.tau_p == Rational(1, 15));
  CHECK(td.tau_q == Rational(1, 3));
  CHECK(td.tr_pq == Rational(1, 15));
  const Surd third(Rational(1, 3));
  const Surd beta = Surd(1) / Surd::sqrt(7);
  CHECK(cos_alpha(td) == third);
  CHECK(cos_beta(td) == beta);
  CHECK(cos_beta(td).to_string() == "1/7√7");
  CHECK(cos_alpha_by_basis(quad) == third);
  CHECK(cos_alpha_vectors(quad) == third);
  CHECK(cos_alpha_dual(quad) == third);
  CHECK(cos_beta_dual(quad) == beta);
  CHECK(cos_alpha_nested(2, 10) == third);
  CHECK(cos_beta_nested(3, 15) == beta);
  const auto r = classify(quad);
  REQUIRE(r.nested.has_value());
  CHECK(r.nested->cos_alpha == third);
  CHECK(r.nested->cos_beta == beta);
  CHECK_FALSE(r.commuting);
}

TEST_CASE("tight minimal-pair fixture") {
  const auto m = check_mini(tight_minimal_fixture());
  CHECK(m.cos_alpha == Surd(Rational(3, 7)));
  CHECK(m.lhs == Rational(7, 16));
  CHECK(m.rhs == Rational(7, 16));
  CHECK(m.tight);
  CHECK(m.below_half);
}

TEST_CASE("check_mini preconditions") {
  auto td = tight_minimal_fixture();
  td.minimal_pair = false;
  CHECK(kind_of([&] { (void)check_mini(td); }) == ErrorKind::NotMinimalPair);
  td = tight_minimal_fixture();
  td.tau_meet = Rational(1, 8);
  CHECK(kind_of([&] { (void)check_mini(td); }) == ErrorKind::NotMinimalPair);
  td = tight_minimal_fixture();
  td.tr_pq = Rational(1, 6);  // lhs = 3/8 < rhs = 7/16
  CHECK(kind_of([&] { (void)check_mini(td); }) == ErrorKind::InvalidTraceData);
}

TEST_CASE("trace data validation names the violated bound") {
  TraceData td{Rational(1, 8), Rational(1, 2), Rational(1, 2), Rational(1, 16), std::nullopt, std::nullopt};
  CHECK(td.violation() == "tr_pq < tau violates tr(e_P e_Q) >= tau");
  CHECK(kind_of([&] { td.validate(); }) == ErrorKind::InvalidTraceData);
  td.tr_pq = Rational(3, 4);
  CHECK(td.violation() == "tr_pq > tau_p");
  td.tr_pq = Rational(1, 4);
  CHECK(td.violation().empty());
}

TEST_CASE("angles are undefined at the endpoints") {
  const auto g = parse_group_spec("cyclic:6");
  const auto n = Subgroup::trivial(g);
  const auto m = Subgroup::whole(g);
  const std::vector<Element> g3{3};
  const auto p = closure(g, g3);
  CHECK(kind_of([&] { (void)cos_alpha(trace_data(Quadruple::make(n, n, p))); }) == ErrorKind::AngleUndefined);
  CHECK(kind_of([&] { (void)cos_beta(trace_data(Quadruple::make(n, p, m))); }) == ErrorKind::AngleUndefined);
  CHECK(cos_alpha(trace_data(Quadruple::make(n, p, m))) == Surd::sqrt(Rational(1, 5)));
  CHECK(kind_of([&] { (void)Quadruple::make(p, n, m); }) == ErrorKind::BaseNotContained);
  CHECK(kind_of([&] { (void)cos_alpha_nested(3, 2); }) == ErrorKind::NotAChain);
}

TEST_CASE("classification of abstract data") {
  const TraceData cocommuting{Rational(1, 12), Rational(1, 2), Rational(1, 3), Rational(1, 6), std::nullopt,
                              std::nullopt};
  const auto r = classify(cocommuting);
  CHECK(r.cocommuting);
  CHECK_FALSE(r.commuting);
  CHECK(r.cos_beta == Surd(0));
  const TraceData parallelogram{Rational(1, 6), Rational(1, 2), Rational(1, 3), Rational(1, 6), std::nullopt,
                                std::nullopt};
  const auto s = classify(parallelogram);
  CHECK(s.parallelogram);
  CHECK(s.commuting);
  CHECK(s.cocommuting);
  CHECK(s.cos_alpha == s.cos_beta);
}

TEST_CASE("commuting squares: S3 with two distinct involutions") {
  const auto g = parse_group_spec("symmetric:3");
  const auto lat = enumerate_subgroups(Subgroup::trivial(g));
  const auto quad = Quadruple::make(lat.base(), lat.nodes[lat.atoms[0]], lat.nodes[lat.atoms[1]]);
  const auto r = classify(quad);
  CHECK(r.commuting);
  CHECK_FALSE(r.cocommuting);  // 6 * 1 != 2 * 2
  CHECK(r.cos_alpha == Surd(0));
}

TEST_CASE("property: four routes to cos alpha and two to cos beta agree") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 120; ++trial) {
    const auto g = testing::random_group(rng);
    const auto h0 = testing::random_subgroup(g, rng, 1);
    const auto k1 = join(h0, testing::random_subgroup(g, rng, 1));
    const auto k2 = join(h0, testing::random_subgroup(g, rng, 1));
    const auto quad = Quadruple::make(h0, k1, k2);
    const auto td = trace_data(quad);
    CHECK(td.tr_pq == Rational(testing::count_common(k1, k2), g->order()));
    if (k1 == h0 || k2 == h0) continue;
    const auto a = cos_alpha(td);
    const std::uint64_t seed = rng();
    CHECK(cos_alpha_by_basis(quad, seed) == a);
    CHECK(cos_alpha_vectors(quad) == a);
    CHECK(cos_alpha_dual(quad) == a);
    CHECK(a.sign() >= 0);
    CHECK(a <= Surd(1));
    if (k1.is_whole() || k2.is_whole()) continue;
    CHECK(cos_beta_dual(quad) == cos_beta(td));
  }
}

TEST_CASE("property: random parallelograms have equal angles") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto td = random_parallelogram(seed);
    REQUIRE(td.violation().empty());
    REQUIRE(td.tau_p * td.tau_q == td.tau);
    if (td.p_is_top() || td.q_is_top()) continue;
    CHECK(cos_alpha(td) == cos_beta(td));
    CHECK(classify(td).parallelogram);
  }
}

TEST_CASE("property: random minimal pairs stay below one half") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto td = random_minimal_pair(seed);
    const auto m = check_mini(td);
    CHECK(m.below_half);
    CHECK(m.lhs >= m.rhs);
  }
}
