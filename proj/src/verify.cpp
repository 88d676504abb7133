#include "intangle/verify.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "intangle/bounds.hpp"
#include "intangle/census.hpp"
#include "intangle/errors.hpp"
#include "intangle/kernels.hpp"
#include "intangle/lattice.hpp"
#include "intangle/pp_basis.hpp"
#include "intangle/two_box.hpp"

namespace intangle {

// ---------------------------------------------------------------- VerifyResult

TheoremTally& VerifyResult::slot(const std::string& suite, const std::string& name) {
  for (auto& t : tallies_) {
    if (t.name == name) return t;
  }
  tallies_.push_back(TheoremTally{suite, name, 0, 0, std::nullopt});
  return tallies_.back();
}

void VerifyResult::record(const std::string& suite, const std::string& name, bool ok,
                          const std::function<std::string()>& witness) {
  auto& t = slot(suite, name);
  if (ok) {
    ++t.passed;
  } else {
    ++t.failed;
    if (!t.counterexample) t.counterexample = witness();
  }
}

void VerifyResult::merge(const VerifyResult& other) {
  for (const auto& o : other.tallies_) {
    auto& t = slot(o.suite, o.name);
    t.passed += o.passed;
    t.failed += o.failed;
    if (!t.counterexample && o.counterexample) t.counterexample = o.counterexample;
  }
}

const TheoremTally* VerifyResult::find(const std::string& name) const {
  for (const auto& t : tallies_) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

bool VerifyResult::passed() const { return failures() == 0; }

std::size_t VerifyResult::failures() const {
  std::size_t n = 0;
  for (const auto& t : tallies_) n += t.failed;
  return n;
}

std::size_t VerifyResult::checks() const {
  std::size_t n = 0;
  for (const auto& t : tallies_) n += t.passed + t.failed;
  return n;
}

void VerifyResult::print(std::ostream& os) const {
  for (const auto& t : tallies_) {
    os << (t.failed == 0 ? "PASS " : "FAIL ") << "[" << t.suite << "] " << t.name << ": " << t.passed << "/"
       << (t.passed + t.failed) << "\n";
    if (t.counterexample) os << "  counterexample: " << *t.counterexample << "\n";
  }
  os << (passed() ? "all " : "") << checks() - failures() << " of " << checks() << " checks passed\n";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lattice", "angles", "duality", "landau", "pq",     "sym",
                                              "po2",     "rigidity", "packing", "bounds", "abstract"};
  return names;
}

std::set<std::string> resolve_suites(const std::vector<std::string>& requested) {
  std::set<std::string> out;
  for (const auto& r : requested) {
    if (r == "all") {
      out.insert(suite_names().begin(), suite_names().end());
    } else if (std::find(suite_names().begin(), suite_names().end(), r) != suite_names().end()) {
      out.insert(r);
    } else {
      throw Error(ErrorKind::UnsupportedParams, "unknown suite \"" + r + "\"");
    }
  }
  return out;
}

// ---------------------------------------------------------------- helpers

namespace {

class Recorder {
 public:
  Recorder(VerifyResult& result, std::string suite, std::string context)
      : result_(result), suite_(std::move(suite)), context_(std::move(context)) {}

  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    result_.record(suite_, name, ok, [&] { return context_ + (detail.empty() ? "" : ": " + detail); });
  }

  /// Runs f; an exception counts as a failure of `name` with its message.
  template <class F>
  void guard(const std::string& name, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      check(name, false, std::string("exception: ") + e.what());
    }
  }

 private:
  VerifyResult& result_;
  std::string suite_;
  std::string context_;
};

std::string describe_quad(const std::string& label, const Quadruple& q) {
  return label + " H0=" + q.h0.describe() + " K1=" + q.k1.describe() + " K2=" + q.k2.describe();
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(num(rng), den(rng));
}

TwoBoxElement random_pointwise(const GroupPtr& g, std::mt19937_64& rng) {
  std::vector<QuadNumber> v;
  for (std::size_t i = 0; i < g->order(); ++i) v.emplace_back(random_rational(rng));
  return TwoBoxElement(g, Side::Pointwise, std::move(v));
}

bool atoms_meet_in_base(const SubgroupLattice& lat) {
  for (std::size_t a : lat.atoms) {
    for (std::size_t b : lat.atoms) {
      if (a != b && lat.meet(a, b) != 0) return false;
    }
  }
  return true;
}

bool hasse_edges_are_covers(const SubgroupLattice& lat) {
  for (auto [lo, hi] : lat.hasse_edges) {
    if (!(lat.leq(lo, hi) && lo != hi)) return false;
    for (std::size_t m = 0; m < lat.size(); ++m) {
      if (m != lo && m != hi && lat.leq(lo, m) && lat.leq(m, hi)) return false;
    }
  }
  // Conversely every covering pair must be an edge.
  for (std::size_t a = 0; a < lat.size(); ++a) {
    for (std::size_t b = 0; b < lat.size(); ++b) {
      if (a == b || !lat.leq(a, b)) continue;
      bool cover = true;
      for (std::size_t m = 0; m < lat.size() && cover; ++m) {
        if (m != a && m != b && lat.leq(a, m) && lat.leq(m, b)) cover = false;
      }
      if (cover && !std::binary_search(lat.hasse_edges.begin(), lat.hasse_edges.end(), std::make_pair(a, b))) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- per-lattice suites

void lattice_suite(Recorder& rec, const SubgroupLattice& lat, const GroupLimits& limits) {
  rec.guard("serial and parallel enumeration agree", [&] {
    const auto serial = enumerate_subgroups_serial(lat.base(), limits);
    bool same = serial.size() == lat.size() && serial.hasse_edges == lat.hasse_edges && serial.atoms == lat.atoms &&
                serial.coatoms == lat.coatoms;
    for (std::size_t i = 0; same && i < lat.size(); ++i) same = serial.nodes[i] == lat.nodes[i];
    rec.check("serial and parallel enumeration agree", same);
  });
  rec.guard("lattice closed under meet and join", [&] {
    for (std::size_t a = 0; a < lat.size(); ++a) {
      for (std::size_t b = a; b < lat.size(); ++b) {
        (void)lat.meet(a, b);
        (void)lat.join(a, b);
      }
    }
    rec.check("lattice closed under meet and join", true);
  });
  rec.check("hasse edges are exactly the covers", hasse_edges_are_covers(lat));
  rec.guard("distinct atoms meet in the base", [&] { rec.check("distinct atoms meet in the base", atoms_meet_in_base(lat)); });
  bool lagrange = true;
  for (const auto& n : lat.nodes) lagrange = lagrange && lat.group->order() % n.order() == 0 && lat.base().is_subgroup_of(n);
  rec.check("nodes contain the base and divide |G|", lagrange);
  rec.guard("product multiplicity is |H∩K| on HK", [&] {
    for (std::size_t a = 0; a < lat.size(); ++a) {
      for (std::size_t b = 0; b < lat.size(); ++b) (void)product_set(lat.nodes[a], lat.nodes[b]);
    }
    rec.check("product multiplicity is |H∩K| on HK", true);
  });
  rec.guard("double coset count matches the character sum", [&] {
    const auto n = double_coset_count(lat.base());
    rec.check("double coset count matches the character sum", n == double_coset_count_by_characters(lat.base()));
  });
}

void bounds_suite(Recorder& rec, const IntermediateLattice& cen) {
  if (cen.index < 2) return;
  rec.guard("counting bounds", [&] {
    const LatticeStats stats{cen.lattice.size(), cen.lattice.atoms.size(), commutant_is_abelian(cen.lattice.base())};
    const auto report = bound_report(cen.index, cen.dim_commutant, stats);
    std::string failing;
    for (const auto& c : report.checks) {
      if (c.asserted && !c.holds) failing += c.name + " (" + c.observed + " vs " + c.bound + ") ";
    }
    rec.check("counting bounds", report.asserted_hold(), failing);
  });
}

void packing_suite(Recorder& rec, const IntermediateLattice& cen) {
  rec.guard("gram matrix is PSD with unit diagonal", [&] {
    (void)gram_matrix(cen);
    rec.check("gram matrix is PSD with unit diagonal", gram_is_psd(cen));
  });
  rec.guard("gram zeros are exactly the commuting squares", [&] {
    bool ok = true;
    for (std::size_t a = 0; a < cen.proper.size(); ++a) {
      for (std::size_t b = 0; b < cen.proper.size(); ++b) {
        const auto& r = cen.reports[a][b];
        ok = ok && (r.cos_alpha->is_zero() == r.commuting);
      }
    }
    rec.check("gram zeros are exactly the commuting squares", ok);
  });
  rec.guard("packing certificate for atoms", [&] {
    const auto cert = packing_certificate(cen);
    std::string w;
    if (cert.violation) w = "nodes " + std::to_string(cert.violation->first) + "," + std::to_string(cert.violation->second);
    rec.check("packing certificate for atoms", cert.passed, w);
  });
}

void rigidity_suite(Recorder& rec, const IntermediateLattice& cen) {
  const auto& lat = cen.lattice;
  for (std::size_t a : lat.atoms) {
    for (std::size_t b : lat.atoms) {
      if (a >= b) continue;
      rec.guard("distinct atoms are orthogonal", [&] {
        const auto quad = Quadruple::make(lat.base(), lat.nodes[a], lat.nodes[b]);
        auto td = trace_data(quad);
        const auto c = cos_alpha(td);
        rec.check("distinct atoms are orthogonal", c.is_zero(), "cos alpha = " + c.to_string());
        td.minimal_pair = true;
        const auto m = check_mini(td);
        rec.check("minimal pairs have cos alpha < 1/2", m.below_half, "cos alpha = " + m.cos_alpha.to_string());
      });
    }
  }
}

void fourier_suite(Recorder& rec, const GroupPtr& g, const SubgroupLattice& lat, std::size_t samples,
                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    rec.guard("fourier is an isometry exchanging product and coproduct", [&] {
      const auto x = random_pointwise(g, rng);
      const auto y = random_pointwise(g, rng);
      const auto fx = fourier(x);
      const auto fy = fourier(y);
      bool ok = fx.inner(fy) == x.inner(y);
      ok = ok && fourier(fx) == x;
      ok = ok && fourier(product(x, y)) == coproduct(fx, fy);
      ok = ok && fourier(coproduct(x, y)) == product(fx, fy);
      rec.check("fourier is an isometry exchanging product and coproduct", ok);
    });
  }
  for (const auto& k : lat.nodes) {
    rec.guard("fourier of a biprojection is a multiple of the dual biprojection", [&] {
      const auto f = fourier(pointwise_biprojection(k));
      const auto dual = dual_biprojection(k, lat.base());
      const QuadNumber scale = QuadNumber(Rational(k.order())) / delta_of(*g);
      rec.check("fourier of a biprojection is a multiple of the dual biprojection", f == dual.scaled(scale));
    });
  }
}

// ---------------------------------------------------------------- per-pair suites

void angle_checks(Recorder& rec, const Quadruple& quad, std::uint64_t seed) {
  const auto td = trace_data(quad);
  const auto report = classify(quad);
  const bool proper = quad.k1 != quad.h0 && quad.k2 != quad.h0 && !quad.k1.is_whole() && !quad.k2.is_whole();

  rec.check("trace lower bounds with equality exactly at zero cosine",
            td.tr_pq >= td.tau && td.tr_pq >= td.tau_p * td.tau_q &&
                (!report.cos_alpha || (td.tr_pq == td.tau) == report.cos_alpha->is_zero()) &&
                (!report.cos_beta || (td.tr_pq == td.tau_p * td.tau_q) == report.cos_beta->is_zero()));

  const auto model = make_coset_model(quad.h0);
  const bool e_product_is_e1 =
      biprojection_of(model, quad.k1) * biprojection_of(model, quad.k2) == jones_projection(model);
  const bool meet_is_base = quad.meet() == quad.h0;
  rec.check("commuting square characterization",
            report.commuting == meet_is_base && report.commuting == e_product_is_e1 &&
                (!report.cos_alpha || report.cos_alpha->is_zero() == meet_is_base));

  if (report.commuting) {
    rec.check("commuting square index inequalities",
              quad.index_mq() >= quad.index_pn() && quad.index_mp() >= quad.index_qn());
  }
  if (report.nested) {
    rec.check("chain closed forms agree", true);
  }
  if (!proper) return;

  const auto a = *report.cos_alpha;
  const auto via_basis = cos_alpha_by_basis(quad, seed);
  const auto via_vectors = cos_alpha_vectors(quad);
  rec.check("cos alpha: formula, basis expansion and unit vectors agree", a == via_basis && a == via_vectors,
            a.to_string() + " / " + via_basis.to_string() + " / " + via_vectors.to_string());
  rec.check("tr(e_P e_Q) via basis expansion", tr_pq_by_basis(quad, seed) == td.tr_pq);

  const auto swapped = Quadruple::make(quad.h0, quad.k2, quad.k1);
  const auto rs = classify(swapped);
  rec.check("angles are symmetric", rs.cos_alpha == report.cos_alpha && rs.cos_beta == report.cos_beta);

  if (report.parallelogram) {
    rec.check("parallelogram has equal angles", report.cos_alpha == report.cos_beta);
  }
}

void duality_checks(Recorder& rec, const Quadruple& quad) {
  const bool proper = quad.k1 != quad.h0 && quad.k2 != quad.h0 && !quad.k1.is_whole() && !quad.k2.is_whole();
  if (!proper) return;
  const auto td = trace_data(quad);
  const auto a = cos_alpha(td);
  const auto b = cos_beta(td);
  const auto corr_dual = cos_alpha_dual(quad);
  const auto beta_dual = cos_beta_dual(quad);
  rec.check("cos alpha equals correlation of dual biprojections", a == corr_dual,
            a.to_string() + " vs " + corr_dual.to_string());
  rec.check("cos beta equals alpha of the dual pair", b == beta_dual, b.to_string() + " vs " + beta_dual.to_string());
}

void landau_checks(Recorder& rec, const Quadruple& quad) {
  if (!quad.h0.is_trivial()) return;
  const auto e_p = pointwise_biprojection(quad.k1);
  const auto e_q = pointwise_biprojection(quad.k2);
  const auto landau = landau_projection(e_p, e_q);
  const auto hk = product_set(quad.k1, quad.k2).elements;
  rec.check("normalized coproduct is the projection onto HK",
            landau.is_projection() && landau == TwoBoxElement::indicator(quad.group_ptr(), Side::Pointwise, hk));
  const auto join = join_projection(e_p, e_q);
  rec.check("e_P v e_Q lies below the normalized coproduct", join.support().is_subset_of(landau.support()));
  const auto delta = delta_of(quad.group());
  rec.check("tr(e_P * e_Q) = delta tau_P tau_Q", coproduct(e_p, e_q).trace() == delta * e_p.trace() * e_q.trace());
  const auto meet = meet_projection(e_p, e_q);
  rec.check("e_P ^ e_Q is the projection onto K1∩K2", meet == pointwise_biprojection(quad.meet()));
}

void pq_checks(Recorder& rec, const Quadruple& quad, std::size_t reps, std::uint64_t seed) {
  const auto model = make_coset_model(quad.h0);
  const auto p = p_element(model, quad.k1, quad.k2);
  const auto q = q_element(model, quad.k1, quad.k2);
  bool independent = true;
  for (std::size_t r = 0; r < reps && independent; ++r) {
    const auto l = coset_basis(quad.k1, quad.h0, seed + 2 * r);
    const auto m = coset_basis(quad.k2, quad.h0, seed + 2 * r + 1);
    independent = p_from_bases(model, l.reps, m.reps) == p && p_from_bases(model, m.reps, l.reps) == q;
  }
  rec.check("p and q do not depend on the basis", independent);
  const auto trq = trq_value(model, quad.k1, quad.k2);
  rec.check("tr p = tr q = [P:N][Q:N]/[M:N]", p.trace() == trq && q.trace() == trq);
  rec.check("spectrum of p equals spectrum of q", p.spectrum() == q.spectrum());
  rec.check("q(g) = p(g^-1)", inversion_relation_holds(p, q));

  const auto one = CosetFunction::constant(model, 1);
  const bool factorization = product_set(quad.k1, quad.k2).elements.size() == quad.group().order() &&
                             quad.meet() == quad.h0;
  rec.check("p = 1 iff q = 1 iff exact factorization", (p == one) == (q == one) && (p == one) == factorization);

  const auto e_p = biprojection_of(model, quad.k1);
  const auto e_q = biprojection_of(model, quad.k2);
  if (quad.meet() == quad.h0) {
    rec.check("commuting square: p >= e_Q and q >= e_P", e_q.leq(p) && e_p.leq(q));
  }
  const auto upper = join(quad.k1, quad.k2).members();
  const auto lower = quad.k1.members().unite(quad.k2.members());
  rec.check("e_P v e_Q <= supp p, supp q <= e_(P v Q)",
            lower.is_subset_of(p.support()) && p.support().is_subset_of(upper) && lower.is_subset_of(q.support()) &&
                q.support().is_subset_of(upper));
  rec.check("q = e_P iff Q = N", (q == e_p) == (quad.k2 == quad.h0));
  rec.guard("tr(r e1) = tr(e_P e_Q)", [&] {
    (void)r_element_trace(quad, seed);
    rec.check("tr(r e1) = tr(e_P e_Q)", true);
  });
}

void sym_checks(Recorder& rec, const Quadruple& quad, std::uint64_t seed) {
  const auto b = sym_battery(quad, seed, seed + 1);
  std::string w;
  for (std::size_t i = 0; i < b.conditions.size(); ++i) w += std::to_string(i + 1) + "=" + (b.conditions[i] ? "T " : "F ");
  rec.check("commuting and co-commuting equivalences agree", b.consistent(), w);
  const bool two_sided = b.conditions[3] == b.conditions[5];
  rec.check("product bases are two-sided together", two_sided);
}

void po2_checks(Recorder& rec, const Quadruple& quad, std::uint64_t seed) {
  if (quad.k1 == quad.h0 || quad.k2 == quad.h0 || !(quad.meet() == quad.h0)) return;
  const auto b = po2_battery(quad, seed, seed + 1);
  std::string w;
  for (std::size_t i = 0; i < b.conditions.size(); ++i) w += std::to_string(i + 1) + "=" + (b.conditions[i] ? "T " : "F ");
  rec.check("non-degenerate commuting square equivalences agree", b.consistent(), w);
  (void)central_support(quad);
  rec.check("conjugation sweeps equal p and q", true);
}

}  // namespace

// ---------------------------------------------------------------- drivers

VerifyResult verify_group(const std::string& label, const GroupPtr& group, const Subgroup& base,
                          const VerifyOptions& opts) {
  VerifyResult result;
  const auto& s = opts.suites;
  const std::string ctx = label + " H0=" + base.describe();
  {
    Recorder rec(result, "lattice", ctx);
    const auto bad = find_axiom_violation(*group);
    rec.check("group axioms", !bad, bad.value_or(""));
    if (bad) return result;
  }

  IntermediateLattice cen;
  {
    Recorder rec(result, "lattice", ctx);
    bool ok = true;
    rec.guard("census", [&] { cen = census(base, opts.limits); });
    ok = !cen.lattice.nodes.empty();
    rec.check("census", ok);
    if (!ok) return result;
    if (s.contains("lattice")) lattice_suite(rec, cen.lattice, opts.limits);
  }
  if (s.contains("bounds")) {
    Recorder rec(result, "bounds", ctx);
    bounds_suite(rec, cen);
  }
  if (s.contains("packing")) {
    Recorder rec(result, "packing", ctx);
    packing_suite(rec, cen);
  }
  if (s.contains("rigidity")) {
    Recorder rec(result, "rigidity", ctx);
    rigidity_suite(rec, cen);
  }
  if (s.contains("duality") && base.is_trivial()) {
    Recorder rec(result, "duality", ctx);
    fourier_suite(rec, group, cen.lattice, opts.fourier_samples, opts.seed);
  }

  const auto& nodes = cen.lattice.nodes;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = 0; b < nodes.size(); ++b) pairs.emplace_back(a, b);
  }
  std::vector<VerifyResult> partial(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto [a, b] = pairs[i];
    auto& out = partial[i];
    const auto quad = Quadruple::make(base, nodes[a], nodes[b]);
    const std::string qctx = describe_quad(label, quad);
    const std::uint64_t seed = opts.seed + 7919 * i;
    auto run = [&](const std::string& suite, auto&& body) {
      if (!s.contains(suite)) return;
      Recorder rec(out, suite, qctx);
      rec.guard(suite + " battery", [&] { body(rec); });
    };
    run("angles", [&](Recorder& rec) { angle_checks(rec, quad, seed); });
    run("duality", [&](Recorder& rec) { duality_checks(rec, quad); });
    run("landau", [&](Recorder& rec) { landau_checks(rec, quad); });
    if (a <= b) {
      run("pq", [&](Recorder& rec) { pq_checks(rec, quad, opts.random_reps, seed); });
      run("sym", [&](Recorder& rec) { sym_checks(rec, quad, seed); });
      run("po2", [&](Recorder& rec) { po2_checks(rec, quad, seed); });
    }
  });
  for (const auto& p : partial) result.merge(p);
  return result;
}

TraceData tight_minimal_fixture() {
  return TraceData{Rational(1, 16), Rational(1, 4), Rational(1, 4), Rational(1, 7), std::nullopt, true};
}

namespace {

Rational between(const Rational& lo, const Rational& hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den(1, 24);
  const int m = den(rng);
  std::uniform_int_distribution<int> num(0, m);
  return lo + (hi - lo) * Rational(num(rng), m);
}

Rational open_unit_interval(const Rational& lo, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den(2, 24);
  const int m = den(rng);
  std::uniform_int_distribution<int> num(1, m - 1);
  return lo + (1 - lo) * Rational(num(rng), m);
}

}  // namespace

TraceData random_parallelogram(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Rational tp = open_unit_interval(0, rng);
  const Rational tq = open_unit_interval(0, rng);
  const Rational tau = tp * tq;
  return TraceData{tau, tp, tq, between(tau, std::min(tp, tq), rng), std::nullopt, std::nullopt};
}

TraceData random_minimal_pair(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> index(4, 64);
  for (;;) {
    const Rational tau(1, index(rng));
    const Rational tp = open_unit_interval(tau, rng);
    const Rational tq = open_unit_interval(tau, rng);
    const Rational prod = tp * tq;
    const Rational lo = std::max(tau, prod);
    const Rational hi = std::min<Rational>({Rational(prod / (tp + tq - tau)), tp, tq});
    if (lo > hi) continue;
    return TraceData{tau, tp, tq, between(lo, hi, rng), std::nullopt, true};
  }
}

VerifyResult verify_abstract(const VerifyOptions& opts) {
  VerifyResult result;
  if (!opts.suites.contains("abstract")) return result;
  Recorder fixtures(result, "abstract", "fixture (1/16,1/4,1/4,1/7)");
  fixtures.guard("tight minimal-pair fixture", [&] {
    const auto m = check_mini(tight_minimal_fixture());
    fixtures.check("tight minimal-pair fixture", m.tight && m.below_half && m.cos_alpha == Surd(Rational(3, 7)),
                   "cos alpha = " + m.cos_alpha.to_string());
    const auto cert = packing_from_cosines({{Surd(1), m.cos_alpha}, {m.cos_alpha, Surd(1)}});
    fixtures.check("packing certificate for abstract fixtures", cert.passed);
  });
  for (std::size_t i = 0; i < opts.abstract_samples; ++i) {
    const auto td = random_parallelogram(opts.seed + i);
    Recorder rec(result, "abstract", "parallelogram " + to_string(td.tau) + "," + to_string(td.tau_p) + "," +
                                          to_string(td.tau_q) + "," + to_string(td.tr_pq));
    rec.guard("random parallelograms have equal angles", [&] {
      const auto r = classify(td);
      const bool ok = r.parallelogram && (!r.cos_alpha || !r.cos_beta || *r.cos_alpha == *r.cos_beta);
      rec.check("random parallelograms have equal angles", ok);
    });
  }
  for (std::size_t i = 0; i < opts.abstract_samples; ++i) {
    const auto td = random_minimal_pair(opts.seed + 100003 + i);
    Recorder rec(result, "abstract", "minimal pair " + to_string(td.tau) + "," + to_string(td.tau_p) + "," +
                                         to_string(td.tau_q) + "," + to_string(td.tr_pq));
    rec.guard("random minimal pairs have cos alpha < 1/2", [&] {
      const auto m = check_mini(td);
      rec.check("random minimal pairs have cos alpha < 1/2", m.below_half);
      const auto cert = packing_from_cosines({{Surd(1), m.cos_alpha}, {m.cos_alpha, Surd(1)}});
      rec.check("packing certificate for abstract fixtures", cert.passed);
    });
  }
  return result;
}

VerifyResult verify_corpus(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts) {
  VerifyResult result;
  for (const auto& e : corpus) {
    for (const auto& base : e.bases) result.merge(verify_group(e.spec, e.group, base, opts));
  }
  result.merge(verify_abstract(opts));
  return result;
}

}  // namespace intangle
