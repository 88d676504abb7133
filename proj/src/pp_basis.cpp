#include "intangle/pp_basis.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "intangle/errors.hpp"

namespace intangle {

PPBasis coset_basis(const Subgroup& k, const Subgroup& h0, std::optional<std::uint64_t> seed) {
  require_same_parent(k, h0);
  if (!h0.is_subgroup_of(k)) throw Error(ErrorKind::BaseNotContained, "base not inside " + k.describe());
  const CosetModel model(h0);
  auto reps = minimal_representatives(model, k);
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::uniform_int_distribution<std::size_t> pick(0, h0.order() - 1);
    for (auto& r : reps) r = k.group().compose(r, h0.elements()[pick(rng)]);
    std::shuffle(reps.begin(), reps.end(), rng);
  }
  PPBasis b{h0, k, std::move(reps)};
  if (!satisfies_basis_sum(b)) throw std::logic_error("coset representatives do not sum to e_K");
  return b;
}

bool satisfies_basis_sum(const PPBasis& basis) {
  // Σ λ_i e1 λ_i* is the sum of the coset projections λ_i H0; counted as integers.
  return is_basis_for(basis.reps, basis.k, basis.h0);
}

bool is_basis_for(std::span<const Element> list, const Subgroup& target, const Subgroup& base) {
  const CosetModel model(base);
  std::vector<std::size_t> hits(model.coset_count(), 0);
  for (Element g : list) ++hits[model.coset_of(g)];
  for (std::size_t c = 0; c < hits.size(); ++c) {
    if (hits[c] != (target.contains(model.representative(c)) ? 1U : 0U)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- group algebra

GroupAlgebraElement GroupAlgebraElement::unitary(const GroupPtr& group, Element g) {
  GroupAlgebraElement x(group);
  x.coeffs_[g] = 1;
  return x;
}

GroupAlgebraElement GroupAlgebraElement::adjoint() const {
  GroupAlgebraElement out(group_);
  for (const auto& [g, c] : coeffs_) out.coeffs_[group_->inverse(g)] = c;
  return out;
}

GroupAlgebraElement GroupAlgebraElement::expect_onto(const Subgroup& h) const {
  GroupAlgebraElement out(group_);
  for (const auto& [g, c] : coeffs_) {
    if (h.contains(g)) out.coeffs_[g] = c;
  }
  return out;
}

Rational GroupAlgebraElement::trace() const {
  auto it = coeffs_.find(0);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement out(a.group_);
  for (const auto& [g, c] : a.coeffs_) {
    for (const auto& [h, d] : b.coeffs_) out.coeffs_[a.group_->compose(g, h)] += c * d;
  }
  std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement out = a;
  for (const auto& [h, d] : b.coeffs_) out.coeffs_[h] += d;
  std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Rational basis_overlap(const PPBasis& lambdas, const PPBasis& mus) {
  const GroupPtr& g = lambdas.k.parent();
  Rational s = 0;
  for (Element l : lambdas.reps) {
    const auto lam = GroupAlgebraElement::unitary(g, l);
    for (Element m : mus.reps) {
      const auto mu = GroupAlgebraElement::unitary(g, m);
      s += ((lam.adjoint() * mu).expect_onto(lambdas.h0) * mu.adjoint() * lam).trace();
    }
  }
  return s;
}

namespace {

std::pair<PPBasis, PPBasis> bases_of(const Quadruple& quad, std::optional<std::uint64_t> seed) {
  std::optional<std::uint64_t> seed2;
  if (seed) seed2 = *seed ^ 0x9e3779b97f4a7c15ULL;
  return {coset_basis(quad.k1, quad.h0, seed), coset_basis(quad.k2, quad.h0, seed2)};
}

}  // namespace

Rational tr_pq_by_basis(const Quadruple& quad, std::optional<std::uint64_t> seed) {
  const auto [l, m] = bases_of(quad, seed);
  return Rational(quad.h0.order(), quad.group().order()) * basis_overlap(l, m);
}

Surd cos_alpha_by_basis(const Quadruple& quad, std::optional<std::uint64_t> seed) {
  const auto [l, m] = bases_of(quad, seed);
  const Rational a(l.reps.size());
  const Rational b(m.reps.size());
  if (a == 1 || b == 1) throw Error(ErrorKind::AngleUndefined, "alpha undefined when P or Q is N");
  return Surd(basis_overlap(l, m) - 1) / Surd::sqrt((a - 1) * (b - 1));
}

// ---------------------------------------------------------------- batteries

namespace {

std::vector<Element> products(std::span<const Element> a, std::span<const Element> b, const FiniteGroup& g) {
  std::vector<Element> out;
  for (Element x : a) {
    for (Element y : b) out.push_back(g.compose(x, y));
  }
  return out;
}

bool product_is_whole(const Subgroup& a, const Subgroup& b) {
  return product_set(a, b).elements.size() == a.group().order();
}

}  // namespace

bool SymBattery::consistent() const {
  return transfer_checks_agree && std::all_of(conditions.begin(), conditions.end(),
                                              [&](bool c) { return c == conditions[0]; });
}

SymBattery sym_battery(const Quadruple& quad, std::uint64_t seed_a, std::uint64_t seed_b) {
  SymBattery out;
  const auto& g = quad.group();
  const auto report = classify(quad);
  out.conditions[0] = report.commuting && report.cocommuting;

  if (report.cos_alpha && report.cos_beta) {
    out.conditions[1] = report.cos_alpha->is_zero() && report.cos_beta->is_zero();
  } else {
    const auto& td = report.trace;
    out.conditions[1] = td.tr_pq == td.tau && td.tr_pq == td.tau_p * td.tau_q;
  }

  const auto model = make_coset_model(quad.h0);
  const auto one = CosetFunction::constant(model, 1);
  const auto lam = coset_basis(quad.k1, quad.h0);
  const auto mu = coset_basis(quad.k2, quad.h0);
  const auto whole = Subgroup::whole(quad.group_ptr());
  out.conditions[2] = p_element(model, quad.k1, quad.k2) == one;
  out.conditions[3] = is_basis_for(products(lam.reps, mu.reps, g), whole, quad.h0);
  out.conditions[4] = q_element(model, quad.k1, quad.k2) == one;
  out.conditions[5] = is_basis_for(products(mu.reps, lam.reps, g), whole, quad.h0);

  auto transfer = [&](const Subgroup& from, const Subgroup& over) {
    const bool a = is_basis_for(coset_basis(from, quad.h0, seed_a).reps, whole, over);
    const bool b = is_basis_for(coset_basis(from, quad.h0, seed_b).reps, whole, over);
    const bool structural = product_is_whole(from, over) && intersection(from, over) == quad.h0;
    if (a != b || a != structural) out.transfer_checks_agree = false;
    return a && b && structural;
  };
  out.conditions[6] = transfer(quad.k1, quad.k2);
  out.conditions[7] = transfer(quad.k2, quad.k1);
  return out;
}

bool Po2Battery::consistent() const {
  return std::all_of(conditions.begin(), conditions.end(), [&](bool c) { return c == conditions[0]; });
}

CosetFunction conjugation_sweep(const CosetFunction& e, const Subgroup& sweep) {
  const auto& model = e.model();
  ElementSet support(model->group().order());
  for (Element k : sweep.elements()) support = support.unite(e.translate(k).support());
  return CosetFunction::indicator(model, support);
}

Po2Battery po2_battery(const Quadruple& quad, std::uint64_t seed_a, std::uint64_t seed_b) {
  if (quad.k1 == quad.h0 || quad.k2 == quad.h0) throw Error(ErrorKind::NotApplicable, "P or Q equals N");
  const auto report = classify(quad);
  if (!report.commuting) throw Error(ErrorKind::NotCommutingSquare, "quadruple is not a commuting square");

  Po2Battery out;
  const auto model = make_coset_model(quad.h0);
  const auto one = CosetFunction::constant(model, 1);
  const auto whole = Subgroup::whole(quad.group_ptr());
  out.conditions[0] = report.cocommuting;
  out.conditions[1] = conjugation_sweep(biprojection_of(model, quad.k2), quad.k1) == one;
  out.conditions[2] = conjugation_sweep(biprojection_of(model, quad.k1), quad.k2) == one;
  auto transfer = [&](const Subgroup& from, const Subgroup& over) {
    return is_basis_for(coset_basis(from, quad.h0, seed_a).reps, whole, over) &&
           is_basis_for(coset_basis(from, quad.h0, seed_b).reps, whole, over);
  };
  out.conditions[3] = transfer(quad.k1, quad.k2);
  out.conditions[4] = transfer(quad.k2, quad.k1);
  out.conditions[5] = product_is_whole(quad.k1, quad.k2);
  out.conditions[6] = product_is_whole(quad.k2, quad.k1);
  return out;
}

CentralSupport central_support(const Quadruple& quad) {
  if (!classify(quad).commuting) throw Error(ErrorKind::NotCommutingSquare, "quadruple is not a commuting square");
  const auto model = make_coset_model(quad.h0);
  CentralSupport cs{conjugation_sweep(biprojection_of(model, quad.k2), quad.k1),
                    conjugation_sweep(biprojection_of(model, quad.k1), quad.k2),
                    p_element(model, quad.k1, quad.k2), q_element(model, quad.k1, quad.k2)};
  if (!(cs.sweep_p == cs.p) || !(cs.sweep_q == cs.q)) {
    throw std::logic_error("conjugation sweep differs from p or q on a commuting square");
  }
  if (!cs.p.is_projection() || !cs.q.is_projection()) throw std::logic_error("p or q is not a projection");
  return cs;
}

Rational r_element_trace(const Quadruple& quad, std::optional<std::uint64_t> seed) {
  const auto model = make_coset_model(quad.h0);
  const auto e_p = biprojection_of(model, quad.k1);
  const auto mu = coset_basis(quad.k2, quad.h0, seed);
  auto r = CosetFunction::constant(model, 0);
  // u_μ* e_P u_μ = u_{μ⁻¹} e_P u_{μ⁻¹}*.
  for (Element m : mu.reps) r = r + e_p.translate(quad.group().inverse(m));
  const Rational t = (r * jones_projection(model)).trace();
  const auto td = trace_data(quad);
  if (t != td.tr_pq) throw std::logic_error("tr(r e1) differs from tr(e_P e_Q)");
  if (td.tr_pq == td.tau && t != td.tau) throw std::logic_error("tr(r e1) differs from tau on a commuting square");
  return t;
}

}  // namespace intangle
