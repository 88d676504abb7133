#include "intangle/quadruple.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "intangle/errors.hpp"
#include "intangle/two_box.hpp"

namespace intangle {

Quadruple Quadruple::make(Subgroup h0, Subgroup k1, Subgroup k2) {
  require_same_parent(h0, k1);
  require_same_parent(h0, k2);
  if (!h0.is_subgroup_of(k1)) throw Error(ErrorKind::BaseNotContained, "H0 not inside K1 " + k1.describe());
  if (!h0.is_subgroup_of(k2)) throw Error(ErrorKind::BaseNotContained, "H0 not inside K2 " + k2.describe());
  return Quadruple{std::move(h0), std::move(k1), std::move(k2)};
}

std::string TraceData::violation() const {
  if (tau <= 0) return "tau <= 0";
  if (tau_p < tau) return "tau_p < tau";
  if (tau_q < tau) return "tau_q < tau";
  if (tau_p > 1) return "tau_p > 1";
  if (tau_q > 1) return "tau_q > 1";
  if (tr_pq < tau) return "tr_pq < tau violates tr(e_P e_Q) >= tau";
  if (tr_pq < tau_p * tau_q) return "tr_pq < tau_p*tau_q violates tr(e_P e_Q) >= tau_P tau_Q";
  if (tr_pq > tau_p) return "tr_pq > tau_p";
  if (tr_pq > tau_q) return "tr_pq > tau_q";
  if (tau_meet) {
    if (*tau_meet < tau) return "tau_meet < tau";
    if (*tau_meet > tr_pq) return "tau_meet > tr_pq";
  }
  return {};
}

void TraceData::validate() const {
  if (auto v = violation(); !v.empty()) throw Error(ErrorKind::InvalidTraceData, v);
}

TraceData trace_data(const Quadruple& quad) {
  const auto n = quad.group().order();
  TraceData td{Rational(quad.h0.order(), n), Rational(quad.k1.order(), n), Rational(quad.k2.order(), n),
               Rational(quad.meet().order(), n), std::nullopt, std::nullopt};
  td.tau_meet = td.tr_pq;

  const auto model = make_coset_model(quad.h0);
  const auto e_p = biprojection_of(model, quad.k1);
  const auto e_q = biprojection_of(model, quad.k2);
  const auto e_1 = jones_projection(model);
  if (e_1.trace() != td.tau || e_p.trace() != td.tau_p || e_q.trace() != td.tau_q ||
      e_p.inner(e_q) != td.tr_pq) {
    throw std::logic_error("closed-form traces disagree with the coset model");
  }
  td.validate();
  return td;
}

Surd cos_alpha(const TraceData& td) {
  td.validate();
  if (td.p_is_bottom() || td.q_is_bottom()) throw Error(ErrorKind::AngleUndefined, "alpha undefined when P or Q is N");
  return Surd(td.tr_pq - td.tau) / Surd::sqrt((td.tau_p - td.tau) * (td.tau_q - td.tau));
}

Surd cos_beta(const TraceData& td) {
  td.validate();
  if (td.p_is_bottom() || td.q_is_bottom() || td.p_is_top() || td.q_is_top()) {
    throw Error(ErrorKind::AngleUndefined, "beta undefined when P or Q is N or M");
  }
  const Rational vp = td.tau_p - td.tau_p * td.tau_p;
  const Rational vq = td.tau_q - td.tau_q * td.tau_q;
  return Surd(td.tr_pq - td.tau_p * td.tau_q) / Surd::sqrt(vp * vq);
}

Surd cos_alpha_nested(const Rational& index_pn, const Rational& index_qn) {
  if (index_pn <= 1 || index_qn < index_pn) {
    throw Error(ErrorKind::NotAChain, "need 1 < [P:N] <= [Q:N], got " + to_string(index_pn) + ", " + to_string(index_qn));
  }
  return Surd::sqrt((index_pn - 1) / (index_qn - 1));
}

Surd cos_beta_nested(const Rational& index_mq, const Rational& index_mp) {
  if (index_mq <= 1 || index_mp < index_mq) {
    throw Error(ErrorKind::NotAChain, "need 1 < [M:Q] <= [M:P], got " + to_string(index_mq) + ", " + to_string(index_mp));
  }
  return Surd::sqrt((index_mq - 1) / (index_mp - 1));
}

double angle_radians(const Surd& cosine) { return std::acos(std::clamp(cosine.to_double(), -1.0, 1.0)); }

QuadrupleReport classify(const TraceData& td) {
  td.validate();
  QuadrupleReport r;
  r.trace = td;
  r.commuting = td.tr_pq == td.tau;
  r.cocommuting = td.tr_pq == td.tau_p * td.tau_q;
  r.parallelogram = td.tau_p * td.tau_q == td.tau;
  if (!td.p_is_bottom() && !td.q_is_bottom()) {
    r.cos_alpha = cos_alpha(td);
    r.alpha_radians = angle_radians(*r.cos_alpha);
    if (r.commuting != r.cos_alpha->is_zero()) throw std::logic_error("commuting flag disagrees with cos alpha");
    if (r.cos_alpha->sign() < 0 || Surd(1) < *r.cos_alpha) throw std::logic_error("cos alpha outside [0, 1]");
  }
  if (!td.p_is_bottom() && !td.q_is_bottom() && !td.p_is_top() && !td.q_is_top()) {
    r.cos_beta = cos_beta(td);
    r.beta_radians = angle_radians(*r.cos_beta);
    if (r.cocommuting != r.cos_beta->is_zero()) throw std::logic_error("co-commuting flag disagrees with cos beta");
  }
  if (r.parallelogram && r.cos_alpha && r.cos_beta && *r.cos_alpha != *r.cos_beta) {
    throw std::logic_error("parallelogram with cos alpha != cos beta");
  }
  return r;
}

QuadrupleReport classify(const Quadruple& quad) {
  auto r = classify(trace_data(quad));
  const auto meet = quad.meet();
  if (r.commuting != (meet == quad.h0)) throw std::logic_error("commuting flag disagrees with K1∩K2 = H0");
  if (r.cocommuting != (quad.group().order() * meet.order() == quad.k1.order() * quad.k2.order())) {
    throw std::logic_error("co-commuting flag disagrees with |G||K1∩K2| = |K1||K2|");
  }

  const bool k1_in_k2 = quad.k1.is_subgroup_of(quad.k2);
  const bool k2_in_k1 = quad.k2.is_subgroup_of(quad.k1);
  if (k1_in_k2 || k2_in_k1) {
    // Orient the chain as N ⊂ P ⊂ Q ⊂ M with P the smaller one.
    const Subgroup& small = k1_in_k2 ? quad.k1 : quad.k2;
    const Subgroup& large = k1_in_k2 ? quad.k2 : quad.k1;
    const auto n = quad.group().order();
    ChainData c{Rational(small.order(), quad.h0.order()), Rational(large.order(), quad.h0.order()),
                Rational(n, large.order()), Rational(n, small.order()), std::nullopt, std::nullopt};
    if (c.index_pn > 1) c.cos_alpha = cos_alpha_nested(c.index_pn, c.index_qn);
    if (c.index_mq > 1) c.cos_beta = cos_beta_nested(c.index_mq, c.index_mp);
    if (c.cos_alpha && r.cos_alpha && *c.cos_alpha != *r.cos_alpha) throw std::logic_error("nested cos alpha mismatch");
    if (c.cos_beta && r.cos_beta && *c.cos_beta != *r.cos_beta) throw std::logic_error("nested cos beta mismatch");
    r.nested = std::move(c);
  }
  return r;
}

MiniCheck check_mini(const TraceData& td) {
  if (!td.minimal_pair.value_or(false)) throw Error(ErrorKind::NotMinimalPair, "minimal_pair flag not set");
  td.validate();
  if (td.tau_meet && *td.tau_meet != td.tau) {
    throw Error(ErrorKind::NotMinimalPair, "distinct minimal intermediates meet in N, but tau_meet != tau");
  }
  if (td.p_is_bottom() || td.q_is_bottom()) throw Error(ErrorKind::NotMinimalPair, "P or Q equals N");
  if (td.tau_p == td.tau_q && td.tr_pq == td.tau_p) throw Error(ErrorKind::NotMinimalPair, "P equals Q");
  MiniCheck m{td.tau_p * td.tau_q / td.tr_pq, td.tau_p + td.tau_q - td.tau, cos_alpha(td), false, false};
  if (m.lhs < m.rhs) {
    throw Error(ErrorKind::InvalidTraceData, "tau_p*tau_q/tr_pq = " + to_string(m.lhs) + " < tau_p+tau_q-tau = " +
                                                 to_string(m.rhs) + " violates the minimal-pair inequality");
  }
  m.tight = m.lhs == m.rhs;
  m.below_half = m.cos_alpha < Surd(Rational(1, 2));
  return m;
}

Surd cos_alpha_dual(const Quadruple& quad) {
  if (quad.k1 == quad.h0 || quad.k2 == quad.h0) throw Error(ErrorKind::AngleUndefined, "alpha undefined when P or Q is N");
  return corr(dual_biprojection(quad.k1, quad.h0), dual_biprojection(quad.k2, quad.h0));
}

Surd cos_beta_dual(const Quadruple& quad) {
  const auto whole = Subgroup::whole(quad.group_ptr());
  return cos_angle(dual_biprojection(quad.k1, quad.h0), dual_biprojection(quad.k2, quad.h0),
                   dual_biprojection(whole, quad.h0));
}

Surd cos_alpha_vectors(const Quadruple& quad) {
  const auto model = make_coset_model(quad.h0);
  return v_vector(biprojection_of(model, quad.k1)).inner(v_vector(biprojection_of(model, quad.k2)));
}

}  // namespace intangle
