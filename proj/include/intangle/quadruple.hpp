#pragma once

#include <optional>
#include <string>

#include "intangle/coset_function.hpp"
#include "intangle/group.hpp"
#include "intangle/numeric.hpp"

namespace intangle {

/// (N, P, Q, M) realized as H0 ≤ K1, K2 ≤ G.
struct Quadruple {
  Subgroup h0;
  Subgroup k1;
  Subgroup k2;

  /// Checks the containments; throws BaseNotContained.
  static Quadruple make(Subgroup h0, Subgroup k1, Subgroup k2);

  const FiniteGroup& group() const { return h0.group(); }
  const GroupPtr& group_ptr() const { return h0.parent(); }
  /// [M:N], [P:N], [Q:N], [M:P], [M:Q].
  Rational index_mn() const { return Rational(group().order(), h0.order()); }
  Rational index_pn() const { return Rational(k1.order(), h0.order()); }
  Rational index_qn() const { return Rational(k2.order(), h0.order()); }
  Rational index_mp() const { return Rational(group().order(), k1.order()); }
  Rational index_mq() const { return Rational(group().order(), k2.order()); }
  Subgroup meet() const { return intersection(k1, k2); }
};

/// Trace invariants of a quadruple. Admits abstract (non-group) values,
/// which are assumed to come from an extremal quadruple.
struct TraceData {
  Rational tau;
  Rational tau_p;
  Rational tau_q;
  Rational tr_pq;
  std::optional<Rational> tau_meet;
  std::optional<bool> minimal_pair;

  /// Throws InvalidTraceData naming the first violated bound.
  void validate() const;
  /// Validation message, or empty when the data is admissible.
  std::string violation() const;

  bool p_is_bottom() const { return tau_p == tau; }
  bool q_is_bottom() const { return tau_q == tau; }
  bool p_is_top() const { return tau_p == 1; }
  bool q_is_top() const { return tau_q == 1; }

  friend bool operator==(const TraceData&, const TraceData&) = default;
};

/// τ = |H0|/|G|, τ_P = |K1|/|G|, τ_Q = |K2|/|G|, tr(e_P e_Q) = |K1∩K2|/|G|,
/// and τ_meet = tr_pq. Cross-checked against coset-function traces.
TraceData trace_data(const Quadruple& quad);

/// (tr_pq − τ)/sqrt((τ_P − τ)(τ_Q − τ)). AngleUndefined if P or Q is N.
Surd cos_alpha(const TraceData& td);
/// (tr_pq − τ_Pτ_Q)/sqrt((τ_P − τ_P²)(τ_Q − τ_Q²)). AngleUndefined if P or Q is N or M.
Surd cos_beta(const TraceData& td);

/// For a chain N ⊂ P ⊂ Q ⊂ M: sqrt(([P:N] − 1)/([Q:N] − 1)) and
/// sqrt(([M:Q] − 1)/([M:P] − 1)). Throws NotAChain.
Surd cos_alpha_nested(const Rational& index_pn, const Rational& index_qn);
Surd cos_beta_nested(const Rational& index_mq, const Rational& index_mp);

struct ChainData {
  Rational index_pn;
  Rational index_qn;
  Rational index_mq;
  Rational index_mp;
  std::optional<Surd> cos_alpha;
  std::optional<Surd> cos_beta;
};

struct QuadrupleReport {
  TraceData trace;
  std::optional<Surd> cos_alpha;
  std::optional<Surd> cos_beta;
  /// Presentation only.
  std::optional<double> alpha_radians;
  std::optional<double> beta_radians;
  bool commuting = false;
  bool cocommuting = false;
  bool parallelogram = false;
  std::optional<ChainData> nested;
};

/// Flags come from the trace identities tr_pq = τ, tr_pq = τ_Pτ_Q and
/// τ_Pτ_Q = τ; cosines are attached where defined and the equivalences with
/// the flags are asserted there.
QuadrupleReport classify(const TraceData& td);
/// Adds the group-model checks (commuting ⟺ K1∩K2 = H0, co-commuting ⟺
/// |G||K1∩K2| = |K1||K2|) and chain closed forms when K1 ≤ K2 or K2 ≤ K1.
QuadrupleReport classify(const Quadruple& quad);

struct MiniCheck {
  Rational lhs;  // τ_Pτ_Q / tr_pq
  Rational rhs;  // τ_P + τ_Q − τ
  Surd cos_alpha;
  bool tight = false;
  bool below_half = false;
};

/// Minimal-pair test. Requires minimal_pair = true (NotMinimalPair otherwise)
/// and τ_meet = τ when given. Data failing τ_Pτ_Q/tr_pq ≥ τ_P + τ_Q − τ is
/// rejected with InvalidTraceData; otherwise reports whether cos α < 1/2.
MiniCheck check_mini(const TraceData& td);

/// cos α as the correlation of the dual biprojections (1/|K|)1_K.
Surd cos_alpha_dual(const Quadruple& quad);
/// cos β as the angle of the dual pair against the dual Jones projection.
Surd cos_beta_dual(const Quadruple& quad);
/// cos α as ⟨v_P, v_Q⟩ of the coset-model unit vectors.
Surd cos_alpha_vectors(const Quadruple& quad);

/// Radians for presentation.
double angle_radians(const Surd& cosine);

}  // namespace intangle
