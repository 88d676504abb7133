#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "intangle/group.hpp"
#include "intangle/numeric.hpp"

namespace intangle {

/// Left cosets gH0 of a base subgroup, indexed by ascending minimal
/// representative (coset 0 is H0 itself).
class CosetModel {
 public:
  explicit CosetModel(Subgroup base);

  const GroupPtr& group_ptr() const noexcept { return base_.parent(); }
  const FiniteGroup& group() const noexcept { return base_.group(); }
  const Subgroup& base() const noexcept { return base_; }
  std::size_t coset_count() const noexcept { return reps_.size(); }
  std::size_t coset_of(Element g) const noexcept { return coset_of_[g]; }
  Element representative(std::size_t coset) const noexcept { return reps_[coset]; }
  /// |H0| / |G|.
  Rational tau() const;
  /// Cosets contained in K (requires H0 ≤ K).
  std::vector<std::size_t> cosets_in(const Subgroup& k) const;

 private:
  Subgroup base_;
  std::vector<Element> reps_;
  std::vector<std::size_t> coset_of_;
};

using CosetModelPtr = std::shared_ptr<const CosetModel>;
CosetModelPtr make_coset_model(const Subgroup& base);

/// A rational function on G/H0; equivalently a combination of the orthogonal
/// projections u_g e1 u_g*. Product is pointwise, tr f = (|H0|/|G|) Σ values.
class CosetFunction {
 public:
  CosetFunction(CosetModelPtr model, std::vector<Rational> values);

  static CosetFunction constant(const CosetModelPtr& model, const Rational& c);
  /// Indicator of a union of cosets; throws NotProjection if `set` is not one.
  static CosetFunction indicator(const CosetModelPtr& model, const ElementSet& set);

  const CosetModelPtr& model() const noexcept { return model_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const Rational& at(std::size_t coset) const { return values_[coset]; }
  /// Value on the coset containing g.
  const Rational& value_at(Element g) const { return values_[model_->coset_of(g)]; }

  Rational trace() const;
  /// tr(f g); the algebra is commutative and real.
  Rational inner(const CosetFunction& o) const;
  bool is_projection() const;
  /// Elements of G (not cosets) where the function is nonzero.
  ElementSet support() const;
  /// Operator order f ≤ g, i.e. pointwise.
  bool leq(const CosetFunction& o) const;
  /// Sorted multiset of values, one entry per coset.
  std::vector<Rational> spectrum() const;
  /// u_g f u_g*, i.e. x H0 ↦ f(g⁻¹ x H0).
  CosetFunction translate(Element g) const;
  /// One value per element of G.
  std::vector<Rational> expand() const;

  friend CosetFunction operator+(const CosetFunction& a, const CosetFunction& b);
  friend CosetFunction operator-(const CosetFunction& a, const CosetFunction& b);
  friend CosetFunction operator*(const CosetFunction& a, const CosetFunction& b);
  friend CosetFunction operator*(const Rational& c, const CosetFunction& a);
  friend bool operator==(const CosetFunction& a, const CosetFunction& b);

 private:
  void require_same_model(const CosetFunction& o) const;

  CosetModelPtr model_;
  std::vector<Rational> values_;
};

/// e_K: indicator of the cosets inside K. Throws BaseNotContained unless H0 ≤ K.
CosetFunction biprojection_of(const CosetModelPtr& model, const Subgroup& k);
/// e1 = e_{H0}.
CosetFunction jones_projection(const CosetModelPtr& model);
/// u_g e1 u_g*.
CosetFunction coset_projection(const CosetModelPtr& model, Element g);

/// scale · direction, kept as a rational vector times one surd so norms and
/// inner products stay exact.
struct UnitVector {
  CosetFunction direction;
  Surd scale;

  Surd inner(const UnitVector& o) const;
};

/// v_P = (e_P − e1)/‖e_P − e1‖₂ with ‖e_P − e1‖₂² = τ_P − τ.
/// Throws AngleUndefined when e_P = e1.
UnitVector v_vector(const CosetFunction& e_p);

/// p(gH0) = #{(i, j) : λ_i μ_j H0 = gH0}, λ over representatives of H0-cosets in
/// K1, μ over those in K2. q swaps the roles (μ_j λ_i).
CosetFunction p_from_bases(const CosetModelPtr& model, std::span<const Element> lambdas,
                           std::span<const Element> mus);
CosetFunction p_element(const CosetModelPtr& model, const Subgroup& k1, const Subgroup& k2);
CosetFunction q_element(const CosetModelPtr& model, const Subgroup& k1, const Subgroup& k2);

/// (|K1|/|H0|)(|K2|/|H0|)(|H0|/|G|), the common trace of p and q.
Rational trq_value(const CosetModelPtr& model, const Subgroup& k1, const Subgroup& k2);

/// q(g) = p(g⁻¹) for every g ∈ G, the model form of JpJ = q.
bool inversion_relation_holds(const CosetFunction& p, const CosetFunction& q);

/// Minimal representatives of the H0-cosets inside K.
std::vector<Element> minimal_representatives(const CosetModel& model, const Subgroup& k);

}  // namespace intangle
