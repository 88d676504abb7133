#pragma once

#include <optional>
#include <vector>

#include "intangle/coset_function.hpp"
#include "intangle/group.hpp"
#include "intangle/numeric.hpp"

namespace intangle {

enum class Side { Pointwise, Convolution };

/// A function on G with values in Q(sqrt|G|).
///
/// Pointwise side: product is pointwise, tr x = (1/|G|) Σ x(g), x* = x.
/// Convolution side over a base H0: product is group convolution,
/// tr x = |H0| x(e), x*(g) = x(g⁻¹), unit (1/|H0|) 1_{H0}. With H0 trivial this
/// is the Fourier dual of the pointwise side.
class TwoBoxElement {
 public:
  TwoBoxElement(GroupPtr group, Side side, std::vector<QuadNumber> values,
                std::optional<Subgroup> base = std::nullopt);

  static TwoBoxElement indicator(const GroupPtr& group, Side side, const ElementSet& set,
                                 std::optional<Subgroup> base = std::nullopt);
  static TwoBoxElement identity(const GroupPtr& group, Side side, std::optional<Subgroup> base = std::nullopt);
  /// Pointwise-side copy of a coset function over the trivial base.
  static TwoBoxElement from_coset_function(const CosetFunction& f);

  const GroupPtr& group_ptr() const noexcept { return group_; }
  const FiniteGroup& group() const noexcept { return *group_; }
  Side side() const noexcept { return side_; }
  /// |H0| on the convolution side, 1 on the pointwise side.
  std::size_t base_order() const noexcept;
  const std::optional<Subgroup>& base() const noexcept { return base_; }
  const std::vector<QuadNumber>& values() const noexcept { return values_; }
  const QuadNumber& at(Element g) const { return values_[g]; }

  QuadNumber trace() const;
  TwoBoxElement adjoint() const;
  /// tr(x y*).
  QuadNumber inner(const TwoBoxElement& o) const;
  bool is_projection() const;
  ElementSet support() const;

  TwoBoxElement scaled(const QuadNumber& c) const;
  friend TwoBoxElement operator+(const TwoBoxElement& a, const TwoBoxElement& b);
  friend TwoBoxElement operator-(const TwoBoxElement& a, const TwoBoxElement& b);
  friend bool operator==(const TwoBoxElement& a, const TwoBoxElement& b);

  void require_compatible(const TwoBoxElement& o) const;

 private:
  GroupPtr group_;
  Side side_;
  std::vector<QuadNumber> values_;
  std::optional<Subgroup> base_;
};

/// δ = sqrt|G| as an element of Q(sqrt|G|).
QuadNumber delta_of(const FiniteGroup& g);

/// The algebra product of the element's side.
TwoBoxElement product(const TwoBoxElement& x, const TwoBoxElement& y);
/// Pointwise side: δ⁻¹ (x conv y). Convolution side (trivial base): δ x·y.
TwoBoxElement coproduct(const TwoBoxElement& x, const TwoBoxElement& y);
/// Serial-kernel variant of coproduct, used as the reference in tests.
TwoBoxElement coproduct_serial(const TwoBoxElement& x, const TwoBoxElement& y);
/// Pointwise → convolution: δ⁻¹ x. Convolution → pointwise: δ y. Needs trivial base.
TwoBoxElement fourier(const TwoBoxElement& x);

/// Pointwise-side projection whose support contains e and is closed under
/// products and inverses, i.e. the indicator of a subgroup.
bool is_biprojection(const TwoBoxElement& x);
TwoBoxElement pointwise_biprojection(const Subgroup& k);
/// (1/|K|) 1_K on the convolution side over `base`; trace |H0|/|K|.
TwoBoxElement dual_biprojection(const Subgroup& k, const Subgroup& base);

/// (1/(δ tr(e_P e_Q))) e_P * e_Q. Asserted to be the projection 1_{HK}.
/// Throws NotBiprojection.
TwoBoxElement landau_projection(const TwoBoxElement& e_p, const TwoBoxElement& e_q);
/// Supremum and infimum of two pointwise-side projections. Throws
/// NotProjection. For two biprojections the join is asserted to lie below
/// the Landau projection.
TwoBoxElement join_projection(const TwoBoxElement& e_p, const TwoBoxElement& e_q);
TwoBoxElement meet_projection(const TwoBoxElement& e_p, const TwoBoxElement& e_q);

/// Correlation of the centered, normalized x and y. Inner products must be
/// rational. Throws ZeroVariance when x or y is a multiple of the identity.
Surd corr(const TwoBoxElement& x, const TwoBoxElement& y);

/// ⟨e_P − j, e_Q − j⟩ / (‖e_P − j‖ ‖e_Q − j‖) for a reference projection j.
/// Throws AngleUndefined when either difference vanishes.
Surd cos_angle(const TwoBoxElement& e_p, const TwoBoxElement& e_q, const TwoBoxElement& jones);

}  // namespace intangle
