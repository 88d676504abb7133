#include "intangle/two_box.hpp"

#include <stdexcept>

#include "intangle/errors.hpp"
#include "intangle/kernels.hpp"

namespace intangle {

namespace {

void require_pointwise(const TwoBoxElement& x, const char* what) {
  if (x.side() != Side::Pointwise) throw Error(ErrorKind::ModelMismatch, std::string(what) + " needs a pointwise-side element");
}

void require_trivial_base(const TwoBoxElement& x, const char* what) {
  if (x.base_order() != 1) throw Error(ErrorKind::ModelMismatch, std::string(what) + " needs a trivial base");
}

Rational rational_or_throw(const QuadNumber& v, const char* what) {
  if (!v.is_rational()) throw Error(ErrorKind::ModelMismatch, std::string(what) + " is irrational: " + v.to_string());
  return v.rational_part();
}

}  // namespace

TwoBoxElement::TwoBoxElement(GroupPtr group, Side side, std::vector<QuadNumber> values, std::optional<Subgroup> base)
    : group_(std::move(group)), side_(side), values_(std::move(values)), base_(std::move(base)) {
  if (values_.size() != group_->order()) throw Error(ErrorKind::ModelMismatch, "value count differs from group order");
  if (base_) {
    if (side_ == Side::Pointwise) throw Error(ErrorKind::ModelMismatch, "pointwise side has no base");
    if (base_->parent() != group_) throw Error(ErrorKind::ParentMismatch, "base belongs to another group");
    if (base_->is_trivial()) base_.reset();
  }
}

TwoBoxElement TwoBoxElement::indicator(const GroupPtr& group, Side side, const ElementSet& set,
                                       std::optional<Subgroup> base) {
  std::vector<QuadNumber> v(group->order());
  for (Element x : set.elements()) v[x] = Rational(1);
  return TwoBoxElement(group, side, std::move(v), std::move(base));
}

TwoBoxElement TwoBoxElement::identity(const GroupPtr& group, Side side, std::optional<Subgroup> base) {
  if (side == Side::Pointwise) return TwoBoxElement(group, side, std::vector<QuadNumber>(group->order(), Rational(1)));
  const Subgroup h = base ? *base : Subgroup::trivial(group);
  std::vector<QuadNumber> v(group->order());
  for (Element x : h.elements()) v[x] = Rational(1, h.order());
  return TwoBoxElement(group, side, std::move(v), base);
}

TwoBoxElement TwoBoxElement::from_coset_function(const CosetFunction& f) {
  if (!f.model()->base().is_trivial()) throw Error(ErrorKind::ModelMismatch, "two-box model needs a trivial base");
  std::vector<QuadNumber> v;
  for (const auto& r : f.expand()) v.emplace_back(r);
  return TwoBoxElement(f.model()->group_ptr(), Side::Pointwise, std::move(v));
}

std::size_t TwoBoxElement::base_order() const noexcept { return base_ ? base_->order() : 1; }

QuadNumber TwoBoxElement::trace() const {
  if (side_ == Side::Convolution) return values_[0] * QuadNumber(Rational(base_order()));
  QuadNumber sum;
  for (const auto& v : values_) sum += v;
  return sum * QuadNumber(Rational(1, group_->order()));
}

TwoBoxElement TwoBoxElement::adjoint() const {
  if (side_ == Side::Pointwise) return *this;
  std::vector<QuadNumber> v(values_.size());
  for (Element g = 0; g < values_.size(); ++g) v[g] = values_[group_->inverse(g)];
  return TwoBoxElement(group_, side_, std::move(v), base_);
}

QuadNumber TwoBoxElement::inner(const TwoBoxElement& o) const {
  require_compatible(o);
  // Pointwise: (1/|G|) Σ x y. Convolution: (x conv y*)(e) |H0| = |H0| Σ x y.
  QuadNumber sum;
  for (std::size_t g = 0; g < values_.size(); ++g) sum += values_[g] * o.values_[g];
  if (side_ == Side::Pointwise) return sum * QuadNumber(Rational(1, group_->order()));
  return sum * QuadNumber(Rational(base_order()));
}

bool TwoBoxElement::is_projection() const {
  const auto sq = product(*this, *this);
  return sq == *this && adjoint() == *this;
}

ElementSet TwoBoxElement::support() const {
  ElementSet s(group_->order());
  for (Element g = 0; g < values_.size(); ++g) {
    if (!values_[g].is_zero()) s.insert(g);
  }
  return s;
}

TwoBoxElement TwoBoxElement::scaled(const QuadNumber& c) const {
  auto v = values_;
  for (auto& x : v) x *= c;
  return TwoBoxElement(group_, side_, std::move(v), base_);
}

void TwoBoxElement::require_compatible(const TwoBoxElement& o) const {
  if (group_ != o.group_) throw Error(ErrorKind::ModelMismatch, "two-box elements over different groups");
  if (side_ != o.side_) throw Error(ErrorKind::ModelMismatch, "two-box elements on different sides");
  if (base_order() != o.base_order() || (base_ && !(*base_ == *o.base_))) {
    throw Error(ErrorKind::ModelMismatch, "two-box elements over different bases");
  }
}

TwoBoxElement operator+(const TwoBoxElement& a, const TwoBoxElement& b) {
  a.require_compatible(b);
  auto v = a.values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
  return TwoBoxElement(a.group_, a.side_, std::move(v), a.base_);
}

TwoBoxElement operator-(const TwoBoxElement& a, const TwoBoxElement& b) {
  a.require_compatible(b);
  auto v = a.values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.values_[i];
  return TwoBoxElement(a.group_, a.side_, std::move(v), a.base_);
}

bool operator==(const TwoBoxElement& a, const TwoBoxElement& b) {
  return a.group_ == b.group_ && a.side_ == b.side_ && a.base_order() == b.base_order() && a.values_ == b.values_;
}

QuadNumber delta_of(const FiniteGroup& g) { return quad_sqrt(g.order()); }

TwoBoxElement product(const TwoBoxElement& x, const TwoBoxElement& y) {
  x.require_compatible(y);
  if (x.side() == Side::Convolution) {
    return TwoBoxElement(x.group_ptr(), Side::Convolution, convolve(x.group(), x.values(), y.values()), x.base());
  }
  std::vector<QuadNumber> v(x.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = x.values()[i] * y.values()[i];
  return TwoBoxElement(x.group_ptr(), Side::Pointwise, std::move(v));
}

namespace {

template <bool Parallel>
TwoBoxElement coproduct_impl(const TwoBoxElement& x, const TwoBoxElement& y) {
  x.require_compatible(y);
  require_trivial_base(x, "coproduct");
  const QuadNumber delta = delta_of(x.group());
  if (x.side() == Side::Pointwise) {
    auto v = Parallel ? convolve(x.group(), x.values(), y.values()) : convolve_serial(x.group(), x.values(), y.values());
    const QuadNumber scale = QuadNumber(Rational(1)) / delta;
    for (auto& c : v) c *= scale;
    return TwoBoxElement(x.group_ptr(), Side::Pointwise, std::move(v));
  }
  std::vector<QuadNumber> v(x.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = delta * x.values()[i] * y.values()[i];
  return TwoBoxElement(x.group_ptr(), Side::Convolution, std::move(v));
}

}  // namespace

TwoBoxElement coproduct(const TwoBoxElement& x, const TwoBoxElement& y) { return coproduct_impl<true>(x, y); }
TwoBoxElement coproduct_serial(const TwoBoxElement& x, const TwoBoxElement& y) { return coproduct_impl<false>(x, y); }

TwoBoxElement fourier(const TwoBoxElement& x) {
  require_trivial_base(x, "fourier");
  const QuadNumber delta = delta_of(x.group());
  if (x.side() == Side::Pointwise) {
    return TwoBoxElement(x.group_ptr(), Side::Convolution, x.scaled(QuadNumber(Rational(1)) / delta).values());
  }
  return TwoBoxElement(x.group_ptr(), Side::Pointwise, x.scaled(delta).values());
}

bool is_biprojection(const TwoBoxElement& x) {
  if (x.side() != Side::Pointwise) return false;
  for (const auto& v : x.values()) {
    if (!(v.is_zero() || v == QuadNumber(Rational(1)))) return false;
  }
  const auto s = x.support();
  if (!s.contains(0)) return false;
  const auto& g = x.group();
  const auto members = s.elements();
  for (Element a : members) {
    if (!s.contains(g.inverse(a))) return false;
    for (Element b : members) {
      if (!s.contains(g.compose(a, b))) return false;
    }
  }
  return true;
}

TwoBoxElement pointwise_biprojection(const Subgroup& k) {
  return TwoBoxElement::indicator(k.parent(), Side::Pointwise, k.members());
}

TwoBoxElement dual_biprojection(const Subgroup& k, const Subgroup& base) {
  require_same_parent(k, base);
  if (!base.is_subgroup_of(k)) throw Error(ErrorKind::BaseNotContained, "base not inside " + k.describe());
  std::vector<QuadNumber> v(k.group().order());
  for (Element x : k.elements()) v[x] = Rational(1, k.order());
  TwoBoxElement e(k.parent(), Side::Convolution, std::move(v), base);
  if (e.trace() != QuadNumber(Rational(base.order(), k.order()))) throw std::logic_error("dual biprojection trace");
  return e;
}

TwoBoxElement landau_projection(const TwoBoxElement& e_p, const TwoBoxElement& e_q) {
  if (!is_biprojection(e_p) || !is_biprojection(e_q)) {
    throw Error(ErrorKind::NotBiprojection, "Landau projection needs two biprojections");
  }
  const QuadNumber delta = delta_of(e_p.group());
  const QuadNumber tr_pq = product(e_p, e_q).trace();
  const auto co = coproduct(e_p, e_q);
  if (co.trace() != delta * e_p.trace() * e_q.trace()) throw std::logic_error("tr(e_P * e_Q) differs from δ τ_P τ_Q");
  const auto out = co.scaled(QuadNumber(Rational(1)) / (delta * tr_pq));
  if (!out.is_projection()) throw std::logic_error("normalized coproduct is not a projection");
  const auto h = e_p.support().elements();
  const auto k = e_q.support().elements();
  ElementSet hk(e_p.group().order());
  for (Element a : h) {
    for (Element b : k) hk.insert(e_p.group().compose(a, b));
  }
  if (out.support() != hk) throw std::logic_error("normalized coproduct is not the indicator of HK");
  return out;
}

namespace {

TwoBoxElement lattice_op(const TwoBoxElement& e_p, const TwoBoxElement& e_q, bool join) {
  require_pointwise(e_p, "projection lattice");
  e_p.require_compatible(e_q);
  if (!e_p.is_projection() || !e_q.is_projection()) throw Error(ErrorKind::NotProjection, "operand is not a projection");
  const auto a = e_p.support();
  const auto b = e_q.support();
  return TwoBoxElement::indicator(e_p.group_ptr(), Side::Pointwise, join ? a.unite(b) : a.intersect(b));
}

}  // namespace

TwoBoxElement join_projection(const TwoBoxElement& e_p, const TwoBoxElement& e_q) {
  auto out = lattice_op(e_p, e_q, true);
  if (is_biprojection(e_p) && is_biprojection(e_q)) {
    const auto landau = landau_projection(e_p, e_q);
    if (!out.support().is_subset_of(landau.support())) throw std::logic_error("e_P ∨ e_Q not below the Landau projection");
  }
  return out;
}

TwoBoxElement meet_projection(const TwoBoxElement& e_p, const TwoBoxElement& e_q) {
  return lattice_op(e_p, e_q, false);
}

Surd corr(const TwoBoxElement& x, const TwoBoxElement& y) {
  x.require_compatible(y);
  const Rational tx = rational_or_throw(x.trace(), "tr(x)");
  const Rational ty = rational_or_throw(y.trace(), "tr(y)");
  const Rational vx = rational_or_throw(x.inner(x), "<x,x>") - tx * tx;
  const Rational vy = rational_or_throw(y.inner(y), "<y,y>") - ty * ty;
  if (vx == 0 || vy == 0) throw Error(ErrorKind::ZeroVariance, "correlation of a scalar multiple of the identity");
  const Rational cov = rational_or_throw(x.inner(y), "<x,y>") - tx * ty;
  return Surd(cov) / Surd::sqrt(vx * vy);
}

Surd cos_angle(const TwoBoxElement& e_p, const TwoBoxElement& e_q, const TwoBoxElement& jones) {
  const auto a = e_p - jones;
  const auto b = e_q - jones;
  const Rational na = rational_or_throw(a.inner(a), "norm");
  const Rational nb = rational_or_throw(b.inner(b), "norm");
  if (na == 0 || nb == 0) throw Error(ErrorKind::AngleUndefined, "vector e_P − e_1 vanishes");
  return Surd(rational_or_throw(a.inner(b), "inner product")) / Surd::sqrt(na * nb);
}

}  // namespace intangle
