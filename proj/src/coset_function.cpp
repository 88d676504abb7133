#include "intangle/coset_function.hpp"

#include <algorithm>
#include <stdexcept>

#include "intangle/errors.hpp"

namespace intangle {

CosetModel::CosetModel(Subgroup base) : base_(std::move(base)) {
  const auto& g = base_.group();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  coset_of_.assign(g.order(), unset);
  for (Element x = 0; x < g.order(); ++x) {
    if (coset_of_[x] != unset) continue;
    const std::size_t c = reps_.size();
    reps_.push_back(x);
    for (Element h : base_.elements()) coset_of_[g.compose(x, h)] = c;
  }
}

Rational CosetModel::tau() const { return Rational(base_.order(), group().order()); }

std::vector<std::size_t> CosetModel::cosets_in(const Subgroup& k) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < reps_.size(); ++c) {
    if (k.contains(reps_[c])) out.push_back(c);
  }
  return out;
}

CosetModelPtr make_coset_model(const Subgroup& base) { return std::make_shared<const CosetModel>(base); }

std::vector<Element> minimal_representatives(const CosetModel& model, const Subgroup& k) {
  std::vector<Element> out;
  for (std::size_t c : model.cosets_in(k)) out.push_back(model.representative(c));
  return out;
}

// ---------------------------------------------------------------- CosetFunction

CosetFunction::CosetFunction(CosetModelPtr model, std::vector<Rational> values)
    : model_(std::move(model)), values_(std::move(values)) {
  if (values_.size() != model_->coset_count()) {
    throw Error(ErrorKind::ModelMismatch, "coset function has " + std::to_string(values_.size()) +
                                              " values for " + std::to_string(model_->coset_count()) + " cosets");
  }
}

CosetFunction CosetFunction::constant(const CosetModelPtr& model, const Rational& c) {
  return CosetFunction(model, std::vector<Rational>(model->coset_count(), c));
}

CosetFunction CosetFunction::indicator(const CosetModelPtr& model, const ElementSet& set) {
  std::vector<Rational> values(model->coset_count(), Rational(0));
  for (Element x : set.elements()) values[model->coset_of(x)] = 1;
  CosetFunction f(model, std::move(values));
  if (f.support() != set) throw Error(ErrorKind::NotProjection, "set is not a union of H0-cosets");
  return f;
}

void CosetFunction::require_same_model(const CosetFunction& o) const {
  if (model_ != o.model_ &&
      !(model_->base() == o.model_->base())) {
    throw Error(ErrorKind::ModelMismatch, "coset functions over different models");
  }
}

Rational CosetFunction::trace() const {
  Rational sum = 0;
  for (const auto& v : values_) sum += v;
  return sum * model_->tau();
}

Rational CosetFunction::inner(const CosetFunction& o) const { return (*this * o).trace(); }

bool CosetFunction::is_projection() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v == 0 || v == 1; });
}

ElementSet CosetFunction::support() const {
  const auto& g = model_->group();
  ElementSet s(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    if (values_[model_->coset_of(x)] != 0) s.insert(x);
  }
  return s;
}

bool CosetFunction::leq(const CosetFunction& o) const {
  require_same_model(o);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > o.values_[i]) return false;
  }
  return true;
}

std::vector<Rational> CosetFunction::spectrum() const {
  auto out = values_;
  std::sort(out.begin(), out.end());
  return out;
}

CosetFunction CosetFunction::translate(Element g) const {
  const auto& grp = model_->group();
  std::vector<Rational> out(values_.size());
  const Element ginv = grp.inverse(g);
  for (std::size_t c = 0; c < values_.size(); ++c) {
    out[c] = values_[model_->coset_of(grp.compose(ginv, model_->representative(c)))];
  }
  return CosetFunction(model_, std::move(out));
}

std::vector<Rational> CosetFunction::expand() const {
  const auto& g = model_->group();
  std::vector<Rational> out(g.order());
  for (Element x = 0; x < g.order(); ++x) out[x] = values_[model_->coset_of(x)];
  return out;
}

CosetFunction operator+(const CosetFunction& a, const CosetFunction& b) {
  a.require_same_model(b);
  auto v = a.values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
  return CosetFunction(a.model_, std::move(v));
}

CosetFunction operator-(const CosetFunction& a, const CosetFunction& b) {
  a.require_same_model(b);
  auto v = a.values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.values_[i];
  return CosetFunction(a.model_, std::move(v));
}

CosetFunction operator*(const CosetFunction& a, const CosetFunction& b) {
  a.require_same_model(b);
  auto v = a.values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= b.values_[i];
  return CosetFunction(a.model_, std::move(v));
}

CosetFunction operator*(const Rational& c, const CosetFunction& a) {
  auto v = a.values_;
  for (auto& x : v) x *= c;
  return CosetFunction(a.model_, std::move(v));
}

bool operator==(const CosetFunction& a, const CosetFunction& b) {
  return a.model_->base() == b.model_->base() && a.values_ == b.values_;
}

// ---------------------------------------------------------------- constructors

CosetFunction biprojection_of(const CosetModelPtr& model, const Subgroup& k) {
  require_same_parent(model->base(), k);
  if (!model->base().is_subgroup_of(k)) {
    throw Error(ErrorKind::BaseNotContained, "base " + model->base().describe() + " not inside " + k.describe());
  }
  std::vector<Rational> values(model->coset_count(), Rational(0));
  for (std::size_t c : model->cosets_in(k)) values[c] = 1;
  CosetFunction e(model, std::move(values));
  if (e.trace() != Rational(k.order(), model->group().order())) {
    throw std::logic_error("biprojection trace is not |K|/|G|");
  }
  return e;
}

CosetFunction jones_projection(const CosetModelPtr& model) { return biprojection_of(model, model->base()); }

CosetFunction coset_projection(const CosetModelPtr& model, Element g) {
  std::vector<Rational> values(model->coset_count(), Rational(0));
  values[model->coset_of(g)] = 1;
  return CosetFunction(model, std::move(values));
}

Surd UnitVector::inner(const UnitVector& o) const {
  return scale * o.scale * Surd(direction.inner(o.direction));
}

UnitVector v_vector(const CosetFunction& e_p) {
  const auto e1 = jones_projection(e_p.model());
  auto diff = e_p - e1;
  const Rational norm2 = diff.inner(diff);
  if (norm2 == 0) throw Error(ErrorKind::AngleUndefined, "v_P is undefined for P = N");
  if (norm2 != e_p.trace() - e1.trace()) throw std::logic_error("‖e_P − e1‖² differs from τ_P − τ");
  UnitVector v{std::move(diff), Surd(1) / Surd::sqrt(norm2)};
  if (v.inner(v) != Surd(1)) throw std::logic_error("v_P is not a unit vector");
  return v;
}

// ---------------------------------------------------------------- p and q

CosetFunction p_from_bases(const CosetModelPtr& model, std::span<const Element> lambdas,
                           std::span<const Element> mus) {
  const auto& g = model->group();
  std::vector<std::size_t> counts(model->coset_count(), 0);
  for (Element l : lambdas) {
    for (Element m : mus) ++counts[model->coset_of(g.compose(l, m))];
  }
  return CosetFunction(model, std::vector<Rational>(counts.begin(), counts.end()));
}

CosetFunction p_element(const CosetModelPtr& model, const Subgroup& k1, const Subgroup& k2) {
  (void)biprojection_of(model, k1);
  (void)biprojection_of(model, k2);
  const auto l = minimal_representatives(*model, k1);
  const auto m = minimal_representatives(*model, k2);
  auto p = p_from_bases(model, l, m);
  if (p.trace() != trq_value(model, k1, k2)) throw std::logic_error("tr(p) differs from the closed form");
  return p;
}

CosetFunction q_element(const CosetModelPtr& model, const Subgroup& k1, const Subgroup& k2) {
  (void)biprojection_of(model, k1);
  (void)biprojection_of(model, k2);
  const auto l = minimal_representatives(*model, k1);
  const auto m = minimal_representatives(*model, k2);
  auto q = p_from_bases(model, m, l);
  if (q.trace() != trq_value(model, k1, k2)) throw std::logic_error("tr(q) differs from the closed form");
  return q;
}

Rational trq_value(const CosetModelPtr& model, const Subgroup& k1, const Subgroup& k2) {
  const auto h = model->base().order();
  return Rational(k1.order(), h) * Rational(k2.order(), h) * model->tau();
}

bool inversion_relation_holds(const CosetFunction& p, const CosetFunction& q) {
  const auto& g = p.model()->group();
  for (Element x = 0; x < g.order(); ++x) {
    if (q.value_at(x) != p.value_at(g.inverse(x))) return false;
  }
  return true;
}

}  // namespace intangle
