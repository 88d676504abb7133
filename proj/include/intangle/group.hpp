#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace intangle {

using Element = std::uint32_t;

struct GroupLimits {
  std::size_t max_order = 256;
  std::size_t max_nodes = 20000;
};

/// A finite group given by its full multiplication table. Index 0 is always
/// the identity. Immutable once constructed.
class FiniteGroup {
 public:
  /// Validates identity row/column, inverses and associativity; the error
  /// names the first violating element or triple.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table_row_major,
                                const GroupLimits& limits = {});

  /// Range checks only. Used to feed deliberately broken tables to the
  /// verification batteries.
  static FiniteGroup from_table_unchecked(std::size_t order, std::vector<Element> table_row_major);

  std::size_t order() const noexcept { return order_; }
  Element compose(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  Element element_order(Element a) const;

  std::span<const Element> table() const noexcept { return table_; }
  std::vector<std::vector<Element>> table_rows() const;

  /// FNV-1a over the order and the row-major table.
  std::uint64_t table_hash() const noexcept;

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Display name of an element ("e", "(1 2 3)", "r^2 s", ...).
  std::string label(Element a) const;
  void set_labels(std::vector<std::string> labels);
  std::optional<Element> find_label(std::string_view label) const;

  /// For permutation-backed groups, the 0-based image list of each element.
  const std::vector<std::vector<std::uint32_t>>& permutations() const noexcept { return permutations_; }
  void set_permutations(std::vector<std::vector<std::uint32_t>> perms) { permutations_ = std::move(perms); }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint32_t>> permutations_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// First violated group axiom as a human-readable witness, or nullopt.
std::optional<std::string> find_axiom_violation(const FiniteGroup& g);

GroupPtr group_from_table(const std::vector<std::vector<Element>>& rows, const GroupLimits& limits = {});

/// Generated permutation group. Points in the cycle strings are 1-based.
/// Elements are numbered in breadth-first discovery order from the identity.
GroupPtr group_from_permutations(std::span<const std::string> generators, std::size_t degree,
                                 const GroupLimits& limits = {});

/// Parses one cycle-notation string like "(1 2)(3 4 5)" into 0-based images.
std::vector<std::uint32_t> parse_cycles(std::string_view text, std::size_t degree);
std::string format_cycles(std::span<const std::uint32_t> images);

/// Named families. Canonical orderings:
///   cyclic n            : index i is g^i.
///   dihedral n          : index i + n*j is r^i s^j, order 2n.
///   symmetric n         : permutations of {1..n} in lexicographic order of
///                         their one-line notation; product is "apply left
///                         factor first" (a*b)(x) = b(a(x)).
///   elementary_abelian p,k : index = base-p digits, componentwise addition.
///   quaternion n        : dicyclic group of order 4n, index i + 2n*j is a^i x^j
///                         with a^{2n}=1, x^2=a^n, x a x^-1 = a^-1 (n=2 is Q8).
///   direct_product      : index a + |A|*b for (a, b).
GroupPtr named_group(std::string_view family, std::span<const int> params, const GroupLimits& limits = {});
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b, const GroupLimits& limits = {});

/// "cyclic:30", "elementary_abelian:2,3", "cyclic:2*symmetric:3" (direct product).
GroupPtr parse_group_spec(std::string_view spec, const GroupLimits& limits = {});

/// A subset of the element indices of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }
  bool contains(Element e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1U; }
  void insert(Element e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  bool is_subset_of(const ElementSet& other) const noexcept;
  ElementSet intersect(const ElementSet& other) const;
  ElementSet unite(const ElementSet& other) const;
  std::vector<Element> elements() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;
  /// Canonical order: by size, then lexicographic on the sorted elements.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b);

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

class Subgroup {
 public:
  /// Trusted constructor: `members` must already be a subgroup.
  Subgroup(GroupPtr parent, ElementSet members, std::vector<Element> generators);

  static Subgroup trivial(const GroupPtr& g);
  static Subgroup whole(const GroupPtr& g);
  /// Validates closure; throws NotASubgroup naming the offending product.
  static Subgroup from_elements(const GroupPtr& g, std::span<const Element> elements);

  const GroupPtr& parent() const noexcept { return parent_; }
  const FiniteGroup& group() const noexcept { return *parent_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(Element e) const noexcept { return members_.contains(e); }
  const ElementSet& members() const noexcept { return members_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const std::vector<Element>& generators() const noexcept { return generators_; }

  bool is_subgroup_of(const Subgroup& other) const noexcept;
  bool is_trivial() const noexcept { return order() == 1; }
  bool is_whole() const noexcept { return order() == parent_->order(); }

  /// "<(1 2),(1 2 3)>" style description.
  std::string describe() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  ElementSet members_;
  std::vector<Element> elements_;
  std::vector<Element> generators_;
};

/// Smallest subgroup containing `seed`.
Subgroup closure(const GroupPtr& g, std::span<const Element> seed);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// <a ∪ b>.
Subgroup join(const Subgroup& a, const Subgroup& b);

/// HK together with m(g) = #{(h,k) : hk = g}. Post-asserts m = |H∩K| on HK.
struct ProductSet {
  ElementSet elements;
  std::vector<std::size_t> multiplicity;
  std::size_t intersection_order = 0;
};
ProductSet product_set(const Subgroup& h, const Subgroup& k);

/// |H0\G/H0| by orbit marking; post-checked against the permutation-character
/// count (1/|G|) Σ_g Fix(g on G/H0)^2.
std::size_t double_coset_count(const Subgroup& base);
std::size_t double_coset_count_by_characters(const Subgroup& base);

void require_same_parent(const Subgroup& a, const Subgroup& b);

}  // namespace intangle
