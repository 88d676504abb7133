#include "intangle/group.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "intangle/errors.hpp"

namespace intangle {

namespace {

std::string triple(Element a, Element b, Element c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

void check_cap(std::size_t order, const GroupLimits& limits) {
  if (order > limits.max_order) {
    throw Error(ErrorKind::CapExceeded,
                "group order " + std::to_string(order) + " exceeds cap " + std::to_string(limits.max_order));
  }
}

using Perm = std::vector<std::uint32_t>;

// (a*b)(x) = b(a(x)): apply the left factor first.
Perm perm_product(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

GroupPtr group_from_perm_list(std::vector<Perm> perms, std::string name) {
  const std::size_t n = perms.size();
  std::map<Perm, Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(perms[i], static_cast<Element>(i));
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(perm_product(perms[a], perms[b]));
  }
  auto g = FiniteGroup::from_table_unchecked(n, std::move(table));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : perms) labels.push_back(format_cycles(p));
  g.set_labels(std::move(labels));
  g.set_permutations(std::move(perms));
  g.set_name(std::move(name));
  return std::make_shared<const FiniteGroup>(std::move(g));
}

GroupPtr make_from_law(std::size_t n, const std::function<Element(Element, Element)>& law,
                       std::vector<std::string> labels, std::string name) {
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) table[a * n + b] = law(a, b);
  }
  auto g = FiniteGroup::from_table_unchecked(n, std::move(table));
  g.set_labels(std::move(labels));
  g.set_name(std::move(name));
  return std::make_shared<const FiniteGroup>(std::move(g));
}

std::string power_label(const std::string& sym, std::size_t i) {
  if (i == 0) return "";
  if (i == 1) return sym;
  return sym + "^" + std::to_string(i);
}

std::string join_labels(std::string a, const std::string& b) {
  if (a.empty() && b.empty()) return "e";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + " " + b;
}

}  // namespace

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup FiniteGroup::from_table_unchecked(std::size_t order, std::vector<Element> table) {
  if (order == 0) throw Error(ErrorKind::BadTable, "order must be positive");
  if (table.size() != order * order) {
    throw Error(ErrorKind::BadTable, "table has " + std::to_string(table.size()) + " entries, expected " +
                                         std::to_string(order * order));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= order) {
      throw Error(ErrorKind::BadTable, "entry [" + std::to_string(i / order) + "][" + std::to_string(i % order) +
                                           "] = " + std::to_string(table[i]) + " out of range");
    }
  }
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.inverse_.assign(order, 0);
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) {
      if (g.compose(a, b) == 0 && g.compose(b, a) == 0) {
        g.inverse_[a] = b;
        break;
      }
    }
  }
  return g;
}

std::optional<std::string> find_axiom_violation(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    if (g.compose(0, a) != a || g.compose(a, 0) != a) {
      return "BadIdentity: element " + std::to_string(a) + " (0*a = " + std::to_string(g.compose(0, a)) +
             ", a*0 = " + std::to_string(g.compose(a, 0)) + ")";
    }
  }
  for (Element a = 0; a < n; ++a) {
    const Element b = g.inverse(a);
    if (g.compose(a, b) != 0 || g.compose(b, a) != 0) {
      return "NoInverse: element " + std::to_string(a);
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.compose(a, b);
      for (Element c = 0; c < n; ++c) {
        if (g.compose(ab, c) != g.compose(a, g.compose(b, c))) {
          return "NotAssociative: triple " + triple(a, b, c);
        }
      }
    }
  }
  return std::nullopt;
}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Element> table, const GroupLimits& limits) {
  check_cap(order, limits);
  FiniteGroup g = from_table_unchecked(order, std::move(table));
  if (auto bad = find_axiom_violation(g)) {
    const auto colon = bad->find(':');
    const std::string kind = bad->substr(0, colon);
    const std::string msg = bad->substr(colon + 2);
    if (kind == "BadIdentity") throw Error(ErrorKind::BadIdentity, msg);
    if (kind == "NoInverse") throw Error(ErrorKind::NoInverse, msg);
    throw Error(ErrorKind::NotAssociative, msg);
  }
  return g;
}

Element FiniteGroup::element_order(Element a) const {
  Element x = a;
  Element k = 1;
  while (x != 0) {
    x = compose(x, a);
    ++k;
    if (k > order_) throw Error(ErrorKind::BadTable, "element " + std::to_string(a) + " has no finite order");
  }
  return k;
}

std::vector<std::vector<Element>> FiniteGroup::table_rows() const {
  std::vector<std::vector<Element>> rows(order_);
  for (std::size_t a = 0; a < order_; ++a) rows[a].assign(table_.begin() + a * order_, table_.begin() + (a + 1) * order_);
  return rows;
}

std::uint64_t FiniteGroup::table_hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (16 * i)) & 0xFFFF;
      h *= 1099511628211ULL;
    }
  };
  mix(order_);
  for (Element e : table_) mix(e);
  return h;
}

std::string FiniteGroup::label(Element a) const {
  if (a < labels_.size()) return labels_[a];
  return a == 0 ? "e" : "g" + std::to_string(a);
}

void FiniteGroup::set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

std::optional<Element> FiniteGroup::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Element>(i);
  }
  return std::nullopt;
}

GroupPtr group_from_table(const std::vector<std::vector<Element>>& rows, const GroupLimits& limits) {
  const std::size_t n = rows.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) {
      throw Error(ErrorKind::BadTable, "row " + std::to_string(a) + " has " + std::to_string(rows[a].size()) +
                                           " entries, expected " + std::to_string(n));
    }
    flat.insert(flat.end(), rows[a].begin(), rows[a].end());
  }
  auto g = FiniteGroup::from_table(n, std::move(flat), limits);
  g.set_name("table(" + std::to_string(n) + ")");
  return std::make_shared<const FiniteGroup>(std::move(g));
}

// ---------------------------------------------------------------- permutations

std::vector<std::uint32_t> parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0U);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorKind::BadCycleSyntax, "\"" + std::string(text) + "\": " + why);
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw fail("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') throw fail("expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i == text.size()) throw fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw fail("unexpected character '" + std::string(1, text[i]) + "'");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > 1000000) throw fail("point too large");
        ++i;
      }
      if (value < 1 || value > degree) throw fail("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      if (used[value - 1]) throw fail("point " + std::to_string(value) + " repeated");
      used[value - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(value - 1));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return images;
}

std::string format_cycles(std::span<const std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  std::string out;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start] || images[start] == start) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x + 1);
      first = false;
      x = images[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

GroupPtr group_from_permutations(std::span<const std::string> generators, std::size_t degree,
                                 const GroupLimits& limits) {
  if (degree == 0) throw Error(ErrorKind::BadCycleSyntax, "degree must be positive");
  std::vector<Perm> gens;
  for (const auto& s : generators) gens.push_back(parse_cycles(s, degree));
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0U);
  std::vector<Perm> elements{id};
  std::map<Perm, Element> seen{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : gens) {
      Perm next = perm_product(elements[head], s);
      if (seen.contains(next)) continue;
      if (elements.size() + 1 > limits.max_order) {
        throw Error(ErrorKind::DegreeExceeded, "generated group exceeds order cap " + std::to_string(limits.max_order));
      }
      seen.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  std::string name = "perm(";
  for (std::size_t i = 0; i < generators.size(); ++i) name += (i ? "," : "") + generators[i];
  name += ")";
  return group_from_perm_list(std::move(elements), name);
}

// ---------------------------------------------------------------- named families

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b, const GroupLimits& limits) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  check_cap(na * nb, limits);
  std::vector<std::string> labels;
  for (Element j = 0; j < nb; ++j) {
    for (Element i = 0; i < na; ++i) {
      if (i == 0 && j == 0) labels.push_back("e");
      else labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
    }
  }
  return make_from_law(
      na * nb,
      [&](Element x, Element y) {
        const Element xa = x % na, xb = x / na, ya = y % na, yb = y / na;
        return static_cast<Element>(a.compose(xa, ya) + na * b.compose(xb, yb));
      },
      std::move(labels), a.name() + "x" + b.name());
}

GroupPtr named_group(std::string_view family, std::span<const int> params, const GroupLimits& limits) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(ErrorKind::UnsupportedParams,
                  std::string(family) + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  auto positive = [&](int v, int min) {
    if (v < min) throw Error(ErrorKind::UnsupportedParams, std::string(family) + " parameter " + std::to_string(v) + " too small");
    return static_cast<std::size_t>(v);
  };

  if (family == "cyclic") {
    need(1);
    const std::size_t n = positive(params[0], 1);
    check_cap(n, limits);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : power_label("g", i));
    return make_from_law(n, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); }, labels,
                         "Z" + std::to_string(n));
  }
  if (family == "dihedral") {
    need(1);
    const std::size_t n = positive(params[0], 1);
    check_cap(2 * n, limits);
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t i = 0; i < n; ++i) labels.push_back(join_labels(power_label("r", i), power_label("s", j)));
    }
    return make_from_law(
        2 * n,
        [n](Element x, Element y) {
          const std::size_t i = x % n, j = x / n, k = y % n, l = y / n;
          const std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
          return static_cast<Element>(rot + n * ((j + l) % 2));
        },
        labels, "D" + std::to_string(n));
  }
  if (family == "symmetric") {
    need(1);
    const std::size_t n = positive(params[0], 1);
    if (n > 6) throw Error(ErrorKind::UnsupportedParams, "symmetric n must be <= 6");
    std::size_t order = 1;
    for (std::size_t i = 2; i <= n; ++i) order *= i;
    check_cap(order, limits);
    std::vector<Perm> perms;
    Perm p(n);
    std::iota(p.begin(), p.end(), 0U);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return group_from_perm_list(std::move(perms), "S" + std::to_string(n));
  }
  if (family == "elementary_abelian") {
    need(2);
    const std::size_t p = positive(params[0], 2);
    const std::size_t k = positive(params[1], 1);
    for (std::size_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) throw Error(ErrorKind::UnsupportedParams, "elementary_abelian p must be prime");
    }
    std::size_t n = 1;
    for (std::size_t i = 0; i < k; ++i) {
      n *= p;
      check_cap(n, limits);
    }
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < n; ++x) {
      std::string s;
      std::size_t v = x;
      for (std::size_t i = 0; i < k; ++i) {
        s += std::to_string(v % p);
        v /= p;
      }
      labels.push_back(x == 0 ? "e" : s);
    }
    return make_from_law(
        n,
        [p, k](Element a, Element b) {
          std::size_t out = 0, scale = 1;
          for (std::size_t i = 0; i < k; ++i) {
            out += ((a % p + b % p) % p) * scale;
            a /= static_cast<Element>(p);
            b /= static_cast<Element>(p);
            scale *= p;
          }
          return static_cast<Element>(out);
        },
        labels, "E" + std::to_string(p) + "^" + std::to_string(k));
  }
  if (family == "quaternion") {
    need(1);
    const std::size_t n = positive(params[0], 2);
    const std::size_t m = 2 * n;
    check_cap(4 * n, limits);
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t i = 0; i < m; ++i) labels.push_back(join_labels(power_label("a", i), power_label("x", j)));
    }
    return make_from_law(
        4 * n,
        [n, m](Element x, Element y) {
          const std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
          if (j == 0) return static_cast<Element>((i + k) % m + m * l);
          // x a^k = a^-k x
          const std::size_t rot = (i + m - k) % m;
          if (l == 0) return static_cast<Element>(rot + m);
          return static_cast<Element>((rot + n) % m);  // x^2 = a^n
        },
        labels, n == 2 ? "Q8" : "Dic" + std::to_string(n));
  }
  throw Error(ErrorKind::UnsupportedParams, "unknown family \"" + std::string(family) + "\"");
}

GroupPtr parse_group_spec(std::string_view spec, const GroupLimits& limits) {
  const auto star = spec.find('*');
  if (star != std::string_view::npos) {
    auto a = parse_group_spec(spec.substr(0, star), limits);
    auto b = parse_group_spec(spec.substr(star + 1), limits);
    return direct_product(*a, *b, limits);
  }
  const auto colon = spec.find(':');
  const std::string family(spec.substr(0, colon));
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    std::stringstream ss{std::string(spec.substr(colon + 1))};
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        params.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Error(ErrorKind::UnsupportedParams, "bad parameter \"" + tok + "\" in \"" + std::string(spec) + "\"");
      }
    }
  }
  return named_group(family, params, limits);
}

// ---------------------------------------------------------------- ElementSet

std::size_t ElementSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
  return out;
}

ElementSet ElementSet::unite(const ElementSet& other) const {
  ElementSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
  return out;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<Element>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t seed = universe_;
  for (auto w : words_) seed ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b9 + (seed << 6) + (seed >> 2);
  return seed;
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(GroupPtr parent, ElementSet members, std::vector<Element> generators)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  elements_ = members_.elements();
}

Subgroup Subgroup::trivial(const GroupPtr& g) {
  ElementSet s(g->order());
  s.insert(0);
  return Subgroup(g, std::move(s), {});
}

Subgroup Subgroup::whole(const GroupPtr& g) {
  std::vector<Element> all(g->order());
  std::iota(all.begin(), all.end(), Element{0});
  return closure(g, all);
}

Subgroup Subgroup::from_elements(const GroupPtr& g, std::span<const Element> elements) {
  ElementSet s(g->order());
  for (Element e : elements) {
    if (e >= g->order()) throw Error(ErrorKind::NotASubgroup, "element " + std::to_string(e) + " out of range");
    s.insert(e);
  }
  if (!s.contains(0)) throw Error(ErrorKind::NotASubgroup, "identity missing");
  const auto members = s.elements();
  for (Element a : members) {
    for (Element b : members) {
      if (!s.contains(g->compose(a, b))) {
        throw Error(ErrorKind::NotASubgroup, "product " + std::to_string(a) + "*" + std::to_string(b) + " escapes the set");
      }
    }
  }
  return Subgroup(g, std::move(s), std::vector<Element>(elements.begin(), elements.end()));
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const noexcept {
  return parent_ == other.parent_ && members_.is_subset_of(other.members_);
}

std::string Subgroup::describe() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) out += (i ? "," : "") + parent_->label(generators_[i]);
  out += "> order " + std::to_string(order());
  return out;
}

Subgroup closure(const GroupPtr& g, std::span<const Element> seed) {
  ElementSet members(g->order());
  members.insert(0);
  std::vector<Element> gens;
  for (Element s : seed) {
    if (s != 0 && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  }
  std::vector<Element> list{0};
  for (std::size_t head = 0; head < list.size(); ++head) {
    for (Element s : gens) {
      const Element next = g->compose(list[head], s);
      if (!members.contains(next)) {
        members.insert(next);
        list.push_back(next);
      }
    }
  }
  return Subgroup(g, std::move(members), std::move(gens));
}

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw Error(ErrorKind::ParentMismatch, "subgroups belong to different groups");
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  const auto inter = a.members().intersect(b.members());
  return closure(a.parent(), inter.elements());
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  std::vector<Element> seed = a.generators().empty() && !a.is_trivial() ? a.elements() : a.generators();
  const auto& bg = b.generators().empty() && !b.is_trivial() ? b.elements() : b.generators();
  seed.insert(seed.end(), bg.begin(), bg.end());
  return closure(a.parent(), seed);
}

ProductSet product_set(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const auto& g = h.group();
  ProductSet out{ElementSet(g.order()), std::vector<std::size_t>(g.order(), 0), 0};
  for (Element x : h.elements()) {
    for (Element y : k.elements()) {
      const Element p = g.compose(x, y);
      out.elements.insert(p);
      ++out.multiplicity[p];
    }
  }
  out.intersection_order = h.members().intersect(k.members()).size();
  for (Element x = 0; x < g.order(); ++x) {
    const std::size_t expected = out.elements.contains(x) ? out.intersection_order : 0;
    if (out.multiplicity[x] != expected) {
      throw std::logic_error("product multiplicity is not |H∩K| at element " + std::to_string(x));
    }
  }
  return out;
}

std::size_t double_coset_count_by_characters(const Subgroup& base) {
  const auto& g = base.group();
  std::size_t total = 0;
  for (Element x = 0; x < g.order(); ++x) {
    // left cosets yH0 fixed by x: y^-1 x y ∈ H0
    std::size_t fixing = 0;
    for (Element y = 0; y < g.order(); ++y) {
      if (base.contains(g.compose(g.compose(g.inverse(y), x), y))) ++fixing;
    }
    const std::size_t fix = fixing / base.order();
    total += fix * fix;
  }
  return total / g.order();
}

std::size_t double_coset_count(const Subgroup& base) {
  const auto& g = base.group();
  std::vector<bool> seen(g.order(), false);
  std::size_t count = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++count;
    for (Element a : base.elements()) {
      for (Element b : base.elements()) seen[g.compose(g.compose(a, x), b)] = true;
    }
  }
  if (count != double_coset_count_by_characters(base)) {
    throw std::logic_error("double coset count disagrees with permutation-character count");
  }
  return count;
}

}  // namespace intangle
