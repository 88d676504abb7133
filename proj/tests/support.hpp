#pragma once

// Hand-rolled generators and brute-force oracles shared by the tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "intangle/group.hpp"
#include "intangle/numeric.hpp"

namespace testing {

using namespace intangle;

/// Small groups with interesting lattices; every one has order <= 24.
inline const std::vector<std::string>& small_specs() {
  static const std::vector<std::string> specs{
      "cyclic:1",      "cyclic:2",      "cyclic:6",       "cyclic:8",       "cyclic:12",
      "dihedral:3",    "dihedral:4",    "dihedral:5",     "dihedral:6",     "symmetric:3",
      "symmetric:4",   "quaternion:2",  "quaternion:3",   "elementary_abelian:2,2",
      "elementary_abelian:2,3",          "elementary_abelian:3,2",          "cyclic:2*symmetric:3",
      "cyclic:2*cyclic:4",               "cyclic:3*cyclic:3"};
  return specs;
}

inline GroupPtr random_group(std::mt19937_64& rng, std::size_t max_order = 24) {
  const auto& specs = small_specs();
  std::uniform_int_distribution<std::size_t> pick(0, specs.size() - 1);
  for (;;) {
    auto g = parse_group_spec(specs[pick(rng)]);
    if (g->order() <= max_order) return g;
  }
}

inline Element random_element(const FiniteGroup& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order() - 1));
  return pick(rng);
}

/// Subgroup generated by up to `max_gens` random elements.
inline Subgroup random_subgroup(const GroupPtr& g, std::mt19937_64& rng, int max_gens = 2) {
  std::uniform_int_distribution<int> count(0, max_gens);
  std::vector<Element> gens;
  for (int i = count(rng); i > 0; --i) gens.push_back(random_element(*g, rng));
  return closure(g, gens);
}

inline Rational random_rational(std::mt19937_64& rng, int bound = 50) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return Rational(num(rng), den(rng));
}

/// Values in Q(sqrt d): half of them rational, the rest with a sqrt d part.
inline std::vector<QuadNumber> random_quad_vector(std::mt19937_64& rng, std::size_t n, std::uint64_t d) {
  std::vector<QuadNumber> out;
  std::bernoulli_distribution zero(0.3), irrational(0.5);
  for (std::size_t i = 0; i < n; ++i) {
    if (zero(rng)) {
      out.emplace_back();
    } else if (irrational(rng) && d > 1) {
      out.emplace_back(random_rational(rng, 9), random_rational(rng, 9), d);
    } else {
      out.emplace_back(random_rational(rng, 9));
    }
  }
  return out;
}

/// Every subset of G closed under the product, by exhaustive search.
/// Finite, nonempty and closed under the product is a subgroup.
inline std::vector<ElementSet> brute_force_subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & 1U)) continue;  // must contain the identity
    bool closed = true;
    for (Element a = 0; a < n && closed; ++a) {
      if (!((mask >> a) & 1U)) continue;
      for (Element b = 0; b < n; ++b) {
        if (((mask >> b) & 1U) && !((mask >> g.compose(a, b)) & 1U)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    ElementSet s(n);
    for (Element a = 0; a < n; ++a) {
      if ((mask >> a) & 1U) s.insert(a);
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// |K1 ∩ K2| by direct membership counting.
inline std::size_t count_common(const Subgroup& a, const Subgroup& b) {
  std::size_t n = 0;
  for (Element x = 0; x < a.group().order(); ++x) n += a.contains(x) && b.contains(x);
  return n;
}

}  // namespace testing
