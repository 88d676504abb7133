#include "intangle/bounds.hpp"

#include <cmath>
#include <map>

#include "intangle/errors.hpp"
#include "intangle/kernels.hpp"

namespace intangle {

std::optional<BigInt> kissing_reference(std::size_t n) {
  // External literature constants (Conway–Sloane tables); not derived here.
  static const std::map<std::size_t, BigInt> table{{1, 2}, {2, 6}, {3, 12}, {4, 24}, {8, 240}, {24, 196560}};
  auto it = table.find(n);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

BigInt recursion_bound(const Rational& x) {
  if (x < 4) return 2;
  return ceil_pow(3, x) * recursion_bound(x / 2);
}

Rational abelian_recursion_bound(const Rational& x) {
  if (x < 4) return 2;
  return x * abelian_recursion_bound(x / 2);
}

double abelian_bound_stated(const Rational& x) {
  const double d = to_double(x);
  return std::pow(d / std::sqrt(2.0), std::log2(d) / 2.0);
}

double abelian_bound_proof_variant(const Rational& x) {
  const double d = to_double(x);
  return std::pow(d / std::sqrt(2.0), std::log2(d / 2.0));
}

bool BoundReport::asserted_hold() const {
  for (const auto& c : checks) {
    if (c.asserted && !c.holds) return false;
  }
  return true;
}

namespace {

std::string str(const BigInt& v) { return v.str(); }

}  // namespace

BoundReport bound_report(const Rational& index, std::size_t n, std::optional<LatticeStats> stats) {
  if (index < 2) throw Error(ErrorKind::IndexTooSmall, "index " + to_string(index) + " < 2");
  BoundReport r;
  r.index = index;
  r.n = n;
  r.packing_bound = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(n)) - 1;
  r.kissing = kissing_reference(n);
  r.m_bound = ceil_pow(3, index);
  r.recursion = recursion_bound(index);
  r.whole_bound = ceil_pow(9, index);
  r.abelian_recursion = abelian_recursion_bound(index);
  r.abelian_stated = abelian_bound_stated(index);
  r.abelian_proof_variant = abelian_bound_proof_variant(index);
  r.stats = stats;

  r.checks.push_back({"recursion <= whole", str(r.recursion), str(r.whole_bound), r.recursion <= r.whole_bound, true});
  if (stats) {
    const BigInt atoms(stats->atoms);
    const BigInt size(stats->lattice_size);
    r.checks.push_back({"atoms <= 3^n - 1", str(atoms), str(r.packing_bound), atoms <= r.packing_bound, true});
    r.checks.push_back({"atoms <= n", str(atoms), std::to_string(n), stats->atoms <= n, true});
    r.checks.push_back({"atoms <= 3^index", str(atoms), str(r.m_bound), atoms <= r.m_bound, true});
    r.checks.push_back({"lattice <= recursion", str(size), str(r.recursion), size <= r.recursion, true});
    r.checks.push_back({"lattice <= 9^index", str(size), str(r.whole_bound), size <= r.whole_bound, true});
    if (stats->abelian_commutant) {
      const Rational s(stats->lattice_size);
      r.checks.push_back({"lattice <= abelian recursion", str(size), to_string(r.abelian_recursion),
                          s <= r.abelian_recursion, true});
      r.checks.push_back({"lattice <= stated abelian bound", str(size), format_float(r.abelian_stated),
                          static_cast<double>(stats->lattice_size) <= r.abelian_stated, false});
      r.checks.push_back({"lattice <= proof-variant abelian bound", str(size), format_float(r.abelian_proof_variant),
                          static_cast<double>(stats->lattice_size) <= r.abelian_proof_variant, false});
    }
    if (r.kissing) {
      r.checks.push_back({"atoms <= kissing number", str(atoms), str(*r.kissing), atoms <= *r.kissing, false});
    }
  }
  return r;
}

bool commutant_is_abelian(const Subgroup& base) {
  const auto& g = base.group();
  if (base.is_trivial()) {
    for (Element a = 0; a < g.order(); ++a) {
      for (Element b = a + 1; b < g.order(); ++b) {
        if (g.compose(a, b) != g.compose(b, a)) return false;
      }
    }
    return true;
  }
  // Indicators of the double cosets H0 x H0 span the commutant.
  std::vector<std::vector<long long>> indicators;
  std::vector<bool> seen(g.order(), false);
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<long long> ind(g.order(), 0);
    for (Element a : base.elements()) {
      for (Element b : base.elements()) {
        const Element y = g.compose(g.compose(a, x), b);
        seen[y] = true;
        ind[y] = 1;
      }
    }
    indicators.push_back(std::move(ind));
  }
  for (std::size_t i = 0; i < indicators.size(); ++i) {
    for (std::size_t j = i + 1; j < indicators.size(); ++j) {
      if (convolve_serial(g, indicators[i], indicators[j]) != convolve_serial(g, indicators[j], indicators[i])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace intangle
