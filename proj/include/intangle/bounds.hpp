#pragma once

#include <optional>
#include <string>
#include <vector>

#include "intangle/group.hpp"
#include "intangle/numeric.hpp"

namespace intangle {

/// Published kissing numbers for n ∈ {1, 2, 3, 4, 8, 24}; reference data only.
std::optional<BigInt> kissing_reference(std::size_t n);

/// B(x) = 2 for x < 4, B(x) = ceil(3^x) · B(x/2) otherwise (exact halving).
BigInt recursion_bound(const Rational& x);
/// A(x) = 2 for x < 4, A(x) = x · A(x/2) otherwise: the same recursion with the
/// abelian-case count of minimal intermediates (at most x) in place of 3^x.
Rational abelian_recursion_bound(const Rational& x);
/// (x/sqrt2)^(log2(x)/2) and (x/sqrt2)^(log2(x/2)); floating point, reported only.
double abelian_bound_stated(const Rational& x);
double abelian_bound_proof_variant(const Rational& x);

/// Observed counts of one lattice.
struct LatticeStats {
  std::size_t lattice_size = 0;
  std::size_t atoms = 0;
  bool abelian_commutant = false;
};

struct BoundCheck {
  std::string name;
  std::string observed;
  std::string bound;
  bool holds = false;
  /// Failing an asserted check fails the report; the others are informative.
  bool asserted = true;
};

struct BoundReport {
  Rational index;
  std::size_t n = 0;
  BigInt packing_bound;  // 3^n − 1
  std::optional<BigInt> kissing;
  BigInt m_bound;  // ceil 3^{δ²}
  BigInt recursion;
  BigInt whole_bound;  // ceil 9^{δ²}
  Rational abelian_recursion;
  double abelian_stated = 0;
  double abelian_proof_variant = 0;
  std::optional<LatticeStats> stats;
  std::vector<BoundCheck> checks;

  bool asserted_hold() const;
};

/// Throws IndexTooSmall for index < 2.
BoundReport bound_report(const Rational& index, std::size_t n, std::optional<LatticeStats> stats = std::nullopt);

/// Whether the commutant (the Hecke algebra of double-coset functions) is
/// commutative. For a trivial base this is commutativity of G.
bool commutant_is_abelian(const Subgroup& base);

}  // namespace intangle
