#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "intangle/lattice.hpp"
#include "intangle/quadruple.hpp"

namespace intangle {

/// Lattice of intermediate subgroups plus pairwise reports among the proper
/// intermediates (base and whole group excluded, since v_N is undefined).
struct IntermediateLattice {
  SubgroupLattice lattice;
  std::size_t dim_commutant = 0;
  Rational index;
  /// Lattice node index of each matrix row.
  std::vector<std::size_t> proper;
  /// reports[a][b] for rows a, b of `proper`.
  std::vector<std::vector<QuadrupleReport>> reports;

  Quadruple quadruple(std::size_t a, std::size_t b) const;
};

/// Pair reports are computed in parallel over unordered pairs.
IntermediateLattice census(const Subgroup& base, const GroupLimits& limits = {});
/// Same, reusing an already enumerated (e.g. cached) lattice.
IntermediateLattice census(SubgroupLattice lattice);
IntermediateLattice census_serial(const Subgroup& base, const GroupLimits& limits = {});

/// Entries ⟨v_P, v_Q⟩ = cos α(P, Q) over the proper intermediates.
std::vector<std::vector<Surd>> gram_matrix(const IntermediateLattice& lat);

/// Exact positive-semidefiniteness of a symmetric rational matrix by
/// symmetric elimination (a zero pivot needs a zero row).
bool is_psd(std::vector<std::vector<Rational>> m);

/// The Gram matrix is D⁻¹ C D⁻¹ with C_ij = tr(e_P e_Q) − τ and
/// D = diag(sqrt(τ_P − τ)), so it is PSD iff C is.
bool gram_is_psd(const IntermediateLattice& lat);

struct PackingCertificate {
  bool passed = true;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<std::size_t, std::size_t>> violation;
  /// Largest off-diagonal cosine seen; the squared distance of the scaled
  /// vectors is 8 − 8c.
  std::optional<Surd> max_cosine;
};

/// ‖2v_P − 2v_Q‖ > 2 for every distinct pair, i.e. cos α < 1/2.
PackingCertificate packing_from_cosines(const std::vector<std::vector<Surd>>& gram);
/// Over the atoms of the lattice; a violation names lattice node indices.
/// Fewer than two atoms pass vacuously.
PackingCertificate packing_certificate(const IntermediateLattice& lat);

}  // namespace intangle
