#pragma once

#include <string>
#include <vector>

#include "intangle/group.hpp"

namespace intangle {

struct CorpusEntry {
  std::string spec;  // parse_group_spec form
  GroupPtr group;
  /// Bases H0 to sweep; always starts with the trivial subgroup.
  std::vector<Subgroup> bases;
};

/// Built-in verification corpus: every named group of order ≤ 24
/// (cyclic, dihedral, symmetric, elementary abelian, dicyclic and the small
/// direct products) plus D15 and Z30. Groups of order ≤ 12 are swept over
/// every base; larger groups over the trivial base plus a few chosen ones.
std::vector<CorpusEntry> builtin_corpus();

/// Small version for quick runs: S3, Z2^2, Z2^3, Q8, Z30, D4, Z6.
std::vector<CorpusEntry> quick_corpus();

/// All subgroups of G (trivial base lattice nodes).
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

}  // namespace intangle
