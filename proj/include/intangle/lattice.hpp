#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "intangle/group.hpp"

namespace intangle {

/// All subgroups between a base and the whole group. Node order is canonical:
/// by order, then lexicographically by member list, so the base is node 0 and
/// the whole group is the last node.
struct SubgroupLattice {
  GroupPtr group;
  std::vector<Subgroup> nodes;
  /// Covering pairs (lower, upper) sorted lexicographically.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;
  /// Nodes covering the base, excluding the whole group.
  std::vector<std::size_t> atoms;
  /// Nodes covered by the whole group, excluding the base.
  std::vector<std::size_t> coatoms;

  const Subgroup& base() const { return nodes.front(); }
  const Subgroup& top() const { return nodes.back(); }
  std::size_t top_index() const { return nodes.size() - 1; }
  std::size_t size() const { return nodes.size(); }

  std::optional<std::size_t> find(const ElementSet& members) const;
  bool leq(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;
  /// Indices of nodes other than base and top.
  std::vector<std::size_t> proper_nodes() const;
  /// Upper covers of node a.
  std::vector<std::size_t> covers(std::size_t a) const;
};

/// Layered closure: every known node A is extended by one element g outside
/// A (one g per left coset gA), closed, and deduplicated; repeated until no
/// new node appears. Candidate extensions of a layer run in parallel; merge
/// and final ordering are deterministic. Throws CapExceeded past max_nodes.
SubgroupLattice enumerate_subgroups(const Subgroup& base, const GroupLimits& limits = {});

/// Same algorithm without OpenMP. Kept as the reference for tests and benches.
SubgroupLattice enumerate_subgroups_serial(const Subgroup& base, const GroupLimits& limits = {});

}  // namespace intangle
