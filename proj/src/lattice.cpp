#include "intangle/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "intangle/errors.hpp"

namespace intangle {

namespace {

// Minimal elements g of each left coset gA outside A.
std::vector<Element> coset_leaders_outside(const Subgroup& a) {
  const auto& g = a.group();
  std::vector<bool> covered(g.order(), false);
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    for (Element h : a.elements()) covered[g.compose(x, h)] = true;
    if (!a.contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<Element> seed_of(const Subgroup& a) {
  if (!a.generators().empty() || a.is_trivial()) return a.generators();
  return a.elements();
}

std::vector<Subgroup> extensions(const Subgroup& a) {
  std::vector<Subgroup> out;
  auto seed = seed_of(a);
  seed.push_back(0);
  for (Element x : coset_leaders_outside(a)) {
    seed.back() = x;
    out.push_back(closure(a.parent(), seed));
  }
  return out;
}

template <bool Parallel>
SubgroupLattice enumerate(const Subgroup& base, const GroupLimits& limits) {
  const GroupPtr& group = base.parent();
  std::vector<Subgroup> found{base};
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index{{base.members(), 0}};
  std::vector<std::vector<std::size_t>> children(1);

  std::size_t layer_begin = 0;
  while (layer_begin < found.size()) {
    const std::size_t layer_end = found.size();
    const auto layer_size = static_cast<std::ptrdiff_t>(layer_end - layer_begin);
    std::vector<std::vector<Subgroup>> candidates(static_cast<std::size_t>(layer_size));
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t i = 0; i < layer_size; ++i) {
        candidates[static_cast<std::size_t>(i)] = extensions(found[layer_begin + static_cast<std::size_t>(i)]);
      }
    } else {
      for (std::ptrdiff_t i = 0; i < layer_size; ++i) {
        candidates[static_cast<std::size_t>(i)] = extensions(found[layer_begin + static_cast<std::size_t>(i)]);
      }
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      std::vector<std::size_t> kids;
      for (auto& c : candidates[i]) {
        auto [it, inserted] = index.try_emplace(c.members(), found.size());
        if (inserted) {
          if (found.size() + 1 > limits.max_nodes) {
            throw Error(ErrorKind::CapExceeded,
                        "lattice exceeds " + std::to_string(limits.max_nodes) + " nodes");
          }
          found.push_back(std::move(c));
          children.emplace_back();
        }
        kids.push_back(it->second);
      }
      children[layer_begin + i] = std::move(kids);
    }
    layer_begin = layer_end;
  }

  // Canonical ordering.
  std::vector<std::size_t> perm(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return found[a].members() < found[b].members(); });
  std::vector<std::size_t> rank(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = i;

  SubgroupLattice lat;
  lat.group = group;
  for (std::size_t i : perm) lat.nodes.push_back(found[i]);

  for (std::size_t old = 0; old < found.size(); ++old) {
    std::vector<std::size_t> kids;
    for (std::size_t k : children[old]) kids.push_back(rank[k]);
    std::sort(kids.begin(), kids.end());
    kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
    // Every upper cover is the closure of A with one extra element, so the
    // covers are exactly the minimal extensions.
    for (std::size_t b : kids) {
      bool minimal = true;
      for (std::size_t c : kids) {
        if (c != b && lat.nodes[c].order() < lat.nodes[b].order() &&
            lat.nodes[c].members().is_subset_of(lat.nodes[b].members())) {
          minimal = false;
          break;
        }
      }
      if (minimal) lat.hasse_edges.emplace_back(rank[old], b);
    }
  }
  std::sort(lat.hasse_edges.begin(), lat.hasse_edges.end());

  const std::size_t top = lat.top_index();
  if (!lat.top().is_whole()) throw std::logic_error("enumeration did not reach the whole group");
  for (auto [lo, hi] : lat.hasse_edges) {
    if (lo == 0 && hi != top) lat.atoms.push_back(hi);
    if (hi == top && lo != 0) lat.coatoms.push_back(lo);
  }
  return lat;
}

}  // namespace

std::optional<std::size_t> SubgroupLattice::find(const ElementSet& members) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), members,
                             [](const Subgroup& s, const ElementSet& m) { return s.members() < m; });
  if (it != nodes.end() && it->members() == members) return static_cast<std::size_t>(it - nodes.begin());
  return std::nullopt;
}

bool SubgroupLattice::leq(std::size_t a, std::size_t b) const { return nodes[a].is_subgroup_of(nodes[b]); }

std::size_t SubgroupLattice::meet(std::size_t a, std::size_t b) const {
  auto i = find(nodes[a].members().intersect(nodes[b].members()));
  if (!i) throw std::logic_error("lattice not closed under intersection");
  return *i;
}

std::size_t SubgroupLattice::join(std::size_t a, std::size_t b) const {
  auto i = find(intangle::join(nodes[a], nodes[b]).members());
  if (!i) throw std::logic_error("lattice not closed under join");
  return *i;
}

std::vector<std::size_t> SubgroupLattice::proper_nodes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < nodes.size(); ++i) out.push_back(i);
  return out;
}

std::vector<std::size_t> SubgroupLattice::covers(std::size_t a) const {
  std::vector<std::size_t> out;
  for (auto [lo, hi] : hasse_edges) {
    if (lo == a) out.push_back(hi);
  }
  return out;
}

SubgroupLattice enumerate_subgroups(const Subgroup& base, const GroupLimits& limits) {
  return enumerate<true>(base, limits);
}

SubgroupLattice enumerate_subgroups_serial(const Subgroup& base, const GroupLimits& limits) {
  return enumerate<false>(base, limits);
}

}  // namespace intangle
