#include "intangle/corpus.hpp"

#include "intangle/lattice.hpp"

namespace intangle {

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  return enumerate_subgroups(Subgroup::trivial(g)).nodes;
}

namespace {

CorpusEntry entry(const std::string& spec, bool all_bases) {
  CorpusEntry e{spec, parse_group_spec(spec), {}};
  if (all_bases) {
    // Every proper subgroup as base (the whole group has index 1).
    for (auto& s : all_subgroups(e.group)) {
      if (!s.is_whole()) e.bases.push_back(std::move(s));
    }
  } else {
    e.bases.push_back(Subgroup::trivial(e.group));
  }
  return e;
}

void add_base(CorpusEntry& e, std::vector<Element> gens) {
  e.bases.push_back(closure(e.group, gens));
}

}  // namespace

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;
  for (int n = 2; n <= 24; ++n) out.push_back(entry("cyclic:" + std::to_string(n), n <= 12));
  for (int n = 2; n <= 12; ++n) out.push_back(entry("dihedral:" + std::to_string(n), 2 * n <= 12));
  out.push_back(entry("symmetric:3", true));
  out.push_back(entry("symmetric:4", false));
  out.push_back(entry("elementary_abelian:2,2", true));
  out.push_back(entry("elementary_abelian:2,3", true));
  out.push_back(entry("elementary_abelian:2,4", false));
  out.push_back(entry("elementary_abelian:3,2", true));
  for (int n = 2; n <= 6; ++n) out.push_back(entry("quaternion:" + std::to_string(n), 4 * n <= 12));
  for (const char* spec : {"cyclic:2*cyclic:4", "cyclic:2*cyclic:6", "cyclic:2*symmetric:3", "cyclic:3*cyclic:3"}) {
    out.push_back(entry(spec, true));
  }
  for (const char* spec : {"cyclic:2*cyclic:8", "cyclic:4*cyclic:4", "cyclic:3*symmetric:3", "cyclic:2*dihedral:4",
                           "cyclic:2*quaternion:2", "cyclic:2*quaternion:3", "symmetric:3*cyclic:4",
                           "cyclic:2*cyclic:2*cyclic:6", "cyclic:2*cyclic:10", "cyclic:2*dihedral:6"}) {
    out.push_back(entry(spec, false));
  }
  out.push_back(entry("dihedral:15", false));
  out.push_back(entry("cyclic:30", false));

  // Nontrivial bases for some larger groups.
  for (auto& e : out) {
    if (e.spec == "cyclic:30") {
      add_base(e, {15});  // order 2
      add_base(e, {10});  // order 3
    } else if (e.spec == "symmetric:4") {
      // Point stabilizer S3 and the Klein four-group.
      const auto& g = *e.group;
      std::vector<Element> stab, klein;
      for (Element x = 0; x < g.order(); ++x) {
        const auto& p = g.permutations()[x];
        if (p[3] == 3) stab.push_back(x);
        bool fixed_point_free_involution = true;
        for (std::uint32_t i = 0; i < 4; ++i) {
          if (p[p[i]] != i || p[i] == i) fixed_point_free_involution = false;
        }
        if (fixed_point_free_involution) klein.push_back(x);
      }
      add_base(e, stab);
      add_base(e, klein);
    } else if (e.spec == "dihedral:15") {
      add_base(e, {15});  // a reflection
      add_base(e, {5});   // rotation of order 3
    } else if (e.spec == "elementary_abelian:2,4") {
      add_base(e, {1});
    } else if (e.spec == "dihedral:12") {
      add_base(e, {12});
      add_base(e, {6});
    }
  }
  return out;
}

std::vector<CorpusEntry> quick_corpus() {
  std::vector<CorpusEntry> out;
  for (const char* spec : {"symmetric:3", "elementary_abelian:2,2", "elementary_abelian:2,3", "quaternion:2",
                           "dihedral:4", "cyclic:6"}) {
    out.push_back(entry(spec, true));
  }
  auto z30 = entry("cyclic:30", false);
  add_base(z30, {15});
  out.push_back(std::move(z30));
  return out;
}

}  // namespace intangle
