#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "intangle/corpus.hpp"
#include "intangle/quadruple.hpp"

namespace intangle {

struct TheoremTally {
  std::string suite;
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<std::string> counterexample;
};

class VerifyResult {
 public:
  void record(const std::string& suite, const std::string& name, bool ok,
              const std::function<std::string()>& witness);
  /// Adds counts of `other` in order; keeps the earliest counterexample.
  void merge(const VerifyResult& other);

  const std::vector<TheoremTally>& tallies() const noexcept { return tallies_; }
  const TheoremTally* find(const std::string& name) const;
  bool passed() const;
  std::size_t failures() const;
  std::size_t checks() const;

  /// One line per theorem plus the first counterexample of each failing one.
  void print(std::ostream& os) const;

 private:
  TheoremTally& slot(const std::string& suite, const std::string& name);
  std::vector<TheoremTally> tallies_;
};

/// Suites: lattice, angles, duality, landau, pq, sym, po2, rigidity,
/// packing, bounds, abstract. "all" selects every one.
const std::vector<std::string>& suite_names();
std::set<std::string> resolve_suites(const std::vector<std::string>& requested);

struct VerifyOptions {
  std::set<std::string> suites = resolve_suites({"all"});
  std::uint64_t seed = 20240611;
  /// Random representative re-choices per quadruple.
  std::size_t random_reps = 100;
  /// Random elements per group for the Fourier checks.
  std::size_t fourier_samples = 20;
  /// Random abstract trace data instances.
  std::size_t abstract_samples = 1000;
  GroupLimits limits;
};

/// Runs the selected suites on one group and one base.
VerifyResult verify_group(const std::string& label, const GroupPtr& group, const Subgroup& base,
                          const VerifyOptions& opts);
/// Every (group, base) pair of the corpus, plus the abstract suite once.
VerifyResult verify_corpus(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts);
/// Random parallelograms, minimal-pair fixtures and their packing check.
VerifyResult verify_abstract(const VerifyOptions& opts);

/// The tight minimal-pair fixture (1/16, 1/4, 1/4, 1/7).
TraceData tight_minimal_fixture();
/// A uniformly drawn admissible TraceData with τ_Pτ_Q = τ.
TraceData random_parallelogram(std::uint64_t seed);
/// An admissible minimal-pair TraceData satisfying the key inequality.
TraceData random_minimal_pair(std::uint64_t seed);

}  // namespace intangle
