#include "intangle/census.hpp"

#include <exception>
#include <stdexcept>

#include "intangle/errors.hpp"
#include "intangle/kernels.hpp"

namespace intangle {

Quadruple IntermediateLattice::quadruple(std::size_t a, std::size_t b) const {
  return Quadruple::make(lattice.base(), lattice.nodes[proper[a]], lattice.nodes[proper[b]]);
}

namespace {

template <bool Parallel>
IntermediateLattice run_census(SubgroupLattice lattice) {
  IntermediateLattice out;
  out.lattice = std::move(lattice);
  const Subgroup& base = out.lattice.base();
  out.dim_commutant = double_coset_count(base);
  out.index = Rational(base.group().order(), base.order());
  out.proper = out.lattice.proper_nodes();

  const std::size_t n = out.proper.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::vector<QuadrupleReport> results(pairs.size());
  std::vector<std::exception_ptr> errors(pairs.size());
  auto work = [&](std::size_t i) {
    try {
      results[i] = classify(out.quadruple(pairs[i].first, pairs[i].second));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if constexpr (Parallel) {
    parallel_for(pairs.size(), work);
  } else {
    for (std::size_t i = 0; i < pairs.size(); ++i) work(i);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  out.reports.assign(n, std::vector<QuadrupleReport>(n));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    out.reports[a][b] = results[i];
    if (a != b) {
      // Chain data is orientation-free; only the τ_P/τ_Q roles swap.
      auto swapped = results[i];
      std::swap(swapped.trace.tau_p, swapped.trace.tau_q);
      out.reports[b][a] = std::move(swapped);
    }
  }
  return out;
}

}  // namespace

IntermediateLattice census(const Subgroup& base, const GroupLimits& limits) {
  return run_census<true>(enumerate_subgroups(base, limits));
}

IntermediateLattice census(SubgroupLattice lattice) { return run_census<true>(std::move(lattice)); }

IntermediateLattice census_serial(const Subgroup& base, const GroupLimits& limits) {
  return run_census<false>(enumerate_subgroups_serial(base, limits));
}

std::vector<std::vector<Surd>> gram_matrix(const IntermediateLattice& lat) {
  const std::size_t n = lat.proper.size();
  std::vector<std::vector<Surd>> g(n, std::vector<Surd>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& c = lat.reports[a][b].cos_alpha;
      if (!c) throw Error(ErrorKind::AngleUndefined, "Gram entry undefined");
      g[a][b] = *c;
    }
    if (g[a][a] != Surd(1)) throw std::logic_error("Gram diagonal entry is not 1");
  }
  return g;
}

bool is_psd(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Rational pivot = m[k][k];
    if (pivot < 0) return false;
    if (pivot == 0) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m[k][j] != 0) return false;
      }
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational f = m[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

bool gram_is_psd(const IntermediateLattice& lat) {
  const std::size_t n = lat.proper.size();
  std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& td = lat.reports[a][b].trace;
      c[a][b] = td.tr_pq - td.tau;
    }
  }
  return is_psd(std::move(c));
}

PackingCertificate packing_from_cosines(const std::vector<std::vector<Surd>>& gram) {
  PackingCertificate cert;
  const Surd half(Rational(1, 2));
  for (std::size_t a = 0; a < gram.size(); ++a) {
    for (std::size_t b = a + 1; b < gram.size(); ++b) {
      ++cert.pairs_checked;
      const Surd& c = gram[a][b];
      if (!cert.max_cosine || *cert.max_cosine < c) cert.max_cosine = c;
      if (!(c < half) && cert.passed) {
        cert.passed = false;
        cert.violation = std::make_pair(a, b);
      }
    }
  }
  return cert;
}

PackingCertificate packing_certificate(const IntermediateLattice& lat) {
  std::vector<std::size_t> rows;
  for (std::size_t atom : lat.lattice.atoms) {
    for (std::size_t r = 0; r < lat.proper.size(); ++r) {
      if (lat.proper[r] == atom) rows.push_back(r);
    }
  }
  std::vector<std::vector<Surd>> g(rows.size(), std::vector<Surd>(rows.size()));
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < rows.size(); ++b) g[a][b] = *lat.reports[rows[a]][rows[b]].cos_alpha;
  }
  auto cert = packing_from_cosines(g);
  if (cert.violation) {
    cert.violation = std::make_pair(lat.proper[rows[cert.violation->first]], lat.proper[rows[cert.violation->second]]);
  }
  return cert;
}

}  // namespace intangle
