#pragma once

#include <cstddef>
#include <vector>

#include "intangle/group.hpp"

namespace intangle {

/// (x conv y)(g) = Σ_h x(h) y(h⁻¹g) over the group.
template <class T>
std::vector<T> convolve_serial(const FiniteGroup& g, const std::vector<T>& x, const std::vector<T>& y) {
  const std::size_t n = g.order();
  std::vector<T> out(n);
  for (Element h = 0; h < n; ++h) {
    if (x[h] == T{}) continue;
    for (Element k = 0; k < n; ++k) {
      if (y[k] == T{}) continue;
      out[g.compose(h, k)] += x[h] * y[k];
    }
  }
  return out;
}

/// Parallel over output elements; same result as convolve_serial.
template <class T>
std::vector<T> convolve(const FiniteGroup& g, const std::vector<T>& x, const std::vector<T>& y) {
  const auto n = static_cast<std::ptrdiff_t>(g.order());
  std::vector<T> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 0; t < n; ++t) {
    const auto target = static_cast<Element>(t);
    T acc{};
    for (Element h = 0; h < static_cast<Element>(n); ++h) {
      if (x[h] == T{}) continue;
      const Element k = g.compose(g.inverse(h), target);
      if (y[k] == T{}) continue;
      acc += x[h] * y[k];
    }
    out[static_cast<std::size_t>(t)] = std::move(acc);
  }
  return out;
}

/// Runs f(i) for i in [0, n) with OpenMP; results go to caller-owned slots.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) f(static_cast<std::size_t>(i));
}

}  // namespace intangle
