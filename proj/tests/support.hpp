#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "nucover/geometry.hpp"

namespace nucover::testing {

inline Box random_box(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_real_distribution<double> corner(-10.0, 10.0);
  std::uniform_real_distribution<double> edge(0.05, 8.0);
  Point lo(dim), hi(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    lo[i] = corner(rng);
    hi[i] = lo[i] + edge(rng);
  }
  return Box(lo, hi);
}

inline Point random_point(std::mt19937_64& rng, const Box& box) {
  Point x(box.dim());
  for (std::size_t i = 0; i < box.dim(); ++i) {
    std::uniform_real_distribution<double> u(box.lower(i), box.upper(i));
    x[i] = u(rng);
  }
  return x;
}

inline bool interiors_overlap(const Box& a, const Box& b) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.upper(i) <= b.lower(i) || b.upper(i) <= a.lower(i)) return false;
  return true;
}

/// Pieces are nested in `parent`, pairwise interior-disjoint, and their
/// volumes add up to the parent's within relative `tol`.
inline bool tiles(const Box& parent, const std::vector<Box>& pieces, double tol = 1e-12) {
  double sum = 0.0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!parent.contains(pieces[i])) return false;
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      if (interiors_overlap(pieces[i], pieces[j])) return false;
    sum += pieces[i].volume();
  }
  return std::abs(sum - parent.volume()) <= tol * parent.volume();
}

/// Brute-force maximum of prod s_i over a uniform grid of half-width vectors
/// with s_i <= w_i and sum s_i^2 <= r^2.
inline double grid_best_product(const std::vector<double>& w, double r, std::size_t steps) {
  const std::size_t n = w.size();
  std::vector<std::size_t> idx(n, 0);
  double best = 0.0;
  for (;;) {
    double norm2 = 0.0, prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double s = w[i] * static_cast<double>(idx[i]) / static_cast<double>(steps);
      norm2 += s * s;
      prod *= s;
    }
    if (norm2 <= r * r) best = std::max(best, prod);
    std::size_t k = 0;
    while (k < n && ++idx[k] > steps) idx[k++] = 0;
    if (k == n) break;
  }
  return best;
}

}  // namespace nucover::testing
