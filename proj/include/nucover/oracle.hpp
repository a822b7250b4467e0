#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "geometry.hpp"
#include "problem.hpp"

namespace nucover {

struct OracleResult {
  Point best_point;
  double best_value = std::numeric_limits<double>::infinity();
  std::size_t grid_resolution = 0;
  std::size_t evaluations = 0;
};

namespace detail {

inline bool better_candidate(double v, const Point& x, double best_v, const Point& best_x) {
  if (v != best_v) return v < best_v;
  return std::lexicographical_compare(x.begin(), x.end(), best_x.begin(), best_x.end());
}

inline double lattice_coord(const Box& d, std::size_t axis, std::size_t j, std::size_t resolution) {
  if (j + 1 == resolution) return d.upper(axis);
  return d.lower(axis) + d.width(axis) * static_cast<double>(j) / static_cast<double>(resolution - 1);
}

}  // namespace detail

/// Minimum of the objective over the inclusive uniform lattice with
/// `resolution` points per axis, plus the domain centre and the origin
/// (when inside). Rows of the lattice are split across `workers` threads;
/// the reduction is by value, ties by lexicographic point order.
inline OracleResult grid_min(Problem& p, std::size_t resolution, unsigned workers = 0) {
  if (resolution < 2) throw std::invalid_argument("grid_min: resolution must be at least 2");
  const Box& d = p.domain();
  const std::size_t n = d.dim();
  double total = 1.0;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(resolution);
  if (total > 1e8) throw std::invalid_argument("grid_min: lattice exceeds 1e8 points");
  const auto points = static_cast<std::size_t>(total);

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, points));

  std::vector<OracleResult> partial(workers);
  auto scan = [&](unsigned w) {
    OracleResult& out = partial[w];
    const std::size_t begin = points * w / workers;
    const std::size_t end = points * (w + 1) / workers;
    Point x(n);
    for (std::size_t flat = begin; flat < end; ++flat) {
      std::size_t rest = flat;
      for (std::size_t i = n; i-- > 0;) {
        x[i] = detail::lattice_coord(d, i, rest % resolution, resolution);
        rest /= resolution;
      }
      const double v = p.peek(x);
      ++out.evaluations;
      if (out.best_point.empty() || detail::better_candidate(v, x, out.best_value, out.best_point)) {
        out.best_value = v;
        out.best_point = x;
      }
    }
  };

  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(scan, w);
    for (auto& t : threads) t.join();
  }

  OracleResult best;
  best.grid_resolution = resolution;
  auto offer = [&](const Point& x, double v) {
    if (best.best_point.empty() || detail::better_candidate(v, x, best.best_value, best.best_point)) {
      best.best_value = v;
      best.best_point = x;
    }
  };
  for (const auto& part : partial) {
    best.evaluations += part.evaluations;
    if (!part.best_point.empty()) offer(part.best_point, part.best_value);
  }

  std::vector<Point> extras{d.center()};
  const Point origin(n, 0.0);
  if (d.contains(origin)) extras.push_back(origin);
  for (const Point& x : extras) {
    offer(x, p.peek(x));
    ++best.evaluations;
  }
  p.add_evaluations(best.evaluations);
  return best;
}

/// How far the lattice minimum can sit above the true minimum: the nearest
/// lattice point is within half a cell per axis, so by the Vanderbei bound
/// the gap is at most min over eta of L(eta) * delta + eta, with delta the
/// 1-norm half-cell (the norm the built-in moduli are stated in).
inline double grid_slack(const Problem& p, std::size_t resolution) {
  if (resolution < 2) throw std::invalid_argument("grid_slack: resolution must be at least 2");
  const Box& d = p.domain();
  double delta = 0.0;
  for (std::size_t i = 0; i < d.dim(); ++i) delta += 0.5 * d.width(i) / static_cast<double>(resolution - 1);
  double best = std::numeric_limits<double>::infinity();
  for (int e = -600; e <= 100; ++e) {
    const double eta = std::pow(10.0, e / 100.0);
    try {
      best = std::min(best, p.modulus()(eta) * delta + eta);
    } catch (const std::domain_error&) {
      // eta outside the modulus domain
    }
  }
  return best;
}

/// oracle - slack <= found <= oracle + eps + slack.
inline bool verify_eps_optimal(double found_value, double oracle_value, double eps, double slack) {
  return oracle_value - slack <= found_value && found_value <= oracle_value + eps + slack;
}

}  // namespace nucover
