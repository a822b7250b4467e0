#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "modulus.hpp"
#include "problem.hpp"

namespace nucover {

struct BnbEntry {
  Box box;
  double center_value = 0.0;
  std::size_t serial = 0;  // creation order, 1-based; breaks value ties FIFO
};

/// Snapshot handed to BnbOptions::on_iteration after each step.
struct BnbIteration {
  std::size_t k = 0;
  const BnbEntry* selected = nullptr;
  double record_at_selection = 0.0;
  double radius = 0.0;
  StepKind op = StepKind::discard;
  std::optional<Box> removed;  // box excluded by the step (whole box or inscribed box)
  double covered_volume = 0.0;
  std::span<const BnbEntry> queue;
};

struct BnbOptions {
  double beta = 0.99;
  double gamma = 1.0;
  std::size_t max_iterations = 100000;
  bool record_trace = true;
  std::function<void(const BnbIteration&)> on_iteration;
};

/// Step selection, checked in order: discard, bisect, cut_and_split.
inline StepKind classify_step(double radius, double half_diag, double gamma_r) {
  if (radius >= half_diag) return StepKind::discard;
  if (radius < gamma_r) return StepKind::bisect;
  return StepKind::cut_and_split;
}

/// Incumbent bookkeeping shared by the solvers; ties keep the incumbent.
struct Record {
  double value = std::numeric_limits<double>::infinity();
  Point point;
  std::size_t index = 0;

  bool update(std::span<const double> x, double f, std::size_t box_index) {
    if (!(f < value)) return false;
    value = f;
    point.assign(x.begin(), x.end());
    index = box_index;
    return true;
  }
};

inline void record_update(Record& r, std::span<const double> x, double f, std::size_t box_index = 0) {
  r.update(x, f, box_index);
}

namespace detail {

struct EntryAfter {
  bool operator()(const BnbEntry& a, const BnbEntry& b) const {
    if (a.center_value != b.center_value) return a.center_value > b.center_value;
    return a.serial > b.serial;
  }
};

}  // namespace detail

/// Best-first branch and bound. Each selected box (smallest centre value) is
/// discarded, bisected, or has its largest safely-excluded centred box cut
/// out with the remainder tiled by slabs. Runs until no box is left (record
/// is eps-optimal, covered volume equals vol(P)) or max_iterations.
inline RunResult solve_bnb(Problem& p, double eps, const BnbOptions& opt = {}) {
  if (!(eps > 0.0)) throw std::invalid_argument("solve_bnb: eps must be positive");
  if (!(opt.beta > 0.0 && opt.beta < 1.0)) throw std::invalid_argument("solve_bnb: beta must lie in (0,1)");
  if (!(opt.gamma > 0.0 && opt.gamma <= 1.0)) throw std::invalid_argument("solve_bnb: gamma must lie in (0,1]");
  if (opt.max_iterations == 0) throw std::invalid_argument("solve_bnb: max_iterations must be positive");

  const Box& domain = p.domain();
  const double total_volume = domain.volume();
  const double r = domain.half_diagonal();
  RadiusSolver radius_of(p.modulus(), eps, opt.beta);

  const double r1 = std::min(radius_of(0.0).rho, r);
  if (r1 < r && !(opt.gamma > r1 / r))
    throw std::invalid_argument("solve_bnb: gamma must exceed r1/r = " + std::to_string(r1 / r));
  const double gamma_r = opt.gamma * r;

  RunResult result;
  Record record;
  std::vector<BnbEntry> queue;
  std::size_t created = 0;
  double covered = 0.0;

  auto push = [&](Box box) {
    const Point c = box.center();
    const double v = p.evaluate(c);
    ++created;
    record.update(c, v, created);
    queue.push_back({std::move(box), v, created});
    std::push_heap(queue.begin(), queue.end(), detail::EntryAfter{});
  };

  push(domain);
  std::size_t k = 0;
  while (!queue.empty()) {
    if (k >= opt.max_iterations) break;
    ++k;
    std::pop_heap(queue.begin(), queue.end(), detail::EntryAfter{});
    const BnbEntry current = std::move(queue.back());
    queue.pop_back();

    const double record_now = record.value;
    const double gap = std::max(current.center_value - record_now, 0.0);
    const double rk = std::min(radius_of(gap).rho, r);
    const StepKind op = classify_step(rk, current.box.half_diagonal(), gamma_r);
    std::optional<Box> removed;

    switch (op) {
      case StepKind::discard:
        covered += current.box.volume();
        removed = current.box;
        ++result.discard_steps;
        break;
      case StepKind::bisect: {
        auto [left, right] = bisect_longest(current.box);
        push(std::move(left));
        push(std::move(right));
        ++result.bisect_steps;
        break;
      }
      case StepKind::cut_and_split: {
        const std::vector<double> s = inscribe_max_box(current.box, rk);
        Box inner = centered_box(current.box, s);
        covered += inner.volume();
        for (Box& slab : slab_decompose(current.box, inner)) push(std::move(slab));
        removed = std::move(inner);
        ++result.cut_steps;
        break;
      }
      case StepKind::cover:
        throw std::logic_error("solve_bnb: unexpected step kind");
    }

    if (opt.record_trace) result.trace.push_back({k, rk, record.value, queue.size(), op, covered});
    if (opt.on_iteration) {
      opt.on_iteration(BnbIteration{k, &current, record_now, rk, op, std::move(removed), covered,
                                    std::span<const BnbEntry>(queue)});
    }
  }

  result.status = queue.empty() ? RunStatus::converged : RunStatus::budget_exceeded;
  if (result.converged() && std::abs(covered - total_volume) > 1e-9 * total_volume)
    throw std::logic_error("solve_bnb: covered volume does not match domain volume");

  result.best_point = record.point;
  result.best_value = record.value;
  result.n_total = created;
  result.n_opt = record.index;
  result.iterations = k;
  result.evaluations = p.evaluations();
  result.covered_volume = covered;
  if (result.bisect_steps > 0)
    result.theta = static_cast<double>(result.cut_steps) / static_cast<double>(result.bisect_steps);
  else
    result.theta = result.cut_steps > 0 ? std::numeric_limits<double>::infinity() : 0.0;
  return result;
}

}  // namespace nucover
