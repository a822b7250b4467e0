#pragma once

#include <chrono>
#include <cstddef>
#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geometry.hpp"
#include "modulus.hpp"
#include "problem.hpp"

namespace nucover {

/// List disciplines for the covering method. Every scheme pops from the
/// front; they differ in where the new children go and in which order.
///   s1a: children reversed, at the front   (depth-first)
///   s1b: children in order, at the front   (depth-first)
///   s2a: children reversed, at the back    (breadth-first)
///   s2b: children in order, at the back    (breadth-first)
///   recursive: s1b order, driven by an explicit frame stack instead of a list
enum class TraversalScheme { s1a, s1b, s2a, s2b, recursive };

inline std::string_view to_string(TraversalScheme s) {
  switch (s) {
    case TraversalScheme::s1a: return "1a";
    case TraversalScheme::s1b: return "1b";
    case TraversalScheme::s2a: return "2a";
    case TraversalScheme::s2b: return "2b";
    case TraversalScheme::recursive: return "recursive";
  }
  return "?";
}

inline std::optional<TraversalScheme> parse_scheme(std::string_view s) {
  if (s == "1a") return TraversalScheme::s1a;
  if (s == "1b") return TraversalScheme::s1b;
  if (s == "2a") return TraversalScheme::s2a;
  if (s == "2b") return TraversalScheme::s2b;
  if (s == "recursive" || s == "rec") return TraversalScheme::recursive;
  return std::nullopt;
}

struct CoverOptions {
  TraversalScheme scheme = TraversalScheme::s1a;
  std::size_t max_boxes = std::numeric_limits<std::size_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
  bool record_trace = true;
  std::function<void(const Box&)> on_visit;  // called once per processed box, in visit order
};

/// x^i = min(a^i + h/2, b^i).
inline Point iterate_point(const Box& box, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("iterate_point: h must be positive");
  Point x(box.dim());
  for (std::size_t i = 0; i < box.dim(); ++i) x[i] = std::min(box.lower(i) + 0.5 * h, box.upper(i));
  return x;
}

struct AdaptiveStep {
  double step = 0.0;
  double record = 0.0;
};

/// Non-improving iterate: widen the step by (f - F)/L(eta) and keep F.
/// Otherwise (ties included) F becomes f and the step stays at h.
inline AdaptiveStep adaptive_step(double f_xk, double record, double h, const VanderbeiModulus& m, double eta) {
  if (f_xk > record) return {h + (f_xk - record) / m(eta), record};
  return {h, f_xk};
}

namespace detail {

class CoverRun {
 public:
  CoverRun(Problem& p, double eps, double eta, const CoverOptions& opt)
      : problem_(p), opt_(opt), start_(std::chrono::steady_clock::now()) {
    if (!(eps > 0.0)) throw std::invalid_argument("solve_cover: eps must be positive");
    if (!(eta > 0.0 && eta < eps)) throw std::invalid_argument("solve_cover: require 0 < eta < eps");
    if (opt.max_boxes == 0 || !(opt.max_seconds > 0.0))
      throw std::invalid_argument("solve_cover: limits must be positive");
    lipschitz_ = p.modulus()(eta);
    h_ = base_step(eps, eta, p.modulus());
    const Point& a = p.domain().lower();
    result_.best_value = p.evaluate(a);
    result_.best_point = a;
  }

  double base() const noexcept { return h_; }

  bool budget_hit() {
    if (result_.n_total >= opt_.max_boxes) return true;
    if ((result_.n_total & 1023u) == 0 && std::isfinite(opt_.max_seconds)) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
      if (dt.count() >= opt_.max_seconds) return true;
    }
    return false;
  }

  // Steps 1-2 for one box; returns h'.
  double visit(const Box& box) {
    if (opt_.on_visit) opt_.on_visit(box);
    ++result_.n_total;
    const Point x = iterate_point(box, h_);
    const double fx = problem_.evaluate(x);
    double step = h_;
    if (fx > result_.best_value) {
      step = h_ + (fx - result_.best_value) / lipschitz_;
    } else {
      if (fx < result_.best_value) {
        result_.best_point = x;
        result_.n_opt = result_.n_total;
      }
      result_.best_value = fx;
    }
    return step;
  }

  void trace(double step, std::size_t pending) {
    if (!opt_.record_trace) return;
    result_.trace.push_back({result_.n_total - 1, step, result_.best_value, pending, StepKind::cover, 0.0});
  }

  RunResult finish(bool exhausted) {
    result_.status = exhausted ? RunStatus::converged : RunStatus::budget_exceeded;
    result_.iterations = result_.n_total;
    result_.evaluations = problem_.evaluations();
    return std::move(result_);
  }

 private:
  Problem& problem_;
  const CoverOptions& opt_;
  std::chrono::steady_clock::time_point start_;
  double lipschitz_ = 0.0;
  double h_ = 0.0;
  RunResult result_;
};

inline RunResult cover_with_list(Problem& p, double eps, double eta, const CoverOptions& opt) {
  CoverRun run(p, eps, eta, opt);
  std::deque<Box> pending{p.domain()};
  while (!pending.empty()) {
    if (run.budget_hit()) return run.finish(false);
    Box box = std::move(pending.front());
    pending.pop_front();
    const double step = run.visit(box);
    std::vector<Box> children = corner_split(box, step);
    switch (opt.scheme) {
      case TraversalScheme::s1a:
        for (auto& c : children) pending.push_front(std::move(c));
        break;
      case TraversalScheme::s1b:
        for (auto it = children.rbegin(); it != children.rend(); ++it) pending.push_front(std::move(*it));
        break;
      case TraversalScheme::s2a:
        for (auto it = children.rbegin(); it != children.rend(); ++it) pending.push_back(std::move(*it));
        break;
      case TraversalScheme::s2b:
        for (auto& c : children) pending.push_back(std::move(c));
        break;
      case TraversalScheme::recursive:
        throw std::logic_error("cover_with_list: recursive scheme has no list");
    }
    run.trace(step, pending.size());
  }
  return run.finish(true);
}

// Depth-first without a box list: each frame holds a processed box and its
// step, and materialises the next child only when the previous subtree is done.
inline RunResult cover_recursive(Problem& p, double eps, double eta, const CoverOptions& opt) {
  struct Frame {
    Box box;
    double step;
    std::size_t next_axis;
  };

  CoverRun run(p, eps, eta, opt);
  std::vector<Frame> stack;
  std::size_t pending = 0;  // children announced but not yet visited

  auto enter = [&](const Box& box) {
    const double step = run.visit(box);
    for (std::size_t i = 0; i < box.dim(); ++i)
      if (box.width(i) > step) ++pending;
    run.trace(step, pending);
    stack.push_back({box, step, 0});
  };

  if (run.budget_hit()) return run.finish(false);
  enter(p.domain());
  while (!stack.empty()) {
    Frame& top = stack.back();
    const std::size_t n = top.box.dim();
    std::size_t i = top.next_axis;
    while (i < n && !(top.box.width(i) > top.step)) ++i;
    if (i == n) {
      stack.pop_back();
      continue;
    }
    top.next_axis = i + 1;
    if (run.budget_hit()) return run.finish(false);

    Point lo = top.box.lower();
    Point hi = top.box.upper();
    lo[i] += top.step;
    for (std::size_t j = 0; j < i; ++j) hi[j] = std::min(top.box.lower(j) + top.step, top.box.upper(j));
    --pending;
    enter(Box(std::move(lo), std::move(hi)));  // may reallocate `stack`; `top` not used after
  }
  return run.finish(true);
}

}  // namespace detail

/// Non-uniform covering by corner splits with a record-driven step.
/// Terminates when no box is left (best point is eps-optimal) or when a
/// budget limit is reached (status budget_exceeded, best-so-far returned).
inline RunResult solve_cover(Problem& p, double eps, double eta, const CoverOptions& opt = {}) {
  if (opt.scheme == TraversalScheme::recursive) return detail::cover_recursive(p, eps, eta, opt);
  return detail::cover_with_list(p, eps, eta, opt);
}

}  // namespace nucover
