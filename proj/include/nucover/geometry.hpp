#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nucover {

using Point = std::vector<double>;

/// Closed axis-aligned box [lower, upper] in R^n.
class Box {
 public:
  Box() = default;

  Box(Point lower, Point upper) : lower_(std::move(lower)), upper_(std::move(upper)) { validate(); }

  Box(std::initializer_list<std::pair<double, double>> edges) {
    for (const auto& [a, b] : edges) {
      lower_.push_back(a);
      upper_.push_back(b);
    }
    validate();
  }

  std::size_t dim() const noexcept { return lower_.size(); }
  const Point& lower() const noexcept { return lower_; }
  const Point& upper() const noexcept { return upper_; }
  double lower(std::size_t i) const { return lower_[i]; }
  double upper(std::size_t i) const { return upper_[i]; }
  double width(std::size_t i) const { return upper_[i] - lower_[i]; }

  Point center() const {
    Point c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = 0.5 * (lower_[i] + upper_[i]);
    return c;
  }

  double diagonal() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) s += width(i) * width(i);
    return std::sqrt(s);
  }

  double half_diagonal() const { return 0.5 * diagonal(); }

  double volume() const {
    double v = 1.0;
    for (std::size_t i = 0; i < dim(); ++i) v *= width(i);
    return v;
  }

  /// True if every edge has positive length.
  bool non_degenerate() const {
    for (std::size_t i = 0; i < dim(); ++i)
      if (!(upper_[i] > lower_[i])) return false;
    return true;
  }

  bool contains(std::span<const double> x) const {
    if (x.size() != dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
      if (x[i] < lower_[i] || x[i] > upper_[i]) return false;
    return true;
  }

  bool contains(const Box& other) const {
    if (other.dim() != dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
      if (other.lower_[i] < lower_[i] || other.upper_[i] > upper_[i]) return false;
    return true;
  }

  friend bool operator==(const Box&, const Box&) = default;

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (i) s += "x";
      s += "[" + std::to_string(lower_[i]) + "," + std::to_string(upper_[i]) + "]";
    }
    return s;
  }

 private:
  void validate() const {
    if (lower_.size() != upper_.size() || lower_.empty())
      throw std::invalid_argument("Box: lower/upper dimension mismatch");
    for (std::size_t i = 0; i < lower_.size(); ++i) {
      if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]) || lower_[i] > upper_[i])
        throw std::invalid_argument("Box: require finite lower[i] <= upper[i]");
    }
  }

  Point lower_;
  Point upper_;
};

namespace detail {

// Lowest index among axes with the largest edge.
inline std::size_t longest_axis(const Box& box) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < box.dim(); ++i)
    if (box.width(i) > box.width(best)) best = i;
  return best;
}

}  // namespace detail

/// Corner split used by the covering method. For every axis i whose edge
/// exceeds `step`, emits the child whose lower corner is advanced by `step`
/// along i and whose earlier axes are capped at lower + step. Together with
/// the corner box [lower, min(lower + step, upper)] the children tile `box`.
inline std::vector<Box> corner_split(const Box& box, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("corner_split: step must be positive");
  std::vector<Box> children;
  const std::size_t n = box.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(box.width(i) > step)) continue;
    Point lo = box.lower();
    Point hi = box.upper();
    lo[i] += step;
    for (std::size_t j = 0; j < i; ++j) hi[j] = std::min(box.lower(j) + step, box.upper(j));
    children.emplace_back(std::move(lo), std::move(hi));
  }
  return children;
}

/// The box [lower, min(lower + step, upper)] left uncovered by corner_split's children.
inline Box corner_box(const Box& box, double step) {
  Point hi(box.dim());
  for (std::size_t i = 0; i < box.dim(); ++i) hi[i] = std::min(box.lower(i) + step, box.upper(i));
  return Box(box.lower(), std::move(hi));
}

/// Halves `box` across the midpoint of its longest edge (lowest axis on ties).
inline std::pair<Box, Box> bisect_longest(const Box& box) {
  if (!box.non_degenerate()) throw std::invalid_argument("bisect_longest: degenerate box");
  const std::size_t axis = detail::longest_axis(box);
  const double mid = 0.5 * (box.lower(axis) + box.upper(axis));
  Point left_hi = box.upper();
  Point right_lo = box.lower();
  left_hi[axis] = mid;
  right_lo[axis] = mid;
  return {Box(box.lower(), std::move(left_hi)), Box(std::move(right_lo), box.upper())};
}

/// Half-widths s of the largest-volume box centred at the centre of `box`
/// that fits both inside `box` and inside the Euclidean ball of `radius`
/// around that centre. Water-filling: the common level r'/sqrt(m) is shared
/// by the unclamped axes; axes narrower than the level are clamped to their
/// half-width and their share is handed back to the rest.
///
/// For radius >= half-diagonal the whole box fits and its half-widths are
/// returned; the branch-and-bound solver discards such boxes before calling.
inline std::vector<double> inscribe_max_box(const Box& box, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("inscribe_max_box: radius must be positive");
  const std::size_t n = box.dim();
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = 0.5 * box.width(i);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });

  std::vector<double> s(n);
  double budget = radius * radius;
  std::size_t free_axes = n;
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::size_t i = order[pos];
    const double level = std::sqrt(std::max(budget, 0.0) / static_cast<double>(free_axes));
    if (w[i] <= level) {
      s[i] = w[i];
      budget -= w[i] * w[i];
      --free_axes;
      continue;
    }
    // Remaining axes are all wider than the level.
    for (std::size_t q = pos; q < n; ++q) s[order[q]] = level;
    break;
  }
  return s;
}

/// The box centred in `box` with half-widths `s`. Axes with s == half-width
/// reuse the parent's bounds exactly so no rounding leaks outside.
inline Box centered_box(const Box& box, std::span<const double> s) {
  const std::size_t n = box.dim();
  if (s.size() != n) throw std::invalid_argument("centered_box: dimension mismatch");
  Point lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] >= 0.5 * box.width(i)) {
      lo[i] = box.lower(i);
      hi[i] = box.upper(i);
    } else {
      const double c = 0.5 * (box.lower(i) + box.upper(i));
      lo[i] = std::max(c - s[i], box.lower(i));
      hi[i] = std::min(c + s[i], box.upper(i));
    }
  }
  return Box(std::move(lo), std::move(hi));
}

/// Tiles box \ inner with at most 2n slabs. Each round cuts the current
/// middle box along its longest edge (lowest axis on ties) through the two
/// faces of `inner` perpendicular to it, keeps the outer slabs and continues
/// with the middle part until it coincides with `inner`. Zero-width slabs
/// are dropped.
inline std::vector<Box> slab_decompose(const Box& box, const Box& inner) {
  const std::size_t n = box.dim();
  if (inner.dim() != n || !box.contains(inner))
    throw std::invalid_argument("slab_decompose: inner box not contained in outer box");
  for (std::size_t i = 0; i < n; ++i) {
    const double c_outer = box.lower(i) + box.upper(i);
    const double c_inner = inner.lower(i) + inner.upper(i);
    const double scale = std::max({std::abs(box.lower(i)), std::abs(box.upper(i)), box.width(i)});
    if (std::abs(c_outer - c_inner) > 1e-12 * scale * 2.0)
      throw std::invalid_argument("slab_decompose: inner box is not centred in outer box");
  }

  std::vector<Box> slabs;
  Point mid_lo = box.lower();
  Point mid_hi = box.upper();
  for (;;) {
    std::size_t axis = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (mid_lo[i] == inner.lower(i) && mid_hi[i] == inner.upper(i)) continue;
      if (axis == n || mid_hi[i] - mid_lo[i] > mid_hi[axis] - mid_lo[axis]) axis = i;
    }
    if (axis == n) break;

    if (inner.lower(axis) > mid_lo[axis]) {
      Point hi = mid_hi;
      hi[axis] = inner.lower(axis);
      slabs.emplace_back(mid_lo, std::move(hi));
    }
    if (inner.upper(axis) < mid_hi[axis]) {
      Point lo = mid_lo;
      lo[axis] = inner.upper(axis);
      slabs.emplace_back(std::move(lo), mid_hi);
    }
    mid_lo[axis] = inner.lower(axis);
    mid_hi[axis] = inner.upper(axis);
  }
  return slabs;
}

}  // namespace nucover
