#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geometry.hpp"
#include "modulus.hpp"

namespace nucover {

using Objective = std::function<double(std::span<const double>)>;

/// Objective + modulus + domain. Every call through evaluate() is counted;
/// a solver owns its Problem for the duration of a run.
class Problem {
 public:
  Problem(Objective objective, VanderbeiModulus modulus, Box domain, std::string name = "custom")
      : objective_(std::move(objective)),
        modulus_(std::move(modulus)),
        domain_(std::move(domain)),
        name_(std::move(name)) {
    if (!objective_) throw std::invalid_argument("Problem: empty objective");
    if (!domain_.non_degenerate()) throw std::invalid_argument("Problem: degenerate domain");
  }

  double evaluate(std::span<const double> x) {
    ++evaluations_;
    return objective_(x);
  }

  // Uncounted evaluation, for verification code that must not perturb the counter.
  double peek(std::span<const double> x) const { return objective_(x); }

  const Objective& objective() const noexcept { return objective_; }
  const VanderbeiModulus& modulus() const noexcept { return modulus_; }
  const Box& domain() const noexcept { return domain_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t evaluations() const noexcept { return evaluations_; }
  void add_evaluations(std::size_t n) noexcept { evaluations_ += n; }
  void reset_evaluations() noexcept { evaluations_ = 0; }

 private:
  Objective objective_;
  VanderbeiModulus modulus_;
  Box domain_;
  std::string name_;
  std::size_t evaluations_ = 0;
};

enum class RunStatus { converged, budget_exceeded };

inline std::string_view to_string(RunStatus s) {
  return s == RunStatus::converged ? "converged" : "budget_exceeded";
}

enum class StepKind { cover, discard, bisect, cut_and_split };

inline std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::cover: return "cover";
    case StepKind::discard: return "discard";
    case StepKind::bisect: return "bisect";
    case StepKind::cut_and_split: return "cut_and_split";
  }
  return "?";
}

/// One iteration of either solver. `step` is h' for the covering method and
/// r_k for branch and bound; `pending` is the list size after the iteration.
struct TraceRow {
  std::size_t k = 0;
  double step = 0.0;
  double record = 0.0;
  std::size_t pending = 0;
  StepKind op = StepKind::cover;
  double covered_volume = 0.0;
};

struct RunResult {
  RunStatus status = RunStatus::converged;
  Point best_point;
  double best_value = 0.0;
  std::size_t n_total = 0;  // boxes processed (cover) / boxes created (bnb)
  std::size_t n_opt = 0;    // 1-based box index of the last strict record improvement
  std::size_t evaluations = 0;
  std::size_t iterations = 0;
  std::optional<double> theta;  // bnb only: cut_and_split count / bisect count
  std::size_t discard_steps = 0;
  std::size_t bisect_steps = 0;
  std::size_t cut_steps = 0;
  double covered_volume = 0.0;
  std::vector<TraceRow> trace;

  bool converged() const noexcept { return status == RunStatus::converged; }
};

}  // namespace nucover
