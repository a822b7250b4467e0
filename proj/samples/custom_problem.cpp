// Minimises a user-defined non-Lipschitz function with both solvers.
//
//   f(x) = sqrt(|x0 - 0.3|) + sqrt(|x1 + 0.2|)  on [-1, 1]^2
//
// Each term obeys |sqrt|a| - sqrt|b|| <= sqrt|a - b| <= |a - b| / (4 eta) + eta,
// so with both terms together L(eta) = 1/(2 eta) is a valid 1-norm modulus
// (splitting eta between the terms).

#include <cmath>
#include <cstdio>

#include "nucover/nucover.hpp"

int main() {
  using namespace nucover;
  auto objective = [](std::span<const double> x) {
    return std::sqrt(std::abs(x[0] - 0.3)) + std::sqrt(std::abs(x[1] + 0.2));
  };
  const Box domain{{-1.0, 1.0}, {-1.0, 1.0}};

  Problem covering(objective, VanderbeiModulus::rational(0.5, 0.0), domain);
  CoverOptions copt;
  copt.scheme = TraversalScheme::s1a;
  const RunResult a = solve_cover(covering, 0.1, 0.05, copt);
  std::printf("cover: F = %.6f at (%.4f, %.4f), %zu boxes\n", a.best_value, a.best_point[0], a.best_point[1],
              a.n_total);

  // Branch and bound wants inf L > 0; a small constant term keeps it there.
  Problem bnb(objective, VanderbeiModulus::rational(0.5, 0.1), domain);
  BnbOptions bopt;
  bopt.gamma = 0.05;
  const RunResult b = solve_bnb(bnb, 0.1, bopt);
  std::printf("bnb:   F = %.6f at (%.4f, %.4f), %zu boxes, theta = %.3f\n", b.best_value, b.best_point[0],
              b.best_point[1], b.n_total, *b.theta);
  return a.converged() && b.converged() ? 0 : 1;
}
