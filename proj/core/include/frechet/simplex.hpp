#pragma once

#include <vector>

namespace frechet::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  std::vector<double> x;
  double value = 0.0;
};

/// Dense two-phase simplex with Bland's rule for
///   minimize c·x  subject to  A x = b,  x ≥ 0.
/// Sized for the small feasibility problems the hull code poses.
Solution minimize(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                  const std::vector<double>& c, double eps = 1e-11);

}  // namespace frechet::lp
