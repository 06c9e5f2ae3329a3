#include "frechet/simplex.hpp"

#include <cmath>
#include <limits>

#include "frechet/error.hpp"

namespace frechet::lp {

namespace {

class Tableau {
 public:
  // Rows 0..m-1 are constraints, row m is the objective (reduced costs);
  // the last column holds the right-hand side.
  Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_((rows + 1) * (cols + 1), 0.0), basis_(rows) {}

  double& at(std::size_t r, std::size_t c) { return t_[r * (n_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, n_); }
  double& cost(std::size_t c) { return at(m_, c); }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double p = at(pr, pc);
    for (std::size_t c = 0; c <= n_; ++c) at(pr, c) /= p;
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= n_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
  }

  // Runs simplex iterations over columns [0, active). Returns false if unbounded.
  bool optimize(std::size_t active, double eps) {
    while (true) {
      std::size_t enter = active;
      for (std::size_t c = 0; c < active; ++c) {
        if (cost(c) < -eps) {
          enter = c;
          break;
        }
      }
      if (enter == active) return true;
      std::size_t leave = m_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < m_; ++r) {
        const double a = at(r, enter);
        if (a <= eps) continue;
        const double ratio = rhs(r) / a;
        if (leave == m_ || ratio < best - eps ||
            (std::abs(ratio - best) <= eps && basis_[r] < basis_[leave])) {
          best = ratio;
          leave = r;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

 private:
  std::size_t m_, n_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Solution minimize(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                  const std::vector<double>& c, double eps) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw Error(ErrorCode::DimensionMismatch, "lp: rows of A and b");
  for (const auto& row : a) {
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "lp: columns of A and c");
  }

  // Phase 1: one artificial per row, minimize their sum.
  Tableau t(m, n + m);
  for (std::size_t r = 0; r < m; ++r) {
    const double sign = b[r] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t.at(r, j) = sign * a[r][j];
    t.at(r, n + r) = 1.0;
    t.rhs(r) = sign * b[r];
    t.basis()[r] = n + r;
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j <= n + m; ++j) {
      if (j < n || j == n + m) t.cost(j) -= t.at(r, j);
    }
  }
  t.optimize(n + m, eps);

  Solution sol;
  if (-t.rhs(m) > 1e3 * eps) {
    sol.status = Status::Infeasible;
    return sol;
  }

  // Drive remaining artificials out of the basis; rows where that is
  // impossible are redundant and stay pinned at zero.
  for (std::size_t r = 0; r < m; ++r) {
    if (t.basis()[r] < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(t.at(r, j)) > eps) {
        t.pivot(r, j);
        break;
      }
    }
  }

  // Phase 2 over the original columns; artificials are barred from entering.
  for (std::size_t j = 0; j <= n + m; ++j) t.cost(j) = 0.0;
  for (std::size_t j = 0; j < n; ++j) t.cost(j) = c[j];
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t bj = t.basis()[r];
    if (bj >= n) continue;
    const double cb = c[bj];
    if (cb == 0.0) continue;
    for (std::size_t j = 0; j <= n + m; ++j) t.cost(j) -= cb * t.at(r, j);
  }
  if (!t.optimize(n, eps)) {
    sol.status = Status::Unbounded;
    return sol;
  }

  sol.status = Status::Optimal;
  sol.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    if (t.basis()[r] < n) sol.x[t.basis()[r]] = std::max(0.0, t.rhs(r));
  }
  sol.value = 0.0;
  for (std::size_t j = 0; j < n; ++j) sol.value += c[j] * sol.x[j];
  return sol;
}

}  // namespace frechet::lp
