#include "jspec/assignment.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace jspec {

namespace {

std::vector<int> hungarian(const CostMatrix& a) {
  const int n = static_cast<int>(a.size());
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based potentials; p[j] is the row matched to column j.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = a[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> match(n, -1);
  for (int j = 1; j <= n; ++j) match[p[j] - 1] = j - 1;
  return match;
}

std::vector<int> greedy(const CostMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::pair<int, int>> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cells.emplace_back(i, j);
  std::stable_sort(cells.begin(), cells.end(),
                   [&](auto l, auto r) { return a[l.first][l.second] < a[r.first][r.second]; });
  std::vector<int> match(n, -1);
  std::vector<char> taken(n, 0);
  for (auto [i, j] : cells) {
    if (match[i] >= 0 || taken[j]) continue;
    match[i] = j;
    taken[j] = 1;
  }
  return match;
}

}  // namespace

std::vector<int> min_cost_assignment(const CostMatrix& cost, int exact_limit) {
  if (cost.empty()) return {};
  return static_cast<int>(cost.size()) <= exact_limit ? hungarian(cost) : greedy(cost);
}

double assignment_cost(const CostMatrix& cost, const std::vector<int>& match) {
  double total = 0.0;
  for (std::size_t i = 0; i < match.size(); ++i) total += cost[i][static_cast<std::size_t>(match[i])];
  return total;
}

}  // namespace jspec
