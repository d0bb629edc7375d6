#pragma once

#include <vector>

namespace jspec {

using CostMatrix = std::vector<std::vector<double>>;

/// Minimum-cost perfect matching on a square cost matrix; result[row] = column.
/// Exact (Hungarian, O(n³)) up to `exact_limit` rows, greedy by ascending cost
/// above it.
std::vector<int> min_cost_assignment(const CostMatrix& cost, int exact_limit = 16);

double assignment_cost(const CostMatrix& cost, const std::vector<int>& match);

}  // namespace jspec
