#pragma once

#include <vector>

namespace hetvenet {

// Minimum-cost assignment of n rows to distinct columns of an n x m cost
// matrix, n <= m. Returns the chosen column per row. Hungarian algorithm
// with potentials, O(n^2 m); deterministic for equal-cost optima.
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost);

}  // namespace hetvenet
