#include "morpheval/bootstrap.hpp"

#include <algorithm>
#include <cmath>

namespace morpheval {

ConfidenceInterval percentile_interval(std::vector<double> stats) {
  if (stats.empty()) return {};
  std::sort(stats.begin(), stats.end());
  auto rank = [&](double q) {
    double r = std::ceil(q * static_cast<double>(stats.size()));
    std::size_t idx = r < 1.0 ? 0 : static_cast<std::size_t>(r) - 1;
    return std::min(idx, stats.size() - 1);
  };
  return {stats[rank(0.025)], stats[rank(0.975)]};
}

}  // namespace morpheval
