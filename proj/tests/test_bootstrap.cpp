#include <doctest.h>

#include <vector>

#include "morpheval/bootstrap.hpp"

using namespace morpheval;

namespace {

double mean(std::span<const double> v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

TEST_CASE("percentile interval uses nearest ranks from the sample") {
  ConfidenceInterval ci = percentile_interval({3.0, 1.0, 2.0});
  CHECK(ci.low == 1.0);   // ceil(0.025 * 3) = 1 -> first order statistic
  CHECK(ci.high == 3.0);  // ceil(0.975 * 3) = 3 -> last

  ConfidenceInterval one = percentile_interval({5.0});
  CHECK(one.low == 5.0);
  CHECK(one.high == 5.0);
}

TEST_CASE("bootstrap is deterministic under a fixed seed") {
  // Many distinct values so resample means are dense: on a coarse sample two
  // seeds can legitimately share both percentile endpoints.
  std::vector<double> items;
  for (int i = 0; i <= 100; ++i) items.push_back(0.01 * i);
  ConfidenceInterval a = bootstrap_ci(std::span<const double>(items), mean, 500, 42);
  ConfidenceInterval b = bootstrap_ci(std::span<const double>(items), mean, 500, 42);
  CHECK(a.low == b.low);
  CHECK(a.high == b.high);
  CHECK(a.low <= a.high);

  ConfidenceInterval other = bootstrap_ci(std::span<const double>(items), mean, 500, 43);
  CHECK((other.low != a.low || other.high != a.high));
}

TEST_CASE("zero variance gives a degenerate interval") {
  std::vector<double> items(10, 0.25);
  ConfidenceInterval ci = bootstrap_ci(std::span<const double>(items), mean, 200, 0);
  CHECK(ci.low == 0.25);
  CHECK(ci.high == 0.25);
}

TEST_CASE("two-item resample means stay on the three possible values") {
  std::vector<double> items{1.0, 0.5};
  ConfidenceInterval ci = bootstrap_ci(std::span<const double>(items), mean, 1000, 42);
  auto is_possible = [](double x) { return x == 0.5 || x == 0.75 || x == 1.0; };
  CHECK(is_possible(ci.low));
  CHECK(is_possible(ci.high));
  CHECK(ci.low <= ci.high);
}

TEST_CASE("empty inputs and zero resamples give the null interval") {
  std::vector<double> items{1.0};
  ConfidenceInterval none = bootstrap_ci(std::span<const double>(items), mean, 0, 0);
  CHECK(none.low == 0.0);
  CHECK(none.high == 0.0);
  ConfidenceInterval empty = bootstrap_ci(std::span<const double>(), mean, 100, 0);
  CHECK(empty.low == 0.0);
  CHECK(empty.high == 0.0);
}
