#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "morpheval/parallel.hpp"

namespace morpheval {

struct ConfidenceInterval {
  double low = 0.0;
  double high = 0.0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Multiply-shift bounded draw; unbiased enough for resampling and fast.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

}  // namespace detail

// Nearest-rank percentile bounds of the 0.025 and 0.975 quantiles; both ends
// are always elements of `stats`.
ConfidenceInterval percentile_interval(std::vector<double> stats);

// Percentile-bootstrap confidence interval: `resamples` draws of n items
// with replacement, statistic evaluated on each. Each resample derives its
// own RNG stream from (seed, resample index), so serial and parallel
// execution produce identical intervals. The seed passes through its own
// mixing round first: xor-ing the raw seed with the index would give nearby
// seeds permutations of the same stream set, hence identical intervals.
template <class Item, class Fn>
ConfidenceInterval bootstrap_ci(std::span<const Item> items, Fn&& stat, std::size_t resamples,
                                std::uint64_t seed, Execution exec = Execution::Parallel) {
  if (items.empty() || resamples == 0) return {};
  std::vector<double> stats(resamples);
  std::uint64_t mixed = detail::splitmix64(seed);
  for_each_index(resamples, exec, [&](std::size_t r) {
    std::mt19937_64 rng(detail::splitmix64(mixed ^ (0x51ED2701A2B5F3C4ULL + r)));
    std::vector<Item> sample;
    sample.reserve(items.size());
    for (std::size_t j = 0; j < items.size(); ++j)
      sample.push_back(items[detail::bounded(rng, items.size())]);
    stats[r] = stat(std::span<const Item>(sample));
  });
  return percentile_interval(std::move(stats));
}

}  // namespace morpheval
