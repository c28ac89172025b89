#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "morpheval/morphdata.hpp"

namespace morpheval {

// One point of the vocabulary-size/coverage trade-off: a whole-word
// vocabulary of the k most frequent training words, scored on train and
// test token mass.
struct CoveragePoint {
  std::size_t k = 0;
  double vocab_fraction = 0;  // k over the training type count
  double train_token_coverage = 0;
  double test_token_coverage = 0;
  double test_type_coverage = 0;
  double test_oov_rate = 0;  // 1 - test_token_coverage
};

// ks must lie in [1, ranking size] (out-of-range is an error); the input
// order is kept. Coverage is monotone non-decreasing in k, and k equal to
// the full type count gives train coverage exactly 1.
std::vector<CoveragePoint> coverage_curve(
    const std::vector<std::pair<std::string, std::uint64_t>>& ranking, const Corpus& train,
    const Corpus& test, std::span<const std::size_t> ks);

// 20 log-spaced sizes from 1% of the type count (at least 1) up to the full
// type count, deduplicated.
std::vector<std::size_t> default_ks(std::size_t type_count);

}  // namespace morpheval
