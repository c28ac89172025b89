#include "morpheval/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "morpheval/tokenizer.hpp"

namespace morpheval {

std::vector<CoveragePoint> coverage_curve(
    const std::vector<std::pair<std::string, std::uint64_t>>& ranking, const Corpus& train,
    const Corpus& test, std::span<const std::size_t> ks) {
  if (ranking.empty()) throw std::invalid_argument("coverage_curve: empty ranking");

  std::size_t v = ranking.size();
  std::vector<double> train_prefix(v + 1, 0.0), test_prefix(v + 1, 0.0);
  std::vector<std::uint64_t> test_type_prefix(v + 1, 0);

  std::unordered_map<std::string, std::size_t, StringHash, std::equal_to<>> rank_of;
  rank_of.reserve(v);
  for (std::size_t i = 0; i < v; ++i) rank_of.emplace(ranking[i].first, i);

  for (std::size_t i = 0; i < v; ++i)
    train_prefix[i + 1] = train_prefix[i] + static_cast<double>(ranking[i].second);

  std::vector<std::uint64_t> test_at_rank(v, 0);
  std::vector<std::uint64_t> test_types_at_rank(v, 0);
  std::uint64_t test_total = 0, test_types = 0;
  for (const auto& [word, count] : test.word_counts) {
    test_total += count;
    ++test_types;
    auto it = rank_of.find(word);
    if (it != rank_of.end()) {
      test_at_rank[it->second] += count;
      ++test_types_at_rank[it->second];
    }
  }
  for (std::size_t i = 0; i < v; ++i) {
    test_prefix[i + 1] = test_prefix[i] + static_cast<double>(test_at_rank[i]);
    test_type_prefix[i + 1] = test_type_prefix[i] + test_types_at_rank[i];
  }

  std::vector<std::size_t> sizes(ks.begin(), ks.end());
  for (std::size_t k : sizes)
    if (k < 1 || k > v)
      throw std::invalid_argument("coverage_curve: k=" + std::to_string(k) +
                                  " outside [1, " + std::to_string(v) + "]");
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  double train_total = static_cast<double>(train.total_tokens);
  std::vector<CoveragePoint> out;
  out.reserve(sizes.size());
  for (std::size_t k : sizes) {
    CoveragePoint p;
    p.k = k;
    p.vocab_fraction = static_cast<double>(k) / static_cast<double>(v);
    p.train_token_coverage = train_total == 0.0 ? 0.0 : train_prefix[k] / train_total;
    p.test_token_coverage =
        test_total == 0 ? 0.0 : test_prefix[k] / static_cast<double>(test_total);
    p.test_type_coverage = test_types == 0 ? 0.0
                                           : static_cast<double>(test_type_prefix[k]) /
                                                 static_cast<double>(test_types);
    p.test_oov_rate = 1.0 - p.test_token_coverage;
    out.push_back(p);
  }
  return out;
}

// 20 log-spaced sizes between 1% and 100% of the type count.
std::vector<std::size_t> default_ks(std::size_t type_count) {
  std::vector<std::size_t> ks;
  if (type_count == 0) return ks;
  double hi = static_cast<double>(type_count);
  double lo = std::max(1.0, std::round(hi / 100.0));
  for (int i = 0; i < 20; ++i) {
    double t = static_cast<double>(i) / 19.0;
    double k = lo * std::pow(hi / lo, t);
    ks.push_back(static_cast<std::size_t>(std::llround(k)));
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

}  // namespace morpheval
