#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "morpheval/morphdata.hpp"
#include "morpheval/parallel.hpp"
#include "morpheval/tokenizer.hpp"

namespace morpheval {

struct TrainerConfig {
  std::size_t target_vocab_size = 0;
  std::uint64_t min_pair_frequency = 2;
  std::vector<std::string> special_tokens = {"[UNK]"};
  std::string continuation_marker = "##";
};

struct TrainResult {
  Vocabulary vocab;
  std::size_t merges = 0;
  // True when no pair cleared the frequency floor before the target size was
  // reached; the vocabulary is smaller than requested.
  bool exhausted = false;
};

// Likelihood-driven pair merging over word-internal pieces: each step merges
// the adjacent pair maximizing freq(pair) / (freq(left) * freq(right)), ties
// broken by higher pair frequency, then by the lexicographically smaller
// merged entry. Deterministic for a fixed corpus and config; growing only
// the target size extends the vocabulary without changing earlier entries.
TrainResult train_wordpiece(const Corpus& corpus, const TrainerConfig& config,
                            Execution exec = Execution::Parallel);

// Words by descending corpus frequency, ties alphabetical.
std::vector<std::pair<std::string, std::uint64_t>> rank_words(const Corpus& corpus);

// Whole-word vocabulary of the k most frequent words (plus [UNK]).
Vocabulary top_k_vocab(const std::vector<std::pair<std::string, std::uint64_t>>& ranking,
                       std::size_t k);

}  // namespace morpheval
