#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "morpheval/parallel.hpp"

namespace morpheval {

// Everything a CLI verb needs. All randomness (bootstrap only) flows from
// `seed`.
struct RunConfig {
  std::string tokenizer = "wordpiece";
  std::filesystem::path vocab_path;  // vocab.txt, or the JSONL map for pretokenized
  std::vector<std::filesystem::path> gold_paths;
  std::filesystem::path corpus_path;
  std::filesystem::path test_corpus_path;
  std::vector<std::size_t> vocab_sizes;
  std::vector<std::size_t> top_k;
  std::size_t affix_top = 200;
  std::size_t bootstrap_resamples = 0;
  std::uint64_t seed = 0;
  std::uint64_t min_pair_frequency = 2;
  std::vector<std::string> special_tokens = {"[UNK]"};
  std::string continuation_marker = "##";
  std::filesystem::path out_dir = ".";
  std::vector<std::string> formats = {"json", "csv"};
  Execution exec = Execution::Parallel;
};

// Each verb returns 0 on success; fatal problems (missing inputs, bad
// configuration) throw, and the CLI maps exceptions to exit code 1.
// Per-item data issues are counted and reported, never fatal.
int run_train(const RunConfig& cfg);
int run_evaluate(const RunConfig& cfg);
int run_sweep(const RunConfig& cfg);
int run_coverage(const RunConfig& cfg);

}  // namespace morpheval
