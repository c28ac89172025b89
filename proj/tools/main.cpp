#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "morpheval/runner.hpp"

namespace {

std::size_t parse_size(const std::string& raw) {
  std::string s = raw;
  std::uint64_t scale = 1;
  if (!s.empty() && (s.back() == 'k' || s.back() == 'K')) {
    scale = 1000;
    s.pop_back();
  }
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw CLI::ValidationError("--vocab-sizes", "not a size: '" + raw + "'");
  return static_cast<std::size_t>(std::stoull(s) * scale);
}

std::vector<std::size_t> parse_sizes(const std::vector<std::string>& raw) {
  std::vector<std::size_t> sizes;
  sizes.reserve(raw.size());
  for (const std::string& r : raw) sizes.push_back(parse_size(r));
  return sizes;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(',', start);
    out.push_back(trim(s.substr(start, pos == std::string::npos ? pos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

// Trainer options given on the command line; a config file only fills the
// ones the user did not type.
struct TrainerOptions {
  CLI::Option* sizes = nullptr;
  CLI::Option* min_freq = nullptr;
  CLI::Option* specials = nullptr;
  CLI::Option* marker = nullptr;
};

// Flat key=value file; a line whose first non-blank character is '#' is a
// comment (no inline comments: values like a '##' marker must survive).
// Keys are the long trainer option names without the dashes prefix:
// vocab-sizes, min-pair-freq, specials, marker.
void apply_trainer_config(const std::filesystem::path& file, const TrainerOptions& given,
                          morpheval::RunConfig& cfg, std::vector<std::string>& raw_sizes) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("--trainer-config: cannot open " + file.string());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("--trainer-config: line " + std::to_string(lineno) +
                               ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "vocab-sizes") {
      if (given.sizes->count() == 0) raw_sizes = split_commas(value);
    } else if (key == "min-pair-freq") {
      if (given.min_freq->count() == 0) cfg.min_pair_frequency = std::stoull(value);
    } else if (key == "specials") {
      if (given.specials->count() == 0) cfg.special_tokens = split_commas(value);
    } else if (key == "marker") {
      if (given.marker->count() == 0) cfg.continuation_marker = value;
    } else {
      throw std::runtime_error("--trainer-config: line " + std::to_string(lineno) +
                               ": unknown key '" + key + "'");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subword tokenizer evaluation against gold morphological analyses"};
  app.require_subcommand(1);

  morpheval::RunConfig cfg;
  std::vector<std::string> raw_sizes;
  std::filesystem::path trainer_config;
  bool serial = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
    sub->add_flag("--serial", serial, "Disable parallel execution");
  };
  auto add_trainer = [&](CLI::App* sub) {
    TrainerOptions opts;
    opts.sizes = sub->add_option("--vocab-sizes", raw_sizes,
                                 "Target vocabulary sizes (accepts a k suffix: 8k = 8000)")
                     ->delimiter(',');
    opts.min_freq = sub->add_option("--min-pair-freq", cfg.min_pair_frequency,
                                    "Minimum pair frequency for a merge")
                        ->capture_default_str();
    opts.specials = sub->add_option("--specials", cfg.special_tokens,
                                    "Special tokens placed first")
                        ->delimiter(',')
                        ->capture_default_str();
    opts.marker = sub->add_option("--marker", cfg.continuation_marker, "Continuation marker")
                      ->capture_default_str();
    sub->add_option("--trainer-config", trainer_config,
                    "Flat key=value file (vocab-sizes, min-pair-freq, specials, marker); "
                    "typed flags win");
    return opts;
  };
  auto add_eval = [&](CLI::App* sub) {
    sub->add_option("--gold", cfg.gold_paths, "Gold analysis JSONL file(s)")
        ->required()
        ->delimiter(',');
    sub->add_option("--affix-top", cfg.affix_top, "Number of most frequent suffix types scored")
        ->capture_default_str();
    sub->add_option("--bootstrap", cfg.bootstrap_resamples,
                    "Bootstrap resamples for confidence intervals (0 = off)")
        ->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Bootstrap seed")->capture_default_str();
    sub->add_option("--format", cfg.formats, "Report formats")
        ->delimiter(',')
        ->check(CLI::IsMember({"json", "csv", "md"}))
        ->capture_default_str();
  };

  CLI::App* train = app.add_subcommand("train", "Train subword vocabularies");
  train->add_option("--corpus", cfg.corpus_path, "Training corpus, one document per line")
      ->required();
  TrainerOptions train_topts = add_trainer(train);
  add_common(train);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a tokenizer against gold analyses");
  eval->add_option("--tokenizer", cfg.tokenizer, "Tokenization scheme")
      ->check(CLI::IsMember({"char", "word", "wordpiece", "pretokenized"}))
      ->capture_default_str();
  eval->add_option("--vocab", cfg.vocab_path,
                   "vocab.txt (word/wordpiece) or tokenization JSONL (pretokenized)");
  eval->add_option("--marker", cfg.continuation_marker, "Continuation marker")
      ->capture_default_str();
  add_eval(eval);
  add_common(eval);

  CLI::App* sweep = app.add_subcommand("sweep", "Train a size ladder and evaluate every rung");
  sweep->add_option("--corpus", cfg.corpus_path, "Training corpus, one document per line")
      ->required();
  TrainerOptions sweep_topts = add_trainer(sweep);
  add_eval(sweep);
  add_common(sweep);

  CLI::App* coverage = app.add_subcommand("coverage", "Top-k word-vocabulary coverage curve");
  coverage->add_option("--corpus", cfg.corpus_path, "Training corpus")->required();
  coverage->add_option("--test-corpus", cfg.test_corpus_path, "Held-out corpus")->required();
  coverage->add_option("--top-k", cfg.top_k, "Vocabulary sizes k (default: 20 log-spaced)")
      ->delimiter(',');
  add_common(coverage);

  CLI11_PARSE(app, argc, argv);

  cfg.exec = serial ? morpheval::Execution::Serial : morpheval::Execution::Parallel;
  try {
    if (!trainer_config.empty()) {
      const TrainerOptions& topts = app.got_subcommand(sweep) ? sweep_topts : train_topts;
      apply_trainer_config(trainer_config, topts, cfg, raw_sizes);
    }
    if (!raw_sizes.empty()) cfg.vocab_sizes = parse_sizes(raw_sizes);
    if (app.got_subcommand(train)) return morpheval::run_train(cfg);
    if (app.got_subcommand(eval)) return morpheval::run_evaluate(cfg);
    if (app.got_subcommand(sweep)) return morpheval::run_sweep(cfg);
    if (app.got_subcommand(coverage)) return morpheval::run_coverage(cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
