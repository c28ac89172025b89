#include "morpheval/runner.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <stdexcept>

#include "morpheval/coverage.hpp"
#include "morpheval/metrics.hpp"
#include "morpheval/morphdata.hpp"
#include "morpheval/report.hpp"
#include "morpheval/text.hpp"
#include "morpheval/tokenizer.hpp"
#include "morpheval/trainer.hpp"

namespace morpheval {

namespace {

void require_file(const std::filesystem::path& p, const char* what) {
  if (p.empty()) throw std::invalid_argument(std::string(what) + " path not set");
  if (!std::filesystem::exists(p))
    throw std::runtime_error(std::string(what) + " not found: " + p.string());
}

void prepare_out_dir(const RunConfig& cfg) {
  if (!cfg.out_dir.empty()) std::filesystem::create_directories(cfg.out_dir);
}

bool wants(const RunConfig& cfg, std::string_view format) {
  return std::find(cfg.formats.begin(), cfg.formats.end(), format) != cfg.formats.end();
}

void log_notice_once() {
  static bool logged = false;
  if (!logged) {
    std::cerr << text::normalization_notice() << "\n";
    logged = true;
  }
}

void log_issues(const std::string& label, const std::vector<LineIssue>& issues) {
  if (issues.empty()) return;
  std::cerr << label << ": " << issues.size() << " line(s) skipped\n";
  std::size_t shown = 0;
  for (const LineIssue& issue : issues) {
    if (++shown > 5) {
      std::cerr << "  ...\n";
      break;
    }
    std::cerr << "  line " << issue.line << ": " << issue.message << "\n";
  }
}

Tokenizer make_tokenizer(const RunConfig& cfg) {
  TokenizerKind kind = tokenizer_kind_from_string(cfg.tokenizer);
  switch (kind) {
    case TokenizerKind::Char:
      return Tokenizer::chars();
    case TokenizerKind::Word: {
      require_file(cfg.vocab_path, "--vocab");
      return Tokenizer::words(Vocabulary::load(cfg.vocab_path));
    }
    case TokenizerKind::WordPiece: {
      require_file(cfg.vocab_path, "--vocab");
      return Tokenizer::wordpiece(Vocabulary::load(cfg.vocab_path));
    }
    case TokenizerKind::Pretok: {
      require_file(cfg.vocab_path, "--vocab (pretokenized JSONL)");
      Pretokenized p = load_pretokenized(cfg.vocab_path, cfg.continuation_marker);
      log_issues("pretokenized " + cfg.vocab_path.string(), p.issues);
      if (p.duplicates)
        std::cerr << "pretokenized: " << p.duplicates << " duplicate word(s) overridden\n";
      return Tokenizer::pretokenized(std::move(p));
    }
  }
  throw std::logic_error("unreachable tokenizer kind");
}

std::string split_name(const std::filesystem::path& gold) {
  return gold.stem().string();
}

EvalOptions eval_options(const RunConfig& cfg) {
  EvalOptions opt;
  opt.affix_top = cfg.affix_top;
  opt.bootstrap_resamples = cfg.bootstrap_resamples;
  opt.seed = cfg.seed;
  opt.exec = cfg.exec;
  return opt;
}

MetricsReport evaluate_split(const RunConfig& cfg, const Tokenizer& tok,
                             const std::filesystem::path& gold_path) {
  GoldLoadResult gold = load_gold(gold_path);
  log_issues("gold " + gold_path.string(), gold.issues);
  Evaluation ev = evaluate(gold.items, tok, eval_options(cfg));
  return ev.report;
}

void write_report(const RunConfig& cfg, const std::string& stem, const std::string& split,
                  const std::string& tokenizer, const MetricsReport& rep) {
  if (wants(cfg, "json"))
    write_text_atomic(cfg.out_dir / (stem + ".json"), report_json(rep).dump(2) + "\n");
  if (wants(cfg, "csv"))
    write_text_atomic(cfg.out_dir / (stem + ".csv"),
                      csv_header() + "\n" + csv_row(split, tokenizer, rep) + "\n");
  if (wants(cfg, "md"))
    write_text_atomic(cfg.out_dir / (stem + ".md"),
                      "### " + split + " / " + tokenizer + "\n\n```\n" + console_summary(rep) +
                          "```\n");
}

TrainerConfig trainer_config(const RunConfig& cfg, std::size_t target) {
  TrainerConfig tc;
  tc.target_vocab_size = target;
  tc.min_pair_frequency = cfg.min_pair_frequency;
  tc.special_tokens = cfg.special_tokens;
  tc.continuation_marker = cfg.continuation_marker;
  return tc;
}

std::vector<std::size_t> sorted_sizes(const RunConfig& cfg) {
  if (cfg.vocab_sizes.empty())
    throw std::invalid_argument("--vocab-sizes: at least one target size required");
  std::vector<std::size_t> sizes = cfg.vocab_sizes;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  return sizes;
}

}  // namespace

int run_train(const RunConfig& cfg) {
  log_notice_once();
  require_file(cfg.corpus_path, "--corpus");
  std::vector<std::size_t> sizes = sorted_sizes(cfg);
  prepare_out_dir(cfg);
  Corpus corpus = load_corpus(cfg.corpus_path, cfg.exec);
  for (std::size_t size : sizes) {
    TrainResult tr = train_wordpiece(corpus, trainer_config(cfg, size), cfg.exec);
    std::filesystem::path out = cfg.out_dir / ("vocab_" + std::to_string(size) + ".txt");
    tr.vocab.save(out);
    std::cout << out.string() << ": " << tr.vocab.size() << " entries, " << tr.merges
              << " merges" << (tr.exhausted ? " (exhausted before target)" : "") << "\n";
  }
  return 0;
}

int run_evaluate(const RunConfig& cfg) {
  log_notice_once();
  if (cfg.gold_paths.empty()) throw std::invalid_argument("--gold: at least one file required");
  for (const auto& g : cfg.gold_paths) require_file(g, "--gold");
  Tokenizer tok = make_tokenizer(cfg);
  prepare_out_dir(cfg);
  for (const auto& gold_path : cfg.gold_paths) {
    std::string split = split_name(gold_path);
    MetricsReport rep = evaluate_split(cfg, tok, gold_path);
    write_report(cfg, split + "." + cfg.tokenizer + ".report", split, cfg.tokenizer, rep);
    std::cout << "== " << split << " / " << cfg.tokenizer << " ==\n"
              << console_summary(rep) << "\n";
  }
  return 0;
}

int run_sweep(const RunConfig& cfg) {
  log_notice_once();
  require_file(cfg.corpus_path, "--corpus");
  if (cfg.gold_paths.empty()) throw std::invalid_argument("--gold: at least one file required");
  for (const auto& g : cfg.gold_paths) require_file(g, "--gold");
  std::vector<std::size_t> sizes = sorted_sizes(cfg);
  prepare_out_dir(cfg);
  Corpus corpus = load_corpus(cfg.corpus_path, cfg.exec);

  std::vector<SweepRow> rows;
  std::vector<std::string> previous_entries;
  for (std::size_t size : sizes) {
    Vocabulary vocab;
    try {
      TrainResult tr = train_wordpiece(corpus, trainer_config(cfg, size), cfg.exec);
      vocab = std::move(tr.vocab);
      std::filesystem::path vocab_out = cfg.out_dir / ("vocab_" + std::to_string(size) + ".txt");
      vocab.save(vocab_out);
      if (tr.exhausted)
        std::cerr << "size " << size << ": merges exhausted at " << vocab.size()
                  << " entries\n";
    } catch (const std::exception& e) {
      std::cerr << "size " << size << ": training failed: " << e.what() << "\n";
      for (const auto& gold_path : cfg.gold_paths) {
        SweepRow row;
        row.vocab_size = size;
        row.split = split_name(gold_path);
        row.failed = true;
        row.error = e.what();
        rows.push_back(std::move(row));
      }
      continue;
    }

    // Deterministic merge order makes smaller targets prefixes of larger
    // ones; verify and log rather than assume.
    if (!previous_entries.empty()) {
      bool contained = vocab.size() >= previous_entries.size() &&
                       std::equal(previous_entries.begin(), previous_entries.end(),
                                  vocab.entries().begin());
      std::cerr << "containment " << previous_entries.size() << " -> " << vocab.size() << ": "
                << (contained ? "ok" : "VIOLATED") << "\n";
    }
    previous_entries = vocab.entries();

    Tokenizer tok = Tokenizer::wordpiece(vocab);
    for (const auto& gold_path : cfg.gold_paths) {
      SweepRow row;
      row.vocab_size = size;
      row.split = split_name(gold_path);
      try {
        row.report = evaluate_split(cfg, tok, gold_path);
        write_report(cfg, "report_" + row.split + "_" + std::to_string(size), row.split,
                     "wordpiece", row.report);
      } catch (const std::exception& e) {
        row.failed = true;
        row.error = e.what();
        std::cerr << "size " << size << " split " << row.split << ": " << e.what() << "\n";
      }
      rows.push_back(std::move(row));
    }
  }

  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.vocab_size != b.vocab_size) return a.vocab_size < b.vocab_size;
    return a.split < b.split;
  });
  write_text_atomic(cfg.out_dir / "sweep.csv", sweep_csv(rows));
  if (wants(cfg, "md")) write_text_atomic(cfg.out_dir / "sweep.md", sweep_markdown(rows));
  std::cout << sweep_markdown(rows);
  return 0;
}

int run_coverage(const RunConfig& cfg) {
  log_notice_once();
  require_file(cfg.corpus_path, "--corpus");
  require_file(cfg.test_corpus_path, "--test-corpus");
  prepare_out_dir(cfg);
  Corpus train = load_corpus(cfg.corpus_path, cfg.exec);
  Corpus test = load_corpus(cfg.test_corpus_path, cfg.exec);
  auto ranking = rank_words(train);
  std::vector<std::size_t> ks = cfg.top_k.empty() ? default_ks(ranking.size()) : cfg.top_k;
  std::vector<CoveragePoint> curve = coverage_curve(ranking, train, test, ks);
  write_text_atomic(cfg.out_dir / "coverage.csv", coverage_csv(curve));
  std::cout << coverage_csv(curve);
  return 0;
}

}  // namespace morpheval
