#include <doctest.h>

#include <string>
#include <vector>

#include "morpheval/bootstrap.hpp"
#include "morpheval/metrics.hpp"
#include "morpheval/morphdata.hpp"
#include "morpheval/trainer.hpp"
#include "temp_files.hpp"

using namespace morpheval;

namespace {

std::string synth_corpus() {
  // Deterministic pseudo-Turkish corpus: lemma + suffix-chain combinations.
  const std::vector<std::string> stems{"ev", "kitap", "yol", "göz", "okul", "deniz"};
  const std::vector<std::string> chains{"", "ler", "lerde", "lerimiz", "de", "den", "imiz"};
  std::string out;
  std::size_t i = 0;
  for (int round = 0; round < 12; ++round) {
    for (const std::string& s : stems) {
      out += s + chains[i++ % chains.size()];
      out += (i % 9 == 0) ? '\n' : ' ';
    }
  }
  out += '\n';
  return out;
}

}  // namespace

TEST_CASE("parallel and serial corpus loading agree") {
  auto path = write_temp("par_corpus.txt", synth_corpus());
  Corpus s = load_corpus(path, Execution::Serial);
  Corpus p = load_corpus(path, Execution::Parallel);
  CHECK(s.documents == p.documents);
  CHECK(s.total_tokens == p.total_tokens);
  CHECK(s.word_counts.size() == p.word_counts.size());
  for (const auto& [w, c] : s.word_counts) {
    CAPTURE(w);
    CHECK(p.word_counts.at(w) == c);
  }
}

TEST_CASE("parallel and serial training agree") {
  Corpus c = load_corpus(write_temp("par_train.txt", synth_corpus()));
  TrainerConfig cfg;
  cfg.target_vocab_size = 60;
  TrainResult s = train_wordpiece(c, cfg, Execution::Serial);
  TrainResult p = train_wordpiece(c, cfg, Execution::Parallel);
  CHECK(s.vocab.entries() == p.vocab.entries());
  CHECK(s.merges == p.merges);
  CHECK(s.exhausted == p.exhausted);
}

TEST_CASE("parallel and serial evaluation agree") {
  std::vector<MorphAnalysis> analyses{
      {"kitaplarımızda", "kitap", {"lar", "ımız", "da"}},
      {"güzelleştirmek", "güzel", {"leş", "tir", "mek"}},
      {"koşuyordum", "koş", {"uyor", "du", "m"}},
      {"evlerimizden", "ev", {"ler", "imiz", "den"}},
      {"çocuk", "çocuk", {}},
      {"vakti", "vakit", {"i"}},
  };
  for (int copy = 0; copy < 5; ++copy)
    for (int i = 0; i < 6; ++i) analyses.push_back(analyses[static_cast<std::size_t>(i)]);

  EvalOptions serial_opt, parallel_opt;
  serial_opt.exec = Execution::Serial;
  serial_opt.bootstrap_resamples = 200;
  serial_opt.seed = 11;
  parallel_opt = serial_opt;
  parallel_opt.exec = Execution::Parallel;

  Evaluation s = evaluate(analyses, Tokenizer::chars(), serial_opt);
  Evaluation p = evaluate(analyses, Tokenizer::chars(), parallel_opt);

  CHECK(s.report.micro.f1 == p.report.micro.f1);
  CHECK(s.report.macro.f1 == p.report.macro.f1);
  CHECK(s.report.fertility == p.report.fertility);
  CHECK(s.report.overseg == p.report.overseg);
  CHECK(s.report.agreement.cer == p.report.agreement.cer);
  CHECK(s.report.affix.atomicity == p.report.affix.atomicity);
  REQUIRE(s.report.intervals.size() == p.report.intervals.size());
  for (const auto& [key, ci] : s.report.intervals) {
    CAPTURE(key);
    CHECK(p.report.intervals.at(key).low == ci.low);
    CHECK(p.report.intervals.at(key).high == ci.high);
  }
}

TEST_CASE("parallel and serial bootstrap agree") {
  std::vector<double> items;
  for (int i = 0; i < 101; ++i) items.push_back(static_cast<double>(i % 17) / 16.0);
  auto mean = [](std::span<const double> v) {
    double s = 0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  ConfidenceInterval s = bootstrap_ci(std::span<const double>(items), mean, 1000, 5,
                                      Execution::Serial);
  ConfidenceInterval p = bootstrap_ci(std::span<const double>(items), mean, 1000, 5,
                                      Execution::Parallel);
  CHECK(s.low == p.low);
  CHECK(s.high == p.high);
}
