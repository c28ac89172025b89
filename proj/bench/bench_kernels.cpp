// Compares the serial and parallel execution paths of the three bulk
// kernels: corpus loading, evaluation, and bootstrap resampling. Each
// kernel is timed over a few repetitions; results must agree exactly, so
// the benchmark doubles as an equivalence spot check.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "morpheval/bootstrap.hpp"
#include "morpheval/metrics.hpp"
#include "morpheval/morphdata.hpp"
#include "morpheval/tokenizer.hpp"
#include "morpheval/trainer.hpp"

using namespace morpheval;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kReps = 3;

template <class Fn>
double best_ms(Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < kReps; ++i) {
    auto t0 = Clock::now();
    fn();
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

void row(const char* kernel, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-16s %10.2f ms %10.2f ms %8.2fx   %s\n", kernel, serial_ms, parallel_ms,
              serial_ms / parallel_ms, equal ? "results equal" : "RESULTS DIFFER");
}

fs::path make_corpus() {
  const std::vector<std::string> stems{"ev",    "göz",   "yol",    "kitap", "okul",  "deniz",
                                       "araba", "çiçek", "orman",  "şehir", "kapı",  "masa",
                                       "bahçe", "sokak", "çocuk",  "dağ",   "nehir", "göl"};
  const std::vector<std::string> chains{"",     "ler",  "lerde", "lerimiz", "lerimizde", "de",
                                        "den",  "im",   "imiz",  "li",      "lik",       "siz",
                                        "lerle"};
  std::mt19937 rng(7u);
  std::string text;
  int column = 0;
  while (text.size() < 4'000'000) {
    text += stems[std::min(rng() % stems.size(), rng() % stems.size())];
    text += chains[std::min(rng() % chains.size(), rng() % chains.size())];
    text.push_back(++column % 12 == 0 ? '\n' : ' ');
  }
  fs::path path = fs::temp_directory_path() / "morpheval_bench_corpus.txt";
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

std::vector<MorphAnalysis> make_analyses() {
  const std::vector<MorphAnalysis> base{
      {"kitaplarımızda", "kitap", {"lar", "ımız", "da"}},
      {"güzelleştirmek", "güzel", {"leş", "tir", "mek"}},
      {"koşuyordum", "koş", {"uyor", "du", "m"}},
      {"evlerimizden", "ev", {"ler", "imiz", "den"}},
      {"yollarda", "yol", {"lar", "da"}},
      {"çocuk", "çocuk", {}},
      {"denizlerde", "deniz", {"ler", "de"}},
      {"okullarımız", "okul", {"lar", "ımız"}},
  };
  std::vector<MorphAnalysis> out;
  out.reserve(base.size() * 2500);
  for (int i = 0; i < 2500; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

}  // namespace

int main() {
  fs::path corpus_path = make_corpus();
  std::printf("%-16s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  Corpus serial_corpus, parallel_corpus;
  double load_s = best_ms([&] { serial_corpus = load_corpus(corpus_path, Execution::Serial); });
  double load_p =
      best_ms([&] { parallel_corpus = load_corpus(corpus_path, Execution::Parallel); });
  row("load_corpus", load_s, load_p,
      serial_corpus.word_counts == parallel_corpus.word_counts &&
          serial_corpus.total_tokens == parallel_corpus.total_tokens);

  std::vector<MorphAnalysis> analyses = make_analyses();
  EvalOptions serial_opt, parallel_opt;
  serial_opt.exec = Execution::Serial;
  parallel_opt.exec = Execution::Parallel;
  Evaluation serial_eval, parallel_eval;
  double eval_s = best_ms([&] { serial_eval = evaluate(analyses, Tokenizer::chars(), serial_opt); });
  double eval_p =
      best_ms([&] { parallel_eval = evaluate(analyses, Tokenizer::chars(), parallel_opt); });
  row("evaluate", eval_s, eval_p,
      serial_eval.report.micro.f1 == parallel_eval.report.micro.f1 &&
          serial_eval.report.macro.f1 == parallel_eval.report.macro.f1 &&
          serial_eval.report.agreement.cer == parallel_eval.report.agreement.cer);

  std::vector<double> items;
  items.reserve(20000);
  std::mt19937 rng(11u);
  for (int i = 0; i < 20000; ++i) items.push_back((rng() % 1000) / 999.0);
  auto mean = [](std::span<const double> v) {
    double s = 0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  ConfidenceInterval serial_ci, parallel_ci;
  double boot_s = best_ms([&] {
    serial_ci = bootstrap_ci(std::span<const double>(items), mean, 1000, 3, Execution::Serial);
  });
  double boot_p = best_ms([&] {
    parallel_ci =
        bootstrap_ci(std::span<const double>(items), mean, 1000, 3, Execution::Parallel);
  });
  row("bootstrap_ci", boot_s, boot_p,
      serial_ci.low == parallel_ci.low && serial_ci.high == parallel_ci.high);
  return 0;
}
