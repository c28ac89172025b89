#include <doctest.h>

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "morpheval/runner.hpp"
#include "temp_files.hpp"

using namespace morpheval;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  fs::path dir = temp_dir() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

const char* kCorpus =
    "ev evde evler evlerde evlerimiz\n"
    "kitap kitaplar kitaplarda ev evde\n"
    "yol yollar yollarda ev evler kitap\n";

const char* kGold =
    R"({"word": "evlerde", "lemma": "ev", "suffixes": "ler+de"})"
    "\n"
    R"({"word": "kitaplarda", "lemma": "kitap", "suffixes": "lar+da"})"
    "\n"
    R"({"word": "yollar", "lemma": "yol", "suffixes": "lar"})"
    "\n"
    R"({"word": "ev", "lemma": "ev", "suffixes": ""})"
    "\n";

RunConfig base_config(const fs::path& out) {
  RunConfig cfg;
  cfg.out_dir = out;
  cfg.exec = Execution::Serial;
  return cfg;
}

}  // namespace

TEST_CASE("train verb writes one vocabulary per target size") {
  fs::path out = fresh_dir("run_train");
  RunConfig cfg = base_config(out);
  cfg.corpus_path = write_temp("runner_corpus.txt", kCorpus);
  cfg.vocab_sizes = {24, 16, 24};  // unsorted + duplicate on purpose
  CHECK(run_train(cfg) == 0);
  CHECK(fs::exists(out / "vocab_16.txt"));
  CHECK(fs::exists(out / "vocab_24.txt"));

  std::string small = read_file(out / "vocab_16.txt");
  std::string large = read_file(out / "vocab_24.txt");
  CHECK(large.substr(0, small.size()) == small);  // smaller vocab is a prefix
}

TEST_CASE("train verb rejects an empty size list and a missing corpus") {
  RunConfig cfg = base_config(fresh_dir("run_train_bad"));
  cfg.corpus_path = write_temp("runner_corpus.txt", kCorpus);
  CHECK_THROWS_AS(run_train(cfg), std::invalid_argument);

  cfg.vocab_sizes = {16};
  cfg.corpus_path = temp_dir() / "no_such_corpus.txt";
  CHECK_THROWS_AS(run_train(cfg), std::runtime_error);
}

TEST_CASE("evaluate verb writes the requested report formats") {
  fs::path train_out = fresh_dir("run_eval_vocab");
  RunConfig tc = base_config(train_out);
  tc.corpus_path = write_temp("runner_corpus.txt", kCorpus);
  tc.vocab_sizes = {24};
  REQUIRE(run_train(tc) == 0);

  fs::path out = fresh_dir("run_eval");
  RunConfig cfg = base_config(out);
  cfg.tokenizer = "wordpiece";
  cfg.vocab_path = train_out / "vocab_24.txt";
  cfg.gold_paths = {write_temp("runner_gold.jsonl", kGold)};
  cfg.formats = {"json", "csv", "md"};
  cfg.bootstrap_resamples = 50;
  cfg.seed = 9;
  CHECK(run_evaluate(cfg) == 0);

  fs::path json_path = out / "runner_gold.wordpiece.report.json";
  REQUIRE(fs::exists(json_path));
  CHECK(fs::exists(out / "runner_gold.wordpiece.report.csv"));
  CHECK(fs::exists(out / "runner_gold.wordpiece.report.md"));

  auto j = nlohmann::json::parse(read_file(json_path));
  CHECK(j["items"]["total"] == 4);
  CHECK(j["items"]["skipped_nonconcatenative"] == 0);
  CHECK(j["boundary"]["micro"].contains("f1"));
  CHECK(j.contains("intervals"));

  std::string csv = read_file(out / "runner_gold.wordpiece.report.csv");
  CHECK(csv.find("split,tokenizer,") == 0);
  CHECK(csv.find("runner_gold,wordpiece,") != std::string::npos);
}

TEST_CASE("evaluate verb is byte-deterministic for a fixed seed") {
  fs::path out_a = fresh_dir("run_eval_a");
  fs::path out_b = fresh_dir("run_eval_b");
  RunConfig cfg = base_config(out_a);
  cfg.tokenizer = "char";
  cfg.gold_paths = {write_temp("runner_gold.jsonl", kGold)};
  cfg.bootstrap_resamples = 100;
  cfg.seed = 4242;
  REQUIRE(run_evaluate(cfg) == 0);
  cfg.out_dir = out_b;
  cfg.exec = Execution::Parallel;  // execution mode must not change results
  REQUIRE(run_evaluate(cfg) == 0);

  CHECK(read_file(out_a / "runner_gold.char.report.json") ==
        read_file(out_b / "runner_gold.char.report.json"));
  CHECK(read_file(out_a / "runner_gold.char.report.csv") ==
        read_file(out_b / "runner_gold.char.report.csv"));
}

TEST_CASE("evaluate verb requires gold files and a vocabulary when applicable") {
  RunConfig cfg = base_config(fresh_dir("run_eval_bad"));
  cfg.tokenizer = "char";
  CHECK_THROWS_AS(run_evaluate(cfg), std::invalid_argument);  // no gold

  cfg.gold_paths = {temp_dir() / "no_such_gold.jsonl"};
  CHECK_THROWS_AS(run_evaluate(cfg), std::runtime_error);

  cfg.gold_paths = {write_temp("runner_gold.jsonl", kGold)};
  cfg.tokenizer = "wordpiece";  // vocab path unset
  CHECK_THROWS_AS(run_evaluate(cfg), std::invalid_argument);
}

TEST_CASE("sweep verb trains, evaluates, and records failed sizes") {
  fs::path out = fresh_dir("run_sweep");
  RunConfig cfg = base_config(out);
  cfg.corpus_path = write_temp("runner_corpus.txt", kCorpus);
  cfg.gold_paths = {write_temp("runner_gold.jsonl", kGold)};
  cfg.vocab_sizes = {2, 16, 24};  // 2 is below specials + alphabet and must fail
  cfg.formats = {"json", "csv", "md"};
  CHECK(run_sweep(cfg) == 0);

  CHECK(fs::exists(out / "vocab_16.txt"));
  CHECK(fs::exists(out / "vocab_24.txt"));
  CHECK(!fs::exists(out / "vocab_2.txt"));
  CHECK(fs::exists(out / "report_runner_gold_16.json"));
  CHECK(fs::exists(out / "report_runner_gold_24.json"));
  CHECK(fs::exists(out / "sweep.md"));

  std::string sweep = read_file(out / "sweep.csv");
  CHECK(sweep.find("vocab_size,split,metric,value,ci_low,ci_high") == 0);
  CHECK(sweep.find("2,runner_gold,status,failed") != std::string::npos);
  CHECK(sweep.find("16,runner_gold,f1_micro,") != std::string::npos);
  CHECK(sweep.find("24,runner_gold,fertility,") != std::string::npos);
}

TEST_CASE("sweep verb is byte-deterministic for a fixed seed") {
  fs::path out_a = fresh_dir("run_sweep_a");
  fs::path out_b = fresh_dir("run_sweep_b");
  RunConfig cfg = base_config(out_a);
  cfg.corpus_path = write_temp("runner_corpus.txt", kCorpus);
  cfg.gold_paths = {write_temp("runner_gold.jsonl", kGold)};
  cfg.vocab_sizes = {16, 24};
  cfg.bootstrap_resamples = 40;
  cfg.seed = 77;
  REQUIRE(run_sweep(cfg) == 0);
  cfg.out_dir = out_b;
  REQUIRE(run_sweep(cfg) == 0);
  CHECK(read_file(out_a / "sweep.csv") == read_file(out_b / "sweep.csv"));
  CHECK(read_file(out_a / "vocab_24.txt") == read_file(out_b / "vocab_24.txt"));
}

TEST_CASE("coverage verb writes the curve for explicit and default ladders") {
  fs::path out = fresh_dir("run_coverage");
  RunConfig cfg = base_config(out);
  cfg.corpus_path = write_temp("runner_cov_train.txt", "a a a b\n");
  cfg.test_corpus_path = write_temp("runner_cov_test.txt", "a c\n");
  cfg.top_k = {1, 2};
  CHECK(run_coverage(cfg) == 0);

  std::string csv = read_file(out / "coverage.csv");
  CHECK(csv ==
        "k,vocab_fraction,train_coverage,test_coverage,test_type_coverage\n"
        "1,0.500000,0.750000,0.500000,0.500000\n"
        "2,1.000000,1.000000,0.500000,0.500000\n");

  cfg.top_k = {};  // default ladder: caps at the full type count
  CHECK(run_coverage(cfg) == 0);
  std::string ladder = read_file(out / "coverage.csv");
  CHECK(ladder.find("\n1,") != std::string::npos);
  CHECK(ladder.find("\n2,1.000000,1.000000,") != std::string::npos);

  cfg.test_corpus_path = temp_dir() / "no_such_test.txt";
  CHECK_THROWS_AS(run_coverage(cfg), std::runtime_error);
}
