#include <doctest.h>

#include <vector>

#include "morpheval/coverage.hpp"
#include "morpheval/trainer.hpp"
#include "temp_files.hpp"

using namespace morpheval;

namespace {

Corpus corpus_of(const std::string& name, const std::string& content) {
  return load_corpus(write_temp(name, content));
}

}  // namespace

TEST_CASE("two-type hand example") {
  // train {a:3, b:1}, test {a:1, c:1}: the top-1 vocabulary {a} covers 3/4
  // of train tokens and 1/2 of test tokens.
  Corpus train = corpus_of("cov_train.txt", "a a a b\n");
  Corpus test = corpus_of("cov_test.txt", "a c\n");
  auto ranking = rank_words(train);
  std::vector<std::size_t> ks{1, 2};
  auto curve = coverage_curve(ranking, train, test, ks);
  REQUIRE(curve.size() == 2);

  CHECK(curve[0].k == 1);
  CHECK(curve[0].vocab_fraction == doctest::Approx(0.5));
  CHECK(curve[0].train_token_coverage == doctest::Approx(0.75));
  CHECK(curve[0].test_token_coverage == doctest::Approx(0.5));
  CHECK(curve[0].test_type_coverage == doctest::Approx(0.5));
  CHECK(curve[0].test_oov_rate == doctest::Approx(0.5));

  CHECK(curve[1].k == 2);
  CHECK(curve[1].train_token_coverage == 1.0);  // exactly, not approximately
  CHECK(curve[1].test_token_coverage == doctest::Approx(0.5));  // c stays uncovered
}

TEST_CASE("coverage is monotone in k") {
  Corpus train = corpus_of("cov_mono_train.txt",
                           "ev ev ev evde evde kitap kitap okul su ve ve ve bir bir gibi\n");
  Corpus test = corpus_of("cov_mono_test.txt", "ev okul yeni kitap su bir deniz\n");
  auto ranking = rank_words(train);
  std::vector<std::size_t> ks;
  for (std::size_t k = 1; k <= ranking.size(); ++k) ks.push_back(k);
  auto curve = coverage_curve(ranking, train, test, ks);
  for (std::size_t i = 1; i < curve.size(); ++i) {
    CHECK(curve[i].train_token_coverage >= curve[i - 1].train_token_coverage);
    CHECK(curve[i].test_token_coverage >= curve[i - 1].test_token_coverage);
    CHECK(curve[i].test_type_coverage >= curve[i - 1].test_type_coverage);
  }
  CHECK(curve.back().train_token_coverage == 1.0);
}

TEST_CASE("test set disjoint from training covers nothing") {
  Corpus train = corpus_of("cov_dis_train.txt", "a b c\n");
  Corpus test = corpus_of("cov_dis_test.txt", "x y z\n");
  auto ranking = rank_words(train);
  std::vector<std::size_t> ks{3};
  auto curve = coverage_curve(ranking, train, test, ks);
  CHECK(curve[0].test_token_coverage == doctest::Approx(0.0));
  CHECK(curve[0].test_type_coverage == doctest::Approx(0.0));
  CHECK(curve[0].test_oov_rate == doctest::Approx(1.0));
}

TEST_CASE("out-of-range sizes are rejected") {
  Corpus train = corpus_of("cov_err_train.txt", "a b\n");
  Corpus test = corpus_of("cov_err_test.txt", "a\n");
  auto ranking = rank_words(train);
  std::vector<std::size_t> zero{0};
  std::vector<std::size_t> over{3};
  CHECK_THROWS_AS(coverage_curve(ranking, train, test, zero), std::invalid_argument);
  CHECK_THROWS_AS(coverage_curve(ranking, train, test, over), std::invalid_argument);
  CHECK_THROWS_AS(coverage_curve({}, train, test, std::vector<std::size_t>{1}),
                  std::invalid_argument);
}

TEST_CASE("default size ladder spans one percent to everything") {
  auto ks = default_ks(1000);
  REQUIRE(!ks.empty());
  CHECK(ks.front() == 10);  // 1% of 1000
  CHECK(ks.back() == 1000);
  CHECK(ks.size() <= 20);
  for (std::size_t i = 1; i < ks.size(); ++i) CHECK(ks[i] > ks[i - 1]);

  auto tiny = default_ks(3);
  CHECK(tiny.front() >= 1);
  CHECK(tiny.back() == 3);
}
