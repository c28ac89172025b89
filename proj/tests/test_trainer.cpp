#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "morpheval/trainer.hpp"
#include "temp_files.hpp"

using namespace morpheval;

namespace {

Corpus corpus_of(const std::string& content) {
  static int n = 0;
  return load_corpus(write_temp("trainer_corpus_" + std::to_string(n++) + ".txt", content));
}

}  // namespace

TEST_CASE("training merges ev before de attaches") {
  // Hand-simulated: pieces e,##v,##d,##e; pair (e,##v) freq 5, score
  // 5/(5*5); pair (##d,##e) freq 2, score 2/(2*2); (e,##v) wins and later
  // (ev,##de) completes "evde".
  Corpus c = corpus_of("ev ev ev evde evde\n");
  TrainerConfig cfg;
  cfg.target_vocab_size = 10;
  TrainResult r = train_wordpiece(c, cfg);
  CHECK(r.exhausted);  // only 8 entries reachable
  CHECK(r.vocab.entries() == std::vector<std::string>{"[UNK]", "e", "##d", "##e", "##v",
                                                      "##de", "ev", "evde"});
  CHECK(r.merges == 3);
}

TEST_CASE("single possible merge") {
  Corpus c = corpus_of("ab\n");
  TrainerConfig cfg;
  cfg.target_vocab_size = 4;  // [UNK], a, ##b, + one merge
  cfg.min_pair_frequency = 1;
  TrainResult r = train_wordpiece(c, cfg);
  CHECK(r.vocab.entries() == std::vector<std::string>{"[UNK]", "a", "##b", "ab"});
  CHECK(r.merges == 1);
  CHECK(!r.exhausted);
}

TEST_CASE("frequency floor blocks all merges") {
  Corpus c = corpus_of("ab\n");
  TrainerConfig cfg;
  cfg.target_vocab_size = 10;
  cfg.min_pair_frequency = 2;  // the only pair occurs once
  TrainResult r = train_wordpiece(c, cfg);
  CHECK(r.vocab.entries() == std::vector<std::string>{"[UNK]", "a", "##b"});
  CHECK(r.merges == 0);
  CHECK(r.exhausted);
}

TEST_CASE("training errors") {
  Corpus empty = corpus_of("");
  TrainerConfig cfg;
  cfg.target_vocab_size = 10;
  CHECK_THROWS_AS(train_wordpiece(empty, cfg), std::invalid_argument);

  Corpus c = corpus_of("ab\n");
  TrainerConfig tiny;
  tiny.target_vocab_size = 2;  // below specials + alphabet = 3
  CHECK_THROWS_AS(train_wordpiece(c, tiny), std::invalid_argument);
}

TEST_CASE("training is deterministic") {
  Corpus c = corpus_of("evlerimizden geldik evde kaldık evler evler gitti\n");
  TrainerConfig cfg;
  cfg.target_vocab_size = 40;
  cfg.min_pair_frequency = 1;
  TrainResult a = train_wordpiece(c, cfg);
  TrainResult b = train_wordpiece(c, cfg);
  CHECK(a.vocab.entries() == b.vocab.entries());
}

TEST_CASE("smaller targets are prefixes of larger ones") {
  Corpus c = corpus_of("evlerimizden geldik evde kaldık evler evler gitti ev ev\n");
  TrainerConfig small_cfg, large_cfg;
  small_cfg.target_vocab_size = 25;
  small_cfg.min_pair_frequency = 1;
  large_cfg.target_vocab_size = 35;
  large_cfg.min_pair_frequency = 1;
  TrainResult small = train_wordpiece(c, small_cfg);
  TrainResult large = train_wordpiece(c, large_cfg);
  REQUIRE(small.vocab.size() <= large.vocab.size());
  CHECK(std::equal(small.vocab.entries().begin(), small.vocab.entries().end(),
                   large.vocab.entries().begin()));
}

TEST_CASE("training corpus never tokenizes to unknown") {
  Corpus c = corpus_of("evlerimizden geldik evde kaldık çocuklar koştu\n");
  TrainerConfig cfg;
  cfg.target_vocab_size = 30;
  TrainResult r = train_wordpiece(c, cfg);
  for (const auto& [word, count] : c.word_counts) {
    TokenizedWord w = wordpiece_tokenize(word, r.vocab);
    CAPTURE(word);
    CHECK(!w.has_unknown());
  }
}

TEST_CASE("vocabulary emit order is specials, alphabet, merges") {
  Corpus c = corpus_of("ba ba ba\n");
  TrainerConfig cfg;
  cfg.target_vocab_size = 5;
  TrainResult r = train_wordpiece(c, cfg);
  // Alphabet sorted: plain forms first, then continuation forms.
  CHECK(r.vocab.entries() == std::vector<std::string>{"[UNK]", "b", "##a", "ba"});
}

TEST_CASE("word ranking") {
  Corpus c = corpus_of("ev evde\nev\n");
  auto ranking = rank_words(c);
  REQUIRE(ranking.size() == 2);
  CHECK(ranking[0] == std::pair<std::string, std::uint64_t>{"ev", 2});
  CHECK(ranking[1] == std::pair<std::string, std::uint64_t>{"evde", 1});

  Corpus tie = corpus_of("b a\n");
  auto tied = rank_words(tie);
  CHECK(tied[0].first == "a");
  CHECK(tied[1].first == "b");

  CHECK_THROWS_AS(rank_words(corpus_of("")), std::invalid_argument);
}

TEST_CASE("top-k word vocabulary") {
  Corpus c = corpus_of("ev evde\nev\n");
  auto ranking = rank_words(c);
  Vocabulary one = top_k_vocab(ranking, 1);
  CHECK(one.entries() == std::vector<std::string>{"[UNK]", "ev"});
  Vocabulary all = top_k_vocab(ranking, 2);
  CHECK(all.entries() == std::vector<std::string>{"[UNK]", "ev", "evde"});
  CHECK_THROWS_AS(top_k_vocab(ranking, 0), std::invalid_argument);
  CHECK_THROWS_AS(top_k_vocab(ranking, 3), std::invalid_argument);
}
