#include <doctest.h>

#include <vector>

#include "morpheval/morphdata.hpp"
#include "temp_files.hpp"

using namespace morpheval;

TEST_CASE("gold loading") {
  auto path = write_temp("gold_basic.jsonl",
                         R"({"word":"kitaplarımızda","lemma":"kitap","suffixes":"lar+ımız+da"})"
                         "\n"
                         R"({"word":"çocuk","lemma":"çocuk","suffixes":""})"
                         "\n");
  GoldLoadResult res = load_gold(path);
  REQUIRE(res.items.size() == 2);
  CHECK(res.issues.empty());
  CHECK(res.items[0].word == "kitaplarımızda");
  CHECK(res.items[0].lemma == "kitap");
  CHECK(res.items[0].suffixes == std::vector<std::string>{"lar", "ımız", "da"});
  CHECK(res.items[1].word == "çocuk");
  CHECK(res.items[1].suffixes.empty());
}

TEST_CASE("gold loading applies normalization") {
  auto path = write_temp("gold_norm.jsonl",
                         R"({"word":"KİTAP","lemma":"Kitap","suffixes":""})"
                         "\n");
  GoldLoadResult res = load_gold(path);
  REQUIRE(res.items.size() == 1);
  CHECK(res.items[0].word == "kitap");
  CHECK(res.items[0].lemma == "kitap");
}

TEST_CASE("gold loading reports malformed lines with numbers") {
  auto path = write_temp("gold_bad.jsonl",
                         "not json\n"
                         R"({"word":"ev","lemma":"ev","suffixes":""})"
                         "\n"
                         R"({"word":"ev"})"
                         "\n"
                         R"({"word":"ev","lemma":"ev"})"
                         "\n"
                         R"({"word":"ev","lemma":"ev","suffixes":"de+"})"
                         "\n"
                         R"({"word":"","lemma":"ev","suffixes":""})"
                         "\n");
  GoldLoadResult res = load_gold(path);
  CHECK(res.items.size() == 1);
  REQUIRE(res.issues.size() == 5);
  CHECK(res.issues[0].line == 1);
  CHECK(res.issues[1].line == 3);
  CHECK(res.issues[2].line == 4);  // suffixes field required even when empty
  CHECK(res.issues[3].line == 5);
  CHECK(res.issues[4].line == 6);
}

TEST_CASE("empty gold file loads as empty") {
  auto path = write_temp("gold_empty.jsonl", "");
  GoldLoadResult res = load_gold(path);
  CHECK(res.items.empty());
  CHECK(res.issues.empty());
}

TEST_CASE("missing gold file throws") {
  CHECK_THROWS(load_gold(temp_dir() / "no_such_file.jsonl"));
}

TEST_CASE("gold round trip") {
  auto path = write_temp("gold_rt.jsonl",
                         R"({"word":"kitaplarımızda","lemma":"kitap","suffixes":"lar+ımız+da"})"
                         "\n"
                         R"({"word":"çocuk","lemma":"çocuk","suffixes":""})"
                         "\n");
  GoldLoadResult first = load_gold(path);
  auto out = temp_dir() / "gold_rt_out.jsonl";
  write_gold(out, first.items);
  GoldLoadResult second = load_gold(out);
  REQUIRE(second.items.size() == first.items.size());
  for (std::size_t i = 0; i < first.items.size(); ++i) {
    CHECK(second.items[i].word == first.items[i].word);
    CHECK(second.items[i].lemma == first.items[i].lemma);
    CHECK(second.items[i].suffixes == first.items[i].suffixes);
  }
}

TEST_CASE("segmentation offsets are cumulative code-point ends") {
  MorphAnalysis a{"kitaplarımızda", "kitap", {"lar", "ımız", "da"}};
  GoldSegmentation g = gold_segmentation(a);
  CHECK(g.k == 4);
  CHECK(g.concatenative);
  CHECK(g.boundaries.offsets == std::vector<std::uint32_t>{5, 8, 12, 14});

  MorphAnalysis b{"koşuyordum", "koş", {"uyor", "du", "m"}};
  GoldSegmentation gb = gold_segmentation(b);
  CHECK(gb.boundaries.offsets == std::vector<std::uint32_t>{3, 7, 9, 10});
  CHECK(gb.concatenative);

  MorphAnalysis c{"çocuk", "çocuk", {}};
  GoldSegmentation gc = gold_segmentation(c);
  CHECK(gc.k == 1);
  CHECK(gc.boundaries.offsets == std::vector<std::uint32_t>{5});
}

TEST_CASE("non-concatenative analyses are flagged, not rejected") {
  // Vowel alternation: surface differs from lemma+suffix concatenation.
  MorphAnalysis a{"vakti", "vakit", {"i"}};
  GoldSegmentation g = gold_segmentation(a);
  CHECK(!g.concatenative);
  CHECK(g.k == 2);
  CHECK(g.morphs == std::vector<std::string>{"vakit", "i"});
}

TEST_CASE("corpus loading counts normalized words") {
  auto path = write_temp("corpus_basic.txt", "ev evde\nev\n");
  Corpus c = load_corpus(path);
  CHECK(c.word_counts.size() == 2);
  CHECK(c.word_counts.at("ev") == 2);
  CHECK(c.word_counts.at("evde") == 1);
  CHECK(c.total_tokens == 3);
  CHECK(c.documents.size() == 2);

  Corpus folded = load_corpus(write_temp("corpus_case.txt", "Ev ev\n"));
  CHECK(folded.word_counts.size() == 1);
  CHECK(folded.word_counts.at("ev") == 2);

  Corpus empty = load_corpus(write_temp("corpus_empty.txt", ""));
  CHECK(empty.word_counts.empty());
  CHECK(empty.total_tokens == 0);
}
