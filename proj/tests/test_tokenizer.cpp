#include <doctest.h>

#include <string>
#include <vector>

#include "morpheval/tokenizer.hpp"
#include "temp_files.hpp"

using namespace morpheval;

namespace {

std::vector<std::string> render(const TokenizedWord& w) {
  std::vector<std::string> out;
  for (const Token& t : w.tokens) out.push_back(rendered(t));
  return out;
}

Vocabulary vocab_of(std::vector<std::string> entries) {
  return Vocabulary(std::move(entries), {"[UNK]"});
}

}  // namespace

TEST_CASE("char tokenization") {
  using V = std::vector<std::string>;
  CHECK(render(char_tokenize("gittim")) == V{"g", "##i", "##t", "##t", "##i", "##m"});
  CHECK(render(char_tokenize("a")) == V{"a"});
  CHECK(char_tokenize("koş").size() == 3);
  CHECK(render(char_tokenize("koş")) == V{"k", "##o", "##ş"});
  CHECK(!char_tokenize("koş").tokens[0].is_continuation);
  CHECK(char_tokenize("koş").tokens[2].is_continuation);
}

TEST_CASE("word tokenization") {
  Vocabulary v = vocab_of({"[UNK]", "ev"});
  TokenizedWord known = word_tokenize("ev", v);
  REQUIRE(known.size() == 1);
  CHECK(known.tokens[0].text == "ev");
  CHECK(!known.tokens[0].is_unknown);

  TokenizedWord oov = word_tokenize("evlerimizden", v);
  REQUIRE(oov.size() == 1);
  CHECK(oov.tokens[0].is_unknown);
  CHECK(oov.has_unknown());
}

TEST_CASE("wordpiece greedy longest prefix") {
  Vocabulary v = vocab_of({"[UNK]", "ev", "##lerimiz", "##den", "##ler", "##imiz"});
  using V = std::vector<std::string>;
  CHECK(render(wordpiece_tokenize("evlerimizden", v)) == V{"ev", "##lerimiz", "##den"});
  CHECK(render(wordpiece_tokenize("ev", v)) == V{"ev"});

  // Longest prefix wins even when a shorter split would also work.
  Vocabulary greedy = vocab_of({"[UNK]", "ev", "evler", "##imiz", "##ler", "##imizden"});
  CHECK(render(wordpiece_tokenize("evlerimizden", greedy)) == V{"evler", "##imizden"});
}

TEST_CASE("wordpiece falls back to a single unknown token") {
  Vocabulary v = vocab_of({"[UNK]", "a", "##b"});
  TokenizedWord w = wordpiece_tokenize("xyz", v);
  REQUIRE(w.size() == 1);
  CHECK(w.tokens[0].is_unknown);

  // Dead end mid-word also collapses to one unknown: "ab" matches, then "c"
  // has no continuation entry.
  TokenizedWord mid = wordpiece_tokenize("abc", v);
  REQUIRE(mid.size() == 1);
  CHECK(mid.tokens[0].is_unknown);
}

TEST_CASE("wordpiece over a full character alphabet degenerates to chars") {
  Vocabulary v = vocab_of({"[UNK]", "g", "i", "t", "m", "##g", "##i", "##t", "##m"});
  TokenizedWord wp = wordpiece_tokenize("gittim", v);
  TokenizedWord ch = char_tokenize("gittim");
  REQUIRE(wp.size() == ch.size());
  for (std::size_t i = 0; i < wp.size(); ++i) CHECK(wp.tokens[i] == ch.tokens[i]);
}

TEST_CASE("reconstruction property") {
  Vocabulary v = vocab_of({"[UNK]", "ev", "##lerimiz", "##den"});
  for (const char* word : {"evlerimizden", "ev", "gittim", "koş"}) {
    TokenizedWord w = wordpiece_tokenize(word, v);
    if (w.has_unknown()) continue;
    std::string concat;
    for (const Token& t : w.tokens) concat += t.text;
    CHECK(concat == word);
  }
}

TEST_CASE("words longer than the flag threshold still tokenize") {
  Vocabulary v = vocab_of({"[UNK]", "a", "##a"});
  std::string word(kMaxWordCodePoints + 10, 'a');
  TokenizedWord w = wordpiece_tokenize(word, v);
  CHECK(!w.has_unknown());
  CHECK(w.size() == word.size());
}

TEST_CASE("vocabulary rejects duplicates and keeps order") {
  CHECK_THROWS_AS(vocab_of({"[UNK]", "ev", "ev"}), std::invalid_argument);
  Vocabulary v = vocab_of({"[UNK]", "b", "a", "##z"});
  CHECK(v.entries() == std::vector<std::string>{"[UNK]", "b", "a", "##z"});
  CHECK(v.has_initial("a"));
  CHECK(!v.has_initial("z"));
  CHECK(v.has_continuation("z"));
  CHECK(!v.has_continuation("a"));
  CHECK(v.unk_token() == "[UNK]");
}

TEST_CASE("vocabulary file round trip") {
  Vocabulary v = vocab_of({"[UNK]", "ev", "##de"});
  auto path = temp_dir() / "vocab_rt.txt";
  v.save(path);
  Vocabulary loaded = Vocabulary::load(path);
  CHECK(loaded.entries() == v.entries());
  CHECK(loaded.specials() == std::vector<std::string>{"[UNK]"});
  CHECK(loaded.has_initial("ev"));
  CHECK(loaded.has_continuation("de"));
}

TEST_CASE("pretokenized adapter") {
  auto path = write_temp("pretok.jsonl",
                         R"({"word":"gittim","tokens":["git","##ti","##m"]})"
                         "\n"
                         R"({"word":"ve","tokens":["ve"]})"
                         "\n"
                         R"({"word":"ab","tokens":["a","##c"]})"
                         "\n"
                         R"({"word":"xy","tokens":["##x","##y"]})"
                         "\n"
                         R"({"word":"ve","tokens":["v","##e"]})"
                         "\n");
  Pretokenized p = load_pretokenized(path);
  CHECK(p.by_word.size() == 2);
  REQUIRE(p.issues.size() == 2);
  CHECK(p.issues[0].line == 3);  // concatenation mismatch
  CHECK(p.issues[1].line == 4);  // first token must not carry the marker

  const TokenizedWord& gittim = p.by_word.at("gittim");
  REQUIRE(gittim.size() == 3);
  CHECK(gittim.tokens[0].text == "git");
  CHECK(!gittim.tokens[0].is_continuation);
  CHECK(gittim.tokens[1].text == "ti");
  CHECK(gittim.tokens[1].is_continuation);

  // The later "ve" line overrides the earlier one.
  CHECK(p.duplicates == 1);
  CHECK(p.by_word.at("ve").size() == 2);
}

TEST_CASE("pretokenized unknown markers pass the concatenation check") {
  auto path = write_temp("pretok_unk.jsonl",
                         R"({"word":"qqq","tokens":["[UNK]"]})"
                         "\n");
  Pretokenized p = load_pretokenized(path);
  CHECK(p.issues.empty());
  REQUIRE(p.by_word.count("qqq") == 1);
  CHECK(p.by_word.at("qqq").has_unknown());
}

TEST_CASE("tokenizer facade") {
  Vocabulary v = vocab_of({"[UNK]", "ev", "##de"});
  Tokenizer wp = Tokenizer::wordpiece(v);
  CHECK(wp.kind() == TokenizerKind::WordPiece);
  CHECK(render(wp("evde")) == std::vector<std::string>{"ev", "##de"});

  Tokenizer ch = Tokenizer::chars();
  CHECK(ch("ev").size() == 2);

  Tokenizer wd = Tokenizer::words(v);
  CHECK(wd("ev").size() == 1);
  CHECK(wd("evde").tokens[0].is_unknown);  // whole-word lookup only

  auto path = write_temp("pretok_facade.jsonl",
                         R"({"word":"evde","tokens":["ev","##de"]})"
                         "\n");
  Tokenizer pt = Tokenizer::pretokenized(load_pretokenized(path));
  CHECK(render(pt("evde")) == std::vector<std::string>{"ev", "##de"});
  CHECK(pt("yok").tokens[0].is_unknown);  // missing words fall back to unknown

  CHECK(tokenizer_kind_from_string("wordpiece") == TokenizerKind::WordPiece);
  CHECK(tokenizer_kind_from_string("pretokenized") == TokenizerKind::Pretok);
  CHECK_THROWS(tokenizer_kind_from_string("bpe"));
}
