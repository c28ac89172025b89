#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "morpheval/morphdata.hpp"

namespace morpheval {

// Subword piece. `text` is the surface piece without the continuation
// marker; rendered form is marker + text for continuations.
struct Token {
  std::string text;
  bool is_continuation = false;
  bool is_unknown = false;

  bool operator==(const Token&) const = default;
};

struct TokenizedWord {
  std::string word;
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
  bool has_unknown() const {
    for (const Token& t : tokens)
      if (t.is_unknown) return true;
    return false;
  }
};

std::string rendered(const Token& t, std::string_view marker = "##");
std::string rendered_joined(const TokenizedWord& w, std::string_view sep = " ",
                            std::string_view marker = "##");

// Words longer than this are tokenized normally but flagged in reports.
inline constexpr std::size_t kMaxWordCodePoints = 512;

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

// Subword vocabulary: ordered entries plus lookup sets. Continuation entries
// carry the marker in the entry list but are probed without it.
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<std::string> entries, std::vector<std::string> specials,
             std::string marker = "##");

  // vocab.txt: one entry per line. Entries of the form [X] are specials.
  static Vocabulary load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  bool contains(std::string_view raw_entry) const;
  bool has_initial(std::string_view piece) const;
  bool has_continuation(std::string_view piece) const;  // piece without marker

  const std::vector<std::string>& entries() const { return entries_; }
  const std::vector<std::string>& specials() const { return specials_; }
  const std::string& marker() const { return marker_; }
  const std::string& unk_token() const { return unk_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<std::string> entries_;
  std::vector<std::string> specials_;
  std::string marker_ = "##";
  std::string unk_ = "[UNK]";
  std::unordered_set<std::string, StringHash, std::equal_to<>> initial_;
  std::unordered_set<std::string, StringHash, std::equal_to<>> continuation_;
  std::unordered_set<std::string, StringHash, std::equal_to<>> raw_;
};

// One code point per token; continuations marked.
TokenizedWord char_tokenize(std::string_view word);

// Whole-word lookup; out-of-vocabulary words become a single unknown token.
TokenizedWord word_tokenize(std::string_view word, const Vocabulary& vocab);

// Greedy longest-prefix matching left to right. If no vocabulary entry fits
// at some position, the whole word becomes a single unknown token.
TokenizedWord wordpiece_tokenize(std::string_view word, const Vocabulary& vocab);

// External tokenizations, one JSONL object per line:
// {"word": "...", "tokens": ["git", "##ti", "##m"]}. A token is a
// continuation iff it carries the marker prefix; the first token must not.
struct Pretokenized {
  std::unordered_map<std::string, TokenizedWord, StringHash, std::equal_to<>> by_word;
  std::vector<LineIssue> issues;
  std::size_t duplicates = 0;  // later lines replacing earlier ones
};

Pretokenized load_pretokenized(const std::filesystem::path& path,
                               std::string_view marker = "##");

enum class TokenizerKind { Char, Word, WordPiece, Pretok };

std::string_view to_string(TokenizerKind k);
TokenizerKind tokenizer_kind_from_string(std::string_view s);

// Uniform front end over the four schemes. Copyable; pretokenized data is
// shared.
class Tokenizer {
 public:
  static Tokenizer chars();
  static Tokenizer words(Vocabulary vocab);
  static Tokenizer wordpiece(Vocabulary vocab);
  static Tokenizer pretokenized(Pretokenized data);

  TokenizedWord operator()(std::string_view word) const;

  TokenizerKind kind() const { return kind_; }
  const Vocabulary* vocabulary() const;

 private:
  TokenizerKind kind_ = TokenizerKind::Char;
  Vocabulary vocab_;
  std::shared_ptr<const Pretokenized> pretok_;
};

}  // namespace morpheval
