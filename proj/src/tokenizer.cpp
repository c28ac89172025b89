#include "morpheval/tokenizer.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "morpheval/text.hpp"

namespace morpheval {

namespace {

Token unk_token(const Vocabulary* vocab) {
  Token t;
  t.text = vocab ? vocab->unk_token() : "[UNK]";
  t.is_unknown = true;
  return t;
}

bool looks_special(const std::string& entry) {
  return entry.size() >= 2 && entry.front() == '[' && entry.back() == ']';
}

}  // namespace

std::string rendered(const Token& t, std::string_view marker) {
  if (!t.is_continuation) return t.text;
  std::string out(marker);
  out += t.text;
  return out;
}

std::string rendered_joined(const TokenizedWord& w, std::string_view sep,
                            std::string_view marker) {
  std::string out;
  for (std::size_t i = 0; i < w.tokens.size(); ++i) {
    if (i) out += sep;
    out += rendered(w.tokens[i], marker);
  }
  return out;
}

Vocabulary::Vocabulary(std::vector<std::string> entries, std::vector<std::string> specials,
                       std::string marker)
    : entries_(std::move(entries)), specials_(std::move(specials)), marker_(std::move(marker)) {
  for (const std::string& e : entries_) {
    if (!raw_.insert(e).second) throw std::invalid_argument("duplicate vocabulary entry: " + e);
    bool special = false;
    for (const std::string& s : specials_) special |= (e == s);
    if (special) continue;
    if (e.size() > marker_.size() && e.compare(0, marker_.size(), marker_) == 0)
      continuation_.insert(e.substr(marker_.size()));
    else
      initial_.insert(e);
  }
  if (!specials_.empty()) {
    unk_ = specials_.front();
    for (const std::string& s : specials_)
      if (s == "[UNK]") unk_ = s;
  }
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::string> entries, specials;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (looks_special(line)) specials.push_back(line);
    entries.push_back(line);
  }
  return Vocabulary(std::move(entries), std::move(specials));
}

void Vocabulary::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (const std::string& e : entries_) out << e << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

bool Vocabulary::contains(std::string_view raw_entry) const {
  return raw_.find(raw_entry) != raw_.end();
}

bool Vocabulary::has_initial(std::string_view piece) const {
  return initial_.find(piece) != initial_.end();
}

bool Vocabulary::has_continuation(std::string_view piece) const {
  return continuation_.find(piece) != continuation_.end();
}

TokenizedWord char_tokenize(std::string_view word) {
  TokenizedWord out;
  out.word = std::string(word);
  std::u32string cps = text::decode_utf8(word);
  out.tokens.reserve(cps.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    Token t;
    text::append_utf8(t.text, cps[i]);
    t.is_continuation = i > 0;
    out.tokens.push_back(std::move(t));
  }
  return out;
}

TokenizedWord word_tokenize(std::string_view word, const Vocabulary& vocab) {
  TokenizedWord out;
  out.word = std::string(word);
  if (vocab.has_initial(word)) {
    Token t;
    t.text = std::string(word);
    out.tokens.push_back(std::move(t));
  } else {
    out.tokens.push_back(unk_token(&vocab));
  }
  return out;
}

TokenizedWord wordpiece_tokenize(std::string_view word, const Vocabulary& vocab) {
  TokenizedWord out;
  out.word = std::string(word);
  std::u32string cps = text::decode_utf8(word);
  if (cps.empty()) {
    out.tokens.push_back(unk_token(&vocab));
    return out;
  }
  std::size_t start = 0;
  while (start < cps.size()) {
    std::size_t end = cps.size();
    std::string piece;
    bool found = false;
    while (end > start) {
      piece = text::encode_utf8(std::u32string_view(cps).substr(start, end - start));
      if (start == 0 ? vocab.has_initial(piece) : vocab.has_continuation(piece)) {
        found = true;
        break;
      }
      --end;
    }
    if (!found) {
      out.tokens.clear();
      out.tokens.push_back(unk_token(&vocab));
      return out;
    }
    Token t;
    t.text = std::move(piece);
    t.is_continuation = start > 0;
    out.tokens.push_back(std::move(t));
    start = end;
  }
  return out;
}

Pretokenized load_pretokenized(const std::filesystem::path& path, std::string_view marker) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  Pretokenized res;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("word") || !j["word"].is_string() ||
        !j.contains("tokens") || !j["tokens"].is_array() || j["tokens"].empty()) {
      res.issues.push_back({lineno, "expected {\"word\", \"tokens\": [...]}"});
      continue;
    }
    std::string word = text::normalize(j["word"].get<std::string>());
    if (word.empty()) {
      res.issues.push_back({lineno, "empty word after normalization"});
      continue;
    }
    TokenizedWord tw;
    tw.word = word;
    std::string concat;
    bool bad = false;
    for (const auto& el : j["tokens"]) {
      if (!el.is_string()) {
        res.issues.push_back({lineno, "non-string token"});
        bad = true;
        break;
      }
      std::string raw = text::normalize(el.get<std::string>());
      Token t;
      if (raw.size() > marker.size() && raw.compare(0, marker.size(), marker) == 0) {
        t.is_continuation = true;
        t.text = raw.substr(marker.size());
      } else {
        t.text = raw;
      }
      if (t.text.empty()) {
        res.issues.push_back({lineno, "empty token piece"});
        bad = true;
        break;
      }
      if (looks_special(t.text)) t.is_unknown = true;
      if (tw.tokens.empty() && t.is_continuation) {
        res.issues.push_back({lineno, "first token carries the continuation marker"});
        bad = true;
        break;
      }
      if (!t.is_unknown) concat += t.text;
      tw.tokens.push_back(std::move(t));
    }
    if (bad) continue;
    if (!tw.has_unknown() && concat != word) {
      res.issues.push_back({lineno, "tokens do not concatenate to the word"});
      continue;
    }
    auto [it, inserted] = res.by_word.insert_or_assign(std::move(word), std::move(tw));
    if (!inserted) ++res.duplicates;
  }
  return res;
}

std::string_view to_string(TokenizerKind k) {
  switch (k) {
    case TokenizerKind::Char: return "char";
    case TokenizerKind::Word: return "word";
    case TokenizerKind::WordPiece: return "wordpiece";
    case TokenizerKind::Pretok: return "pretokenized";
  }
  return "?";
}

TokenizerKind tokenizer_kind_from_string(std::string_view s) {
  if (s == "char") return TokenizerKind::Char;
  if (s == "word") return TokenizerKind::Word;
  if (s == "wordpiece") return TokenizerKind::WordPiece;
  if (s == "pretokenized") return TokenizerKind::Pretok;
  throw std::invalid_argument("unknown tokenizer: " + std::string(s));
}

Tokenizer Tokenizer::chars() {
  Tokenizer t;
  t.kind_ = TokenizerKind::Char;
  return t;
}

Tokenizer Tokenizer::words(Vocabulary vocab) {
  Tokenizer t;
  t.kind_ = TokenizerKind::Word;
  t.vocab_ = std::move(vocab);
  return t;
}

Tokenizer Tokenizer::wordpiece(Vocabulary vocab) {
  Tokenizer t;
  t.kind_ = TokenizerKind::WordPiece;
  t.vocab_ = std::move(vocab);
  return t;
}

Tokenizer Tokenizer::pretokenized(Pretokenized data) {
  Tokenizer t;
  t.kind_ = TokenizerKind::Pretok;
  t.pretok_ = std::make_shared<Pretokenized>(std::move(data));
  return t;
}

const Vocabulary* Tokenizer::vocabulary() const {
  if (kind_ == TokenizerKind::Word || kind_ == TokenizerKind::WordPiece) return &vocab_;
  return nullptr;
}

TokenizedWord Tokenizer::operator()(std::string_view word) const {
  switch (kind_) {
    case TokenizerKind::Char:
      return char_tokenize(word);
    case TokenizerKind::Word:
      return word_tokenize(word, vocab_);
    case TokenizerKind::WordPiece:
      return wordpiece_tokenize(word, vocab_);
    case TokenizerKind::Pretok: {
      auto it = pretok_->by_word.find(word);
      if (it != pretok_->by_word.end()) return it->second;
      TokenizedWord out;
      out.word = std::string(word);
      out.tokens.push_back(unk_token(nullptr));
      return out;
    }
  }
  return {};
}

}  // namespace morpheval
