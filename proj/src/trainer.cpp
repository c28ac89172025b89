#include "morpheval/trainer.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "morpheval/text.hpp"

namespace morpheval {

namespace {

using PairKey = std::uint64_t;

PairKey key_of(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct TrainWord {
  std::vector<std::uint32_t> pieces;
  std::uint64_t count = 0;
};

struct PairStats {
  std::uint64_t count = 0;
  std::vector<std::uint32_t> words;  // may contain stale/duplicate entries
};

struct TrainState {
  std::vector<std::string> piece_text;
  std::vector<std::uint64_t> piece_freq;
  std::unordered_map<std::string, std::uint32_t, StringHash, std::equal_to<>> piece_id;
  std::vector<TrainWord> words;
  std::unordered_map<PairKey, PairStats> pairs;

  std::uint32_t intern(const std::string& text) {
    auto it = piece_id.find(text);
    if (it != piece_id.end()) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(piece_text.size());
    piece_text.push_back(text);
    piece_freq.push_back(0);
    piece_id.emplace(text, id);
    return id;
  }

  void add_word_stats(std::uint32_t w, int sign) {
    const TrainWord& word = words[w];
    for (std::size_t i = 0; i < word.pieces.size(); ++i) {
      if (sign > 0)
        piece_freq[word.pieces[i]] += word.count;
      else
        piece_freq[word.pieces[i]] -= word.count;
      if (i + 1 < word.pieces.size()) {
        PairStats& ps = pairs[key_of(word.pieces[i], word.pieces[i + 1])];
        if (sign > 0) {
          ps.count += word.count;
          if (ps.words.empty() || ps.words.back() != w) ps.words.push_back(w);
        } else {
          ps.count -= word.count;
        }
      }
    }
  }
};

// Exact comparison of count_a/(fl_a*fr_a) vs count_b/(fl_b*fr_b).
int compare_scores(std::uint64_t ca, std::uint64_t fla, std::uint64_t fra, std::uint64_t cb,
                   std::uint64_t flb, std::uint64_t frb) {
  unsigned __int128 lhs = static_cast<unsigned __int128>(ca) * flb * frb;
  unsigned __int128 rhs = static_cast<unsigned __int128>(cb) * fla * fra;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

std::string merged_text(const TrainState& st, std::uint32_t a, std::uint32_t b,
                        const std::string& marker) {
  const std::string& right = st.piece_text[b];
  // Right element of an adjacent pair is never word-initial, so it carries
  // the marker.
  return st.piece_text[a] + right.substr(marker.size());
}

}  // namespace

TrainResult train_wordpiece(const Corpus& corpus, const TrainerConfig& config, Execution exec) {
  if (corpus.word_counts.empty()) throw std::invalid_argument("train_wordpiece: empty corpus");
  const std::string& marker = config.continuation_marker;

  std::vector<std::pair<std::string, std::uint64_t>> ranked(corpus.word_counts.begin(),
                                                            corpus.word_counts.end());
  std::sort(ranked.begin(), ranked.end());

  // Segment every word into code-point pieces up front (data parallel), then
  // intern serially for stable piece ids.
  std::vector<std::vector<std::string>> segmented(ranked.size());
  for_each_index(ranked.size(), exec, [&](std::size_t i) {
    std::u32string cps = text::decode_utf8(ranked[i].first);
    segmented[i].reserve(cps.size());
    for (std::size_t p = 0; p < cps.size(); ++p) {
      std::string piece = p == 0 ? "" : marker;
      text::append_utf8(piece, cps[p]);
      segmented[i].push_back(std::move(piece));
    }
  });

  TrainState st;
  st.words.resize(ranked.size());
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    st.words[i].count = ranked[i].second;
    st.words[i].pieces.reserve(segmented[i].size());
    for (const std::string& piece : segmented[i]) st.words[i].pieces.push_back(st.intern(piece));
  }

  std::vector<std::string> initial_plain, initial_cont;
  for (const std::string& p : st.piece_text) {
    if (p.compare(0, marker.size(), marker) == 0)
      initial_cont.push_back(p);
    else
      initial_plain.push_back(p);
  }
  std::sort(initial_plain.begin(), initial_plain.end());
  std::sort(initial_cont.begin(), initial_cont.end());

  std::size_t base = config.special_tokens.size() + initial_plain.size() + initial_cont.size();
  if (config.target_vocab_size < base)
    throw std::invalid_argument("target vocabulary size " +
                                std::to_string(config.target_vocab_size) +
                                " is below specials + alphabet (" + std::to_string(base) + ")");

  for (std::uint32_t w = 0; w < st.words.size(); ++w) st.add_word_stats(w, +1);

  std::vector<std::string> merge_entries;
  TrainResult res;
  std::size_t vocab_size = base;
  std::vector<std::uint32_t> touched;

  while (vocab_size < config.target_vocab_size) {
    // Scan all live pairs for the best score; exact rational comparison
    // keeps the winner independent of hash iteration order.
    bool have_best = false;
    PairKey best_key = 0;
    std::uint64_t best_count = 0;
    std::string best_text;
    for (auto it = st.pairs.begin(); it != st.pairs.end();) {
      if (it->second.count == 0) {
        it = st.pairs.erase(it);
        continue;
      }
      std::uint64_t cnt = it->second.count;
      if (cnt >= config.min_pair_frequency) {
        std::uint32_t a = static_cast<std::uint32_t>(it->first >> 32);
        std::uint32_t b = static_cast<std::uint32_t>(it->first);
        bool better = false;
        if (!have_best) {
          better = true;
        } else {
          std::uint32_t ba = static_cast<std::uint32_t>(best_key >> 32);
          std::uint32_t bb = static_cast<std::uint32_t>(best_key);
          int c = compare_scores(cnt, st.piece_freq[a], st.piece_freq[b], best_count,
                                 st.piece_freq[ba], st.piece_freq[bb]);
          if (c > 0) {
            better = true;
          } else if (c == 0) {
            if (cnt > best_count) {
              better = true;
            } else if (cnt == best_count) {
              std::string text = merged_text(st, a, b, marker);
              if (text < best_text ||
                  (text == best_text &&
                   std::make_pair(st.piece_text[a], st.piece_text[b]) <
                       std::make_pair(st.piece_text[ba], st.piece_text[bb])))
                better = true;
            }
          }
        }
        if (better) {
          have_best = true;
          best_key = it->first;
          best_count = cnt;
          best_text = merged_text(st, a, b, marker);
        }
      }
      ++it;
    }
    if (!have_best) {
      res.exhausted = true;
      break;
    }

    std::uint32_t a = static_cast<std::uint32_t>(best_key >> 32);
    std::uint32_t b = static_cast<std::uint32_t>(best_key);
    bool new_entry = st.piece_id.find(best_text) == st.piece_id.end();
    std::uint32_t m = st.intern(best_text);

    touched = st.pairs[best_key].words;
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::uint32_t w : touched) {
      std::vector<std::uint32_t>& pieces = st.words[w].pieces;
      bool has_pair = false;
      for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
        if (pieces[i] == a && pieces[i + 1] == b) {
          has_pair = true;
          break;
        }
      if (!has_pair) continue;  // stale registration
      st.add_word_stats(w, -1);
      std::vector<std::uint32_t> merged;
      merged.reserve(pieces.size());
      for (std::size_t i = 0; i < pieces.size();) {
        if (i + 1 < pieces.size() && pieces[i] == a && pieces[i + 1] == b) {
          merged.push_back(m);
          i += 2;
        } else {
          merged.push_back(pieces[i]);
          ++i;
        }
      }
      pieces = std::move(merged);
      st.add_word_stats(w, +1);
    }

    ++res.merges;
    if (new_entry) {
      merge_entries.push_back(best_text);
      ++vocab_size;
    }
  }

  std::vector<std::string> entries;
  entries.reserve(vocab_size);
  entries.insert(entries.end(), config.special_tokens.begin(), config.special_tokens.end());
  entries.insert(entries.end(), initial_plain.begin(), initial_plain.end());
  entries.insert(entries.end(), initial_cont.begin(), initial_cont.end());
  entries.insert(entries.end(), merge_entries.begin(), merge_entries.end());
  res.vocab = Vocabulary(std::move(entries), config.special_tokens, marker);
  return res;
}

std::vector<std::pair<std::string, std::uint64_t>> rank_words(const Corpus& corpus) {
  if (corpus.word_counts.empty()) throw std::invalid_argument("rank_words: empty corpus");
  std::vector<std::pair<std::string, std::uint64_t>> out(corpus.word_counts.begin(),
                                                         corpus.word_counts.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  return out;
}

Vocabulary top_k_vocab(const std::vector<std::pair<std::string, std::uint64_t>>& ranking,
                       std::size_t k) {
  if (k < 1 || k > ranking.size())
    throw std::invalid_argument("top_k_vocab: k=" + std::to_string(k) + " outside [1, " +
                                std::to_string(ranking.size()) + "]");
  std::vector<std::string> entries = {"[UNK]"};
  entries.reserve(k + 1);
  for (std::size_t i = 0; i < k; ++i) entries.push_back(ranking[i].first);
  return Vocabulary(std::move(entries), {"[UNK]"});
}

}  // namespace morpheval
