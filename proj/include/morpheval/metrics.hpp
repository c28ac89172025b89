#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "morpheval/boundary.hpp"
#include "morpheval/bootstrap.hpp"
#include "morpheval/morphdata.hpp"
#include "morpheval/parallel.hpp"
#include "morpheval/tokenizer.hpp"

namespace morpheval {

inline constexpr double kEps = 1e-9;

// Boundary positions implied by a tokenization: cumulative code-point ends
// of the pieces. Requires a fully segmented word (throws on unknown tokens;
// the evaluation routes those to a skip counter instead of calling this).
BoundarySet pred_boundaries(const TokenizedWord& w);

struct BoundaryCounts {
  std::uint64_t tp = 0, fp = 0, fn = 0;
};

BoundaryCounts boundary_counts(const BoundarySet& gold, const BoundarySet& pred);

struct MicroPRF {
  double p = 0, r = 0, f1 = 0;
  std::uint64_t tp = 0, fp = 0, fn = 0;
  bool p_degenerate = false;  // tp + fp == 0
  bool r_degenerate = false;  // tp + fn == 0
};

// Corpus-level scores from summed counts.
MicroPRF micro_prf(std::span<const BoundaryCounts> items);

struct MacroPRF {
  double p = 0, r = 0, f1 = 0;
};

// Mean of per-item scores, each smoothed with eps in the denominator.
MacroPRF macro_prf(std::span<const BoundaryCounts> items, double eps = kEps);

// Mean number of tokens per word.
double fertility(std::span<const TokenizedWord> words);

// Marked tokens over all tokens.
double continuation_rate(std::span<const TokenizedWord> words);

// True when the lemma's right edge is one of the predicted boundaries.
bool lemma_hit(const GoldSegmentation& gold, const BoundarySet& pred);

// {over, under} segmentation: means of the per-word ratios n/(k+eps) and
// k/(n+eps), n = predicted tokens, k = gold morphs.
std::pair<double, double> over_under_seg(std::span<const std::pair<std::size_t, std::size_t>> nk,
                                         double eps = kEps);

std::size_t edit_distance(std::u32string_view a, std::u32string_view b);
std::size_t edit_distance(std::span<const std::string> a, std::span<const std::string> b);

struct Alignment {
  std::uint64_t hits = 0, subs = 0, dels = 0, inss = 0;
};

// Levenshtein alignment of token sequences; ties during backtrace prefer
// substitution over deletion over insertion.
Alignment align_tokens(std::span<const std::string> ref, std::span<const std::string> hyp);

struct SequenceAgreement {
  double cer = 0, wer = 0, mer = 0, wil = 0, wip = 0;
  double exact_match = 0;
};

// items: (gold morphs, predicted pieces without markers), one per word.
SequenceAgreement sequence_agreement(
    std::span<const std::pair<std::vector<std::string>, std::vector<std::string>>> items);

struct AffixSummary {
  double coverage = 0;   // affix types appearing verbatim as a predicted piece type
  double atomicity = 0;  // affix occurrences carved out exactly by predicted boundaries
  std::size_t types_considered = 0;
  std::size_t types_excluded = 0;  // requested types with no occurrence in the data
  std::uint64_t occurrences = 0;
  std::uint64_t atomic_occurrences = 0;
  std::vector<std::string> uncovered;  // considered types never produced as a piece
};

// Suffix types by descending occurrence count (ties alphabetical).
std::vector<std::string> top_affixes(std::span<const MorphAnalysis> analyses, std::size_t top);

// preds[i] must be the tokenization of analyses[i]. Occurrences are counted
// over concatenative items with fully known tokenizations.
AffixSummary affix_metrics(std::span<const MorphAnalysis> analyses,
                           std::span<const TokenizedWord> preds,
                           const std::vector<std::string>& affixes);

// Per-item numbers for one evaluated (concatenative, fully known) word;
// the unit of bootstrap resampling.
struct ItemDiagnostics {
  std::uint32_t n = 0;  // predicted tokens
  std::uint32_t k = 0;  // gold morphs
  std::uint32_t tp = 0, fp = 0, fn = 0;
  double p = 0, r = 0, f1 = 0;  // eps-smoothed per-item scores
  bool lemma_hit = false;
  bool exact = false;
  std::uint32_t char_edit = 0;
  std::uint32_t gold_chars = 0;  // code points of "+"-joined gold morphs
  std::uint32_t hits = 0, subs = 0, dels = 0, inss = 0;
};

// Per-item numbers kept for every word, unknowns included.
struct WordShape {
  std::uint32_t n = 0;
  std::uint32_t continuations = 0;
  bool lemma_single = false;
  bool lemma_unknown = false;
};

struct EvalOptions {
  std::size_t affix_top = 200;
  std::vector<std::string> affixes;  // overrides affix_top when non-empty
  std::size_t bootstrap_resamples = 0;
  std::uint64_t seed = 0;
  double eps = kEps;
  Execution exec = Execution::Parallel;
};

struct MetricsReport {
  std::size_t total_items = 0;
  std::size_t evaluated_items = 0;
  std::size_t skipped_nonconcatenative = 0;
  std::size_t unk_words = 0;
  std::size_t long_words = 0;
  double unk_word_rate = 0;

  double subwords_per_word = 0;  // evaluated pool
  double fertility = 0;          // all words
  double continuation_rate = 0;  // all words

  MicroPRF micro;
  MacroPRF macro;

  double lemma_hit_rate = 0;
  double lemma_single_rate = 0;
  double lemma_unknown_rate = 0;

  double overseg = 0;
  double underseg = 0;

  SequenceAgreement agreement;

  AffixSummary affix;

  std::map<std::string, ConfidenceInterval> intervals;  // present when bootstrapped
};

struct Evaluation {
  MetricsReport report;
  std::vector<ItemDiagnostics> items;   // evaluated pool, analysis order
  std::vector<WordShape> shapes;        // all items, analysis order
};

Evaluation evaluate(std::span<const MorphAnalysis> analyses, const Tokenizer& tok,
                    const EvalOptions& opt = {});

}  // namespace morpheval
