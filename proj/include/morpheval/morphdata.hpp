#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "morpheval/boundary.hpp"
#include "morpheval/parallel.hpp"

namespace morpheval {

// One gold word: surface form, lemma, and suffix morphs in order. All fields
// are stored normalized.
struct MorphAnalysis {
  std::string word;
  std::string lemma;
  std::vector<std::string> suffixes;
};

// Lemma + suffixes laid over the surface form. `concatenative` is true when
// the morphs concatenate exactly to the word; only then do `boundaries`
// describe real positions in the surface string.
struct GoldSegmentation {
  std::vector<std::string> morphs;  // lemma first
  std::size_t k = 0;                // morph count
  BoundarySet boundaries;           // cumulative code-point ends of morphs
  bool concatenative = false;
};

struct LineIssue {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct GoldLoadResult {
  std::vector<MorphAnalysis> items;
  std::vector<LineIssue> issues;
};

// Raw text corpus: one document per line. Words are whitespace-split after
// normalization.
struct Corpus {
  std::vector<std::string> documents;
  std::unordered_map<std::string, std::uint64_t> word_counts;
  std::uint64_t total_tokens = 0;
};

// Reads gold analyses from JSONL ({"word","lemma","suffixes"} with suffixes
// "+"-joined). Lines that fail to parse or violate the schema are skipped
// and reported; only I/O failure throws.
GoldLoadResult load_gold(const std::filesystem::path& path);

void write_gold(const std::filesystem::path& path, const std::vector<MorphAnalysis>& items);

GoldSegmentation gold_segmentation(const MorphAnalysis& a);

Corpus load_corpus(const std::filesystem::path& path, Execution exec = Execution::Parallel);

}  // namespace morpheval
