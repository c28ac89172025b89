#include "morpheval/morphdata.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "morpheval/text.hpp"

namespace morpheval {

namespace {

std::vector<std::string> split_plus(const std::string& joined) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = joined.find('+', start);
    out.push_back(joined.substr(start, pos == std::string::npos ? pos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string join_plus(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back('+');
    out += parts[i];
  }
  return out;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

GoldLoadResult load_gold(const std::filesystem::path& path) {
  GoldLoadResult res;
  std::vector<std::string> lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    std::size_t lineno = i + 1;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      res.issues.push_back({lineno, "invalid JSON object"});
      continue;
    }
    if (!j.contains("word") || !j["word"].is_string() || !j.contains("lemma") ||
        !j["lemma"].is_string()) {
      res.issues.push_back({lineno, "missing string fields word/lemma"});
      continue;
    }
    if (!j.contains("suffixes") || !j["suffixes"].is_string()) {
      res.issues.push_back({lineno, "suffixes must be a \"+\"-joined string (may be empty)"});
      continue;
    }
    MorphAnalysis a;
    a.word = text::normalize(j["word"].get<std::string>());
    a.lemma = text::normalize(j["lemma"].get<std::string>());
    std::string suffixes = text::normalize(j["suffixes"].get<std::string>());
    if (a.word.empty() || a.lemma.empty()) {
      res.issues.push_back({lineno, "empty word or lemma after normalization"});
      continue;
    }
    if (!suffixes.empty()) {
      a.suffixes = split_plus(suffixes);
      bool empty_morph = false;
      for (const std::string& s : a.suffixes) empty_morph |= s.empty();
      if (empty_morph) {
        res.issues.push_back({lineno, "empty suffix morph"});
        continue;
      }
    }
    res.items.push_back(std::move(a));
  }
  return res;
}

void write_gold(const std::filesystem::path& path, const std::vector<MorphAnalysis>& items) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (const MorphAnalysis& a : items) {
    nlohmann::ordered_json j;
    j["word"] = a.word;
    j["lemma"] = a.lemma;
    j["suffixes"] = join_plus(a.suffixes);
    out << j.dump() << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

GoldSegmentation gold_segmentation(const MorphAnalysis& a) {
  GoldSegmentation g;
  g.morphs.reserve(a.suffixes.size() + 1);
  g.morphs.push_back(a.lemma);
  g.morphs.insert(g.morphs.end(), a.suffixes.begin(), a.suffixes.end());
  g.k = g.morphs.size();
  std::string concat;
  std::uint32_t offset = 0;
  for (const std::string& m : g.morphs) {
    concat += m;
    offset += static_cast<std::uint32_t>(text::cp_length(m));
    g.boundaries.offsets.push_back(offset);
  }
  g.concatenative = concat == a.word;
  return g;
}

Corpus load_corpus(const std::filesystem::path& path, Execution exec) {
  std::vector<std::string> lines = read_lines(path);
  Corpus c;
  c.documents.resize(lines.size());
  std::vector<std::vector<std::string>> words(lines.size());
  for_each_index(lines.size(), exec, [&](std::size_t i) {
    c.documents[i] = text::normalize(lines[i]);
    words[i] = text::split_words(c.documents[i]);
  });
  for (const std::vector<std::string>& ws : words) {
    for (const std::string& w : ws) {
      ++c.word_counts[w];
      ++c.total_tokens;
    }
  }
  return c;
}

}  // namespace morpheval
