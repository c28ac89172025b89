#include "morpheval/report.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <vector>

namespace morpheval {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void append_metric_columns(std::string& out, const MetricsReport& r) {
  auto add = [&](const std::string& v) {
    out.push_back(',');
    out += v;
  };
  add(fmt(r.subwords_per_word));
  add(fmt(r.micro.p));
  add(fmt(r.micro.r));
  add(fmt(r.micro.f1));
  add(fmt(r.macro.p));
  add(fmt(r.macro.r));
  add(fmt(r.macro.f1));
  add(fmt(r.lemma_single_rate));
  add(fmt(r.lemma_hit_rate));
  add(fmt(r.agreement.exact_match));
  add(fmt(r.overseg));
  add(fmt(r.underseg));
  add(fmt(r.agreement.cer));
  add(fmt(r.agreement.wer));
  add(fmt(r.agreement.mer));
  add(fmt(r.agreement.wil));
  add(fmt(r.agreement.wip));
  add(fmt(r.affix.coverage));
  add(fmt(r.affix.atomicity));
  add(fmt(r.fertility));
  add(fmt(r.continuation_rate));
  add(std::to_string(r.total_items));
  add(std::to_string(r.evaluated_items));
  add(std::to_string(r.skipped_nonconcatenative));
  add(std::to_string(r.unk_words));
  add(fmt(r.unk_word_rate));
  add(std::to_string(r.long_words));
}

}  // namespace

nlohmann::ordered_json report_json(const MetricsReport& r) {
  nlohmann::ordered_json j;
  j["items"] = {{"total", r.total_items},
                {"evaluated", r.evaluated_items},
                {"skipped_nonconcatenative", r.skipped_nonconcatenative},
                {"unk_words", r.unk_words},
                {"unk_word_rate", r.unk_word_rate},
                {"long_words", r.long_words}};
  j["granularity"] = {{"subwords_per_word", r.subwords_per_word},
                      {"fertility", r.fertility},
                      {"continuation_rate", r.continuation_rate},
                      {"overseg", r.overseg},
                      {"underseg", r.underseg}};
  j["boundary"] = {{"micro",
                    {{"p", r.micro.p},
                     {"r", r.micro.r},
                     {"f1", r.micro.f1},
                     {"tp", r.micro.tp},
                     {"fp", r.micro.fp},
                     {"fn", r.micro.fn},
                     {"p_degenerate", r.micro.p_degenerate},
                     {"r_degenerate", r.micro.r_degenerate}}},
                   {"macro", {{"p", r.macro.p}, {"r", r.macro.r}, {"f1", r.macro.f1}}}};
  j["lemma"] = {{"hit_rate", r.lemma_hit_rate},
                {"single_rate", r.lemma_single_rate},
                {"unknown_rate", r.lemma_unknown_rate}};
  j["agreement"] = {{"cer", r.agreement.cer},     {"wer", r.agreement.wer},
                    {"mer", r.agreement.mer},     {"wil", r.agreement.wil},
                    {"wip", r.agreement.wip},     {"exact_match", r.agreement.exact_match}};
  j["affix"] = {{"coverage", r.affix.coverage},
                {"atomicity", r.affix.atomicity},
                {"types_considered", r.affix.types_considered},
                {"types_excluded", r.affix.types_excluded},
                {"occurrences", r.affix.occurrences},
                {"atomic_occurrences", r.affix.atomic_occurrences},
                {"uncovered", r.affix.uncovered}};
  if (!r.intervals.empty()) {
    nlohmann::ordered_json ci = nlohmann::ordered_json::object();
    for (const auto& [name, iv] : r.intervals) ci[name] = {{"low", iv.low}, {"high", iv.high}};
    j["intervals"] = std::move(ci);
  }
  return j;
}

std::string csv_header() {
  return "split,tokenizer,sw_per_word,p_micro,r_micro,f1_micro,p_macro,r_macro,f1_macro,"
         "lemma_single,lemma_boundary,exact_match,overseg,underseg,cer,wer,mer,wil,wip,"
         "affix_coverage,affix_atomicity,fertility,continuation_rate,items,evaluated,"
         "skipped_nonconcatenative,unk_words,unk_word_rate,long_words";
}

std::string csv_row(std::string_view split, std::string_view tokenizer, const MetricsReport& r) {
  std::string out;
  out += split;
  out.push_back(',');
  out += tokenizer;
  append_metric_columns(out, r);
  return out;
}

std::string console_summary(const MetricsReport& r) {
  std::string out;
  auto line = [&](const char* name, const std::string& value) {
    out += name;
    out += ": ";
    out += value;
    out.push_back('\n');
  };
  line("items", std::to_string(r.total_items) + " total, " + std::to_string(r.evaluated_items) +
                    " evaluated, " + std::to_string(r.skipped_nonconcatenative) +
                    " non-concatenative, " + std::to_string(r.unk_words) + " unk");
  line("subwords/word", fmt(r.subwords_per_word));
  line("fertility (all words)", fmt(r.fertility));
  line("continuation rate", fmt(r.continuation_rate));
  line("boundary micro P/R/F1",
       fmt(r.micro.p) + " / " + fmt(r.micro.r) + " / " + fmt(r.micro.f1));
  line("boundary macro P/R/F1",
       fmt(r.macro.p) + " / " + fmt(r.macro.r) + " / " + fmt(r.macro.f1));
  line("lemma boundary rate", fmt(r.lemma_hit_rate));
  line("lemma single rate", fmt(r.lemma_single_rate));
  if (r.lemma_unknown_rate > 0) line("lemma unknown rate", fmt(r.lemma_unknown_rate));
  line("exact match", fmt(r.agreement.exact_match));
  line("overseg / underseg", fmt(r.overseg) + " / " + fmt(r.underseg));
  line("cer / wer / mer", fmt(r.agreement.cer) + " / " + fmt(r.agreement.wer) + " / " +
                              fmt(r.agreement.mer));
  line("wil / wip", fmt(r.agreement.wil) + " / " + fmt(r.agreement.wip));
  line("affix coverage / atomicity", fmt(r.affix.coverage) + " / " + fmt(r.affix.atomicity));
  auto it = r.intervals.find("f1_macro");
  if (it != r.intervals.end())
    line("macro F1 95% CI", "[" + fmt(it->second.low) + ", " + fmt(it->second.high) + "]");
  return out;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::string out = "vocab_size,split,metric,value,ci_low,ci_high\n";
  for (const SweepRow& row : rows) {
    std::string prefix = std::to_string(row.vocab_size) + "," + row.split + ",";
    if (row.failed) {
      out += prefix + "status,failed,,\n";
      continue;
    }
    const MetricsReport& r = row.report;
    const std::pair<const char*, double> metrics[] = {
        {"sw_per_word", r.subwords_per_word},
        {"p_micro", r.micro.p},
        {"r_micro", r.micro.r},
        {"f1_micro", r.micro.f1},
        {"p_macro", r.macro.p},
        {"r_macro", r.macro.r},
        {"f1_macro", r.macro.f1},
        {"lemma_single", r.lemma_single_rate},
        {"lemma_boundary", r.lemma_hit_rate},
        {"exact_match", r.agreement.exact_match},
        {"overseg", r.overseg},
        {"underseg", r.underseg},
        {"cer", r.agreement.cer},
        {"wer", r.agreement.wer},
        {"mer", r.agreement.mer},
        {"wil", r.agreement.wil},
        {"wip", r.agreement.wip},
        {"affix_coverage", r.affix.coverage},
        {"affix_atomicity", r.affix.atomicity},
        {"fertility", r.fertility},
        {"continuation_rate", r.continuation_rate},
        {"unk_word_rate", r.unk_word_rate},
    };
    for (const auto& [name, value] : metrics) {
      out += prefix + name + "," + fmt(value);
      auto it = r.intervals.find(name);
      if (it != r.intervals.end())
        out += "," + fmt(it->second.low) + "," + fmt(it->second.high) + "\n";
      else
        out += ",,\n";
    }
  }
  return out;
}

std::string sweep_markdown(std::span<const SweepRow> rows) {
  std::map<std::string, std::vector<const SweepRow*>> by_split;
  for (const SweepRow& row : rows) by_split[row.split].push_back(&row);
  std::string out;
  for (const auto& [split, list] : by_split) {
    out += "### ";
    out += split;
    out += "\n\n";
    out += "| vocab | Sw/W | F1 (micro) | F1 (macro) | lemma single | lemma boundary | "
           "exact | overseg | underseg | CER | WER |\n";
    out += "|---|---|---|---|---|---|---|---|---|---|---|\n";
    for (const SweepRow* row : list) {
      if (row->failed) {
        out += "| " + std::to_string(row->vocab_size) + " | failed: " + row->error +
               " | | | | | | | | | |\n";
        continue;
      }
      const MetricsReport& r = row->report;
      out += "| " + std::to_string(row->vocab_size) + " | " + fmt(r.subwords_per_word) + " | " +
             fmt(r.micro.f1) + " | " + fmt(r.macro.f1) + " | " + fmt(r.lemma_single_rate) +
             " | " + fmt(r.lemma_hit_rate) + " | " + fmt(r.agreement.exact_match) + " | " +
             fmt(r.overseg) + " | " + fmt(r.underseg) + " | " + fmt(r.agreement.cer) + " | " +
             fmt(r.agreement.wer) + " |\n";
    }
    out.push_back('\n');
  }
  return out;
}

std::string coverage_csv(std::span<const CoveragePoint> points) {
  std::string out = "k,vocab_fraction,train_coverage,test_coverage,test_type_coverage\n";
  for (const CoveragePoint& p : points) {
    out += std::to_string(p.k) + "," + fmt(p.vocab_fraction) + "," +
           fmt(p.train_token_coverage) + "," + fmt(p.test_token_coverage) + "," +
           fmt(p.test_type_coverage) + "\n";
  }
  return out;
}

void write_text_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace morpheval
