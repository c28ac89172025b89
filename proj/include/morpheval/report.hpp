#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "morpheval/coverage.hpp"
#include "morpheval/metrics.hpp"

namespace morpheval {

nlohmann::ordered_json report_json(const MetricsReport& r);

// Flat per-run row. Column order: segmentation rate first, then boundary
// precision/recall/F1 (micro then macro), lemma rates, exact match,
// over/under-segmentation, the edit-based family, affix scores, and item
// accounting.
std::string csv_header();
std::string csv_row(std::string_view split, std::string_view tokenizer, const MetricsReport& r);

std::string console_summary(const MetricsReport& r);

struct SweepRow {
  std::size_t vocab_size = 0;
  std::string split;
  MetricsReport report;
  bool failed = false;
  std::string error;
};

std::string sweep_csv(std::span<const SweepRow> rows);
std::string sweep_markdown(std::span<const SweepRow> rows);

std::string coverage_csv(std::span<const CoveragePoint> points);

// Writes via a sibling temp file + rename so readers never observe a
// partial file.
void write_text_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace morpheval
