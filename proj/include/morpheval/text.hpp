#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace morpheval::text {

// UTF-8 decoding; malformed byte sequences become U+FFFD, one replacement
// per rejected byte.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);
void append_utf8(std::string& out, char32_t cp);

// Number of code points in a UTF-8 string.
std::size_t cp_length(std::string_view s);

// Canonical decomposition + compatibility mappings, canonical reordering,
// then canonical composition (NFKC). Hangul handled algorithmically.
std::u32string nfkc(std::u32string_view s);

// Simple per-code-point lowercase. Dotted capital I (U+0130) maps to plain
// "i" so Turkish I-variants fold to at most two letters (i, ı).
std::u32string to_lower(std::u32string_view s);
char32_t lower_cp(char32_t cp);

// NFKC then lowercase, UTF-8 in and out. Every piece of input text goes
// through this before counting, training, tokenizing, or scoring.
std::string normalize(std::string_view s);

// One-line description of the normalization pipeline, for run logs.
std::string_view normalization_notice();

bool is_space(char32_t cp);

// Splits on Unicode whitespace; empty tokens dropped.
std::vector<std::string> split_words(std::string_view s);

}  // namespace morpheval::text
