#include "morpheval/text.hpp"

#include <algorithm>

#include "unicode_data.hpp"

namespace morpheval::text {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Hangul syllable decomposition/composition constants (algorithmic).
constexpr char32_t kSBase = 0xAC00, kLBase = 0x1100, kVBase = 0x1161, kTBase = 0x11A7;
constexpr int kLCount = 19, kVCount = 21, kTCount = 28;
constexpr int kNCount = kVCount * kTCount;
constexpr int kSCount = kLCount * kNCount;

int ccc(char32_t cp) {
  const char32_t* end = unidata::kCccKey + unidata::kCccCount;
  const char32_t* it = std::lower_bound(unidata::kCccKey, end, cp);
  if (it != end && *it == cp) return unidata::kCccValue[it - unidata::kCccKey];
  return 0;
}

void decompose_cp(char32_t cp, std::u32string& out) {
  if (cp >= kSBase && cp < kSBase + kSCount) {
    char32_t s = cp - kSBase;
    out.push_back(kLBase + s / kNCount);
    out.push_back(kVBase + (s % kNCount) / kTCount);
    if (s % kTCount) out.push_back(kTBase + s % kTCount);
    return;
  }
  const char32_t* end = unidata::kNfkdKey + unidata::kNfkdCount;
  const char32_t* it = std::lower_bound(unidata::kNfkdKey, end, cp);
  if (it != end && *it == cp) {
    std::size_t idx = it - unidata::kNfkdKey;
    for (std::uint32_t i = unidata::kNfkdOffset[idx]; i < unidata::kNfkdOffset[idx + 1]; ++i)
      out.push_back(unidata::kNfkdPool[i]);
    return;
  }
  out.push_back(cp);
}

// Stable sort of combining marks by class; starters stay put.
void canonical_order(std::u32string& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    int cc = ccc(s[i]);
    if (cc == 0) continue;
    std::size_t j = i;
    while (j > 0) {
      int prev = ccc(s[j - 1]);
      if (prev == 0 || prev <= cc) break;
      std::swap(s[j - 1], s[j]);
      --j;
    }
  }
}

bool compose_pair(char32_t a, char32_t b, char32_t& out) {
  if (a >= kLBase && a < kLBase + kLCount && b >= kVBase && b < kVBase + kVCount) {
    out = kSBase + ((a - kLBase) * kVCount + (b - kVBase)) * kTCount;
    return true;
  }
  if (a >= kSBase && a < kSBase + kSCount && (a - kSBase) % kTCount == 0 && b > kTBase &&
      b < kTBase + kTCount) {
    out = a + (b - kTBase);
    return true;
  }
  const char32_t* first = unidata::kComposeFirst;
  const char32_t* last = first + unidata::kComposeCount;
  const char32_t* lo = std::lower_bound(first, last, a);
  for (const char32_t* it = lo; it != last && *it == a; ++it) {
    std::size_t idx = it - first;
    if (unidata::kComposeSecond[idx] == b) {
      out = unidata::kComposeResult[idx];
      return true;
    }
  }
  return false;
}

void canonical_compose(std::u32string& s) {
  if (s.empty()) return;
  std::u32string out;
  out.reserve(s.size());
  std::ptrdiff_t last_starter = -1;
  int prev_cc = 0;
  for (char32_t cp : s) {
    int cc = ccc(cp);
    if (last_starter >= 0) {
      bool adjacent = out.size() == static_cast<std::size_t>(last_starter) + 1;
      bool blocked = !adjacent && prev_cc >= cc;
      char32_t merged;
      if (!blocked && compose_pair(out[last_starter], cp, merged)) {
        out[last_starter] = merged;
        continue;
      }
    }
    out.push_back(cp);
    if (cc == 0) {
      last_starter = static_cast<std::ptrdiff_t>(out.size()) - 1;
      prev_cc = 0;
    } else {
      prev_cc = cc;
    }
  }
  s = std::move(out);
}

}  // namespace

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = s[i];
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    int len;
    char32_t cp;
    char32_t min;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2; cp = b0 & 0x1F; min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3; cp = b0 & 0x0F; min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4; cp = b0 & 0x07; min = 0x10000;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = i + len <= s.size();
    for (int k = 1; ok && k < len; ++k) {
      unsigned char bk = s[i + k];
      if ((bk & 0xC0) != 0x80) ok = false;
      else cp = (cp << 6) | (bk & 0x3F);
    }
    if (!ok || cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      out.push_back(kReplacement);
      ++i;  // resync at the next byte
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) append_utf8(out, cp);
  return out;
}

std::size_t cp_length(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) ++n;
  return n;
}

std::u32string nfkc(std::u32string_view s) {
  std::u32string buf;
  buf.reserve(s.size() + s.size() / 4);
  for (char32_t cp : s) decompose_cp(cp, buf);
  canonical_order(buf);
  canonical_compose(buf);
  return buf;
}

char32_t lower_cp(char32_t cp) {
  const char32_t* end = unidata::kLowerKey + unidata::kLowerCount;
  const char32_t* it = std::lower_bound(unidata::kLowerKey, end, cp);
  if (it != end && *it == cp) return unidata::kLowerValue[it - unidata::kLowerKey];
  return cp;
}

std::u32string to_lower(std::u32string_view s) {
  std::u32string out(s);
  for (char32_t& cp : out) cp = lower_cp(cp);
  return out;
}

std::string normalize(std::string_view s) {
  return encode_utf8(to_lower(nfkc(decode_utf8(s))));
}

std::string_view normalization_notice() {
  return "text normalization: NFKC + simple per-code-point lowercasing "
         "(U+0130 folds to plain i)";
}

bool is_space(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::u32string cps = decode_utf8(s);
  std::string cur;
  for (char32_t cp : cps) {
    if (is_space(cp)) {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      append_utf8(cur, cp);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace morpheval::text
