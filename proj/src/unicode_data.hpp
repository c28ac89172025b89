#pragma once

#include <cstddef>
#include <cstdint>

// Tables generated by tools/gen_unicode_data.py. Hangul syllables are not
// listed; they decompose and compose algorithmically.
namespace morpheval::unidata {

extern const char32_t kNfkdKey[];
extern const std::uint32_t kNfkdOffset[];  // kNfkdCount + 1 entries into kNfkdPool
extern const char32_t kNfkdPool[];
extern const std::size_t kNfkdCount;

extern const char32_t kCccKey[];
extern const std::uint8_t kCccValue[];
extern const std::size_t kCccCount;

extern const char32_t kLowerKey[];
extern const char32_t kLowerValue[];
extern const std::size_t kLowerCount;

extern const char32_t kComposeFirst[];   // sorted by (first, second)
extern const char32_t kComposeSecond[];
extern const char32_t kComposeResult[];
extern const std::size_t kComposeCount;

}  // namespace morpheval::unidata
